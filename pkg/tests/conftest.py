import json
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

from aqg import BUNDLED, load
from aqg.pipeline import Context

NAMES = list(BUNDLED)
POSITIVE = [n for n in NAMES if n != "sweedler"]
ORACLE = json.loads((Path(__file__).parent / "oracle" / "values.json").read_text(encoding="utf-8"))


def oracle(name, key):
    a = np.array(ORACLE[name][key], dtype=float)
    return a[..., 0] + 1j * a[..., 1]


@lru_cache(maxsize=None)
def qg_of(name):
    return load(name)


@lru_cache(maxsize=None)
def ctx_of(name):
    return Context(qg_of(name))


@pytest.fixture(params=NAMES)
def name(request):
    return request.param


@pytest.fixture(params=POSITIVE)
def positive_name(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
