import numpy as np
import pytest

from aqg.algebra import max_abs
from aqg.duality import X_report, dual_report, fourier_report, verify_biduality
from aqg.haar import haar_report, run_identity_suite
from aqg.hopf import check_comultiplication

from conftest import NAMES, POSITIVE, ctx_of, qg_of


@pytest.mark.parametrize("name", NAMES)
def test_dual_is_a_quantum_group(name):
    dual = ctx_of(name).dual
    rep = dual_report(dual, np.random.default_rng(0))
    assert rep.passed, rep.format_text()
    q = dual.qg
    for sub in (check_comultiplication(q.algebra, q.D, q.tol, strict=False), haar_report(q), run_identity_suite(q)):
        assert sub.passed, sub.format_text()


@pytest.mark.parametrize("name", NAMES)
def test_biduality(name):
    rep = verify_biduality(qg_of(name), ctx_of(name).dual)
    assert rep.passed, rep.format_text()


@pytest.mark.parametrize("name", NAMES)
def test_canonical_element(name):
    dual = ctx_of(name).dual
    rep = X_report(dual)
    assert rep.passed, rep.format_text()
    assert max_abs(qg_of(name).counit.covector @ dual.X - dual.algebra.unit) < 1e-12


def test_z2_canonical_element_pairs_group_with_indicators():
    # X = sum_g g (x) 1_g; the dual basis of C[Z2] is (1_e, 1_g)
    assert max_abs(ctx_of("group_z2").dual.X - np.eye(2)) < 1e-12


@pytest.mark.parametrize("name", POSITIVE)
def test_plancherel(name):
    dual = ctx_of(name).dual
    rep = fourier_report(dual, np.random.default_rng(11), samples=100)
    assert rep.get("fourier.plancherel").residual < 1e-9
    assert rep.passed, rep.format_text()


def test_sweedler_fourier_without_plancherel():
    rep = fourier_report(ctx_of("sweedler").dual, np.random.default_rng(11))
    assert rep.passed
    assert "fourier.plancherel" in [s["id"] for s in rep.skipped]


def test_dual_of_functions_is_the_group_algebra():
    d = ctx_of("function_s3").dual
    G = qg_of("group_s3")
    assert not d.algebra.is_commutative()
    # cocommutative comultiplication, as in any group algebra
    assert max_abs(np.transpose(d.D, (1, 0, 2)) - d.D) < 1e-12
    assert d.dim == G.dim


def test_kac_paljutkin_dual_passes():
    rep = dual_report(ctx_of("kac_paljutkin").dual, np.random.default_rng(3))
    assert rep.passed
