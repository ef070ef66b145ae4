import numpy as np
import pytest

from aqg.algebra import max_abs
from aqg.haar import haar_report, run_identity_suite

from conftest import NAMES, POSITIVE, oracle, qg_of, ORACLE


@pytest.mark.parametrize("name", NAMES)
def test_haar_matches_oracle(name):
    assert max_abs(qg_of(name).haar.phi.covector - oracle(name, "haar")) < 1e-12


def test_group_z2_haar():
    phi = qg_of("group_z2").haar.phi.covector
    assert phi[0] == pytest.approx(1)
    assert abs(phi[1]) < 1e-15


def test_function_z2_is_uniform():
    assert np.allclose(qg_of("function_z2").haar.phi.covector, [0.5, 0.5])


def test_sweedler_classification():
    h = qg_of("sweedler").haar
    assert h.faithful and not h.positive
    eig = np.sort_complex(np.round(np.linalg.eigvals(h.gram), 9))
    ref = np.sort_complex(oracle("sweedler", "gram_eigenvalues"))
    assert max_abs(eig - ref) < 1e-12


@pytest.mark.parametrize("name", POSITIVE)
def test_positive_examples_are_states(name):
    h = qg_of(name).haar
    assert h.positive and h.faithful
    eig = np.linalg.eigvalsh(h.gram)
    ref = np.sort(oracle(name, "gram_eigenvalues").real)
    assert max_abs(eig - ref) < 1e-12


@pytest.mark.parametrize("name", NAMES)
def test_rho_delta_mu_match_oracle(name):
    mod = qg_of(name).modular
    assert max_abs(mod.rho.matrix - oracle(name, "rho")) < 1e-12
    assert max_abs(mod.delta.coords - oracle(name, "delta")) < 1e-12
    assert abs(mod.mu - oracle(name, "mu")) < 1e-12


def test_sweedler_non_trivial_modular_data():
    qg = qg_of("sweedler")
    mod = qg.modular
    g = np.eye(4)[qg.algebra.labels.index("g")]
    assert max_abs(mod.delta.coords - g) < 1e-12
    assert max_abs(mod.rho.matrix - np.eye(4)) > 0.5
    assert mod.mu == pytest.approx(-1)


def test_kac_paljutkin_is_tracial():
    assert max_abs(qg_of("kac_paljutkin").modular.rho.matrix - np.eye(8)) < 1e-12


@pytest.mark.parametrize("name", POSITIVE)
def test_positive_examples_are_unimodular(name):
    mod = qg_of(name).modular
    assert max_abs(mod.delta.coords - qg_of(name).algebra.unit) < 1e-12
    assert mod.mu == pytest.approx(1)


@pytest.mark.parametrize("name", NAMES)
def test_reports_pass(name):
    qg = qg_of(name)
    for rep in (haar_report(qg), run_identity_suite(qg)):
        assert rep.passed, rep.format_text()


def test_oracle_covers_every_example():
    assert sorted(ORACLE) == sorted(NAMES)
