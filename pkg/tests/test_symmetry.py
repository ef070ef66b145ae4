import numpy as np
import pytest

from aqg.algebra import max_abs
from aqg.errors import AQGError
from aqg.symmetry import analyze_automorphism_pair, analyze_group_like, modular_element_suite

from conftest import POSITIVE, ctx_of, qg_of


def z4_inversion():
    a = np.zeros((4, 4))
    for i in range(4):
        a[(-i) % 4, i] = 1
    return a


def test_z4_inversion_lifts():
    c = ctx_of("group_z4")
    a = z4_inversion()
    pair = analyze_automorphism_pair(c.qg, c.gns, a, a, c.V, c.W)
    assert pair.report.passed, pair.report.format_text()
    assert abs(pair.r - 1) < 1e-12
    assert max_abs(pair.u - a) < 1e-12  # the permutation unitary
    assert max_abs(pair.alpha_u - a) < 1e-12


def test_non_automorphism_is_rejected():
    c = ctx_of("group_z4")
    a = np.eye(4)
    a[1, 1] = 2
    with pytest.raises(AQGError) as exc:
        analyze_automorphism_pair(c.qg, c.gns, a, a)
    assert exc.value.code == "NOT_INTERTWINING"


def test_sweedler_square_of_antipode_is_refused():
    qg = qg_of("sweedler")
    with pytest.raises(AQGError) as exc:
        analyze_automorphism_pair(qg, None, qg.S @ qg.S, qg.S @ qg.S)
    assert exc.value.code == "POSITIVITY_REQUIRED"


def test_kac_paljutkin_square_of_antipode():
    c = ctx_of("kac_paljutkin")
    S2 = c.qg.S @ c.qg.S
    assert max_abs(S2 - np.eye(8)) < 1e-12
    pair = analyze_automorphism_pair(c.qg, c.gns, S2, S2, c.V, c.W)
    assert pair.report.passed and abs(pair.r - 1) < 1e-12


@pytest.mark.parametrize("name", POSITIVE)
def test_one_parameter_groups_collapse(name):
    c = ctx_of(name)
    op = c.one_parameter
    assert op.report.passed, op.report.format_text()
    n = c.qg.dim
    for M in (op.nabla, op.P, op.Q):
        assert max_abs(M - np.eye(n)) < 1e-9
    assert op.nu == pytest.approx(1)


@pytest.mark.parametrize("name", POSITIVE)
def test_polar_decomposition(name):
    c = ctx_of(name)
    rep = c.polar.report
    assert rep.passed, rep.format_text()
    assert rep.get("polar.decomposition").residual < 1e-9


def test_kac_paljutkin_unitary_antipode_is_S():
    c = ctx_of("kac_paljutkin")
    assert max_abs(c.polar.R.matrix - c.qg.S) < 1e-9


def test_group_likes_of_z2():
    c = ctx_of("group_z2")
    g = analyze_group_like(c.qg, c.gns, np.array([0, 1]), c.one_parameter, c.polar)
    assert g.report.passed and g.kind == "unitary"
    assert g.lam == pytest.approx(1)
    with pytest.raises(AQGError) as exc:
        analyze_group_like(c.qg, c.gns, np.array([1, 1]), c.one_parameter, c.polar)
    assert exc.value.code == "NOT_GROUP_LIKE"


@pytest.mark.parametrize("name", POSITIVE)
def test_modular_element_positive(name):
    c = ctx_of(name)
    rep = modular_element_suite(c.qg, c.gns, c.one_parameter, c.polar)
    assert rep.passed, rep.format_text()
    assert not rep.skipped


def test_modular_element_sweedler():
    qg = qg_of("sweedler")
    rep = modular_element_suite(qg)
    assert rep.passed, rep.format_text()
    g = np.eye(4)[qg.algebra.labels.index("g")]
    assert max_abs(qg.modular.delta.coords - g) < 1e-12
    assert max_abs(qg.S @ g - g) < 1e-12  # delta^-1 = g
