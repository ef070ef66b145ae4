import numpy as np
import pytest

from aqg.algebra import FiniteStarAlgebra, max_abs
from aqg.errors import AQGError
from aqg.universal import (
    Corepresentation,
    U_report,
    V_report,
    b_algebra_report,
    bijection_report,
    build_universal,
    character_corep,
    lift_corep,
    lift_report,
    matrix_units,
    trivial_corep,
    universal_report,
)

from conftest import POSITIVE, ctx_of, qg_of


@pytest.mark.parametrize("name", POSITIVE)
def test_universal_norm_is_reduced_norm(name):
    c = ctx_of(name)
    rep = universal_report(c.universal, np.random.default_rng(2), samples=100)
    assert rep.passed, rep.format_text()


def test_counit_is_bounded_by_universal_norm():
    c = ctx_of("kac_paljutkin")
    rng = np.random.default_rng(9)
    eps = c.qg.counit.covector
    for _ in range(100):
        a = c.qg.algebra.random_element(rng).coords
        assert abs(eps @ a) <= c.universal.norm_u(a) + 1e-9


def test_universal_refuses_non_positive():
    with pytest.raises(AQGError) as exc:
        build_universal(qg_of("sweedler"), None)
    assert exc.value.code == "POSITIVITY_REQUIRED"


@pytest.mark.parametrize("name", POSITIVE)
def test_V_and_U(name):
    c = ctx_of(name)
    rng = np.random.default_rng(4)
    for rep in (V_report(c.qg, c.gns, c.V, c.W, c.dual, rng),
                U_report(c.qg, c.dual, c.universal, c.dual_universal, c.U, c.W, c.V)):
        assert rep.passed, rep.format_text()


def test_z2_V_is_W_and_U_is_X():
    c = ctx_of("group_z2")
    assert max_abs(c.V.matrix(c.gns.pi) - c.W.matrix) < 1e-12
    assert max_abs(c.dual.X - np.eye(2)) < 1e-12


def _coreps(c):
    carrier = FiniteStarAlgebra.from_matrices(c.dual_gns.pi)
    return {
        "U": Corepresentation(c.qg, c.dual.algebra, c.dual.X, "universal", "U"),
        "trivial": trivial_corep(c.qg),
        "W": Corepresentation.from_operator(c.qg, c.gns.pi, carrier, c.W.matrix, name="W"),
    }


@pytest.mark.parametrize("name", POSITIVE)
def test_corep_hom_bijection(name):
    c = ctx_of(name)
    coreps = _coreps(c)
    for label, corep in coreps.items():
        rep, theta = bijection_report(corep, c.dual, label)
        assert rep.passed, rep.format_text()
        assert b_algebra_report(corep, c.gns, label).passed
        if label in ("U", "W"):
            assert max_abs(theta.matrix - np.eye(c.qg.dim)) < 1e-9
        else:
            assert max_abs(theta.matrix[0] - c.dual.qg.counit.covector) < 1e-12


def test_z2_character_corep_round_trip_and_lift():
    c = ctx_of("group_z2")
    chars = character_corep(c.qg, [np.array([1, 0]), np.array([0, 1])])
    rep, _ = bijection_report(chars, c.dual, "characters")
    assert rep.passed, rep.format_text()
    lifted = lift_corep(chars, c.gns.pi)
    rep = lift_report(lifted, chars, c.V, c.gns, "characters")
    assert rep.passed, rep.format_text()


def test_non_group_like_character_is_rejected():
    c = ctx_of("group_z2")
    with pytest.raises(AQGError) as exc:
        character_corep(c.qg, [np.array([1, 1])]).check()
    assert exc.value.code == "NOT_COREP"


@pytest.mark.parametrize("name", POSITIVE)
def test_lift_of_W_is_V(name):
    c = ctx_of(name)
    Mn = matrix_units(c.qg.dim)
    Wc = Corepresentation.from_operator(c.qg, c.gns.pi, Mn, c.W.matrix, name="W")
    lifted = lift_corep(Wc, c.gns.pi)
    assert lift_report(lifted, Wc, c.V, c.gns, "W").passed
    assert max_abs(np.einsum("ic,cab->iab", lifted.coeffs, Mn.matrices) - c.V.ops) < 1e-9
