import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aqg.algebra import FiniteStarAlgebra, TensorStarAlgebra, axiom_residuals, max_abs
from aqg.generate import generate_example, validate_group, GROUPS
from aqg.errors import AQGError

from conftest import NAMES, qg_of


def test_sweedler_xg_is_minus_gx():
    A = qg_of("sweedler").algebra
    g, x, gx = (np.eye(4)[A.labels.index(s)] for s in ("g", "x", "gx"))
    assert max_abs(A.product(x, g) + gx) == 0
    assert max_abs(A.product(g, x) - gx) == 0


@pytest.mark.parametrize("name", NAMES)
def test_axioms_exact(name):
    res = axiom_residuals(qg_of(name).algebra)
    assert max(res.values()) < 1e-12


@st.composite
def elements(draw, name):
    n = qg_of(name).dim
    vals = draw(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False), min_size=n, max_size=n))
    return np.array(vals)


@settings(max_examples=40, deadline=None)
@given(data=st.data(), name=st.sampled_from(NAMES))
def test_star_algebra_laws_on_random_elements(data, name):
    A = qg_of(name).algebra
    a, b, c = (data.draw(elements(name)) for _ in range(3))
    scale = 1 + max(np.abs(a).max(), np.abs(b).max(), np.abs(c).max()) ** 3
    assert max_abs(A.product(A.product(a, b), c) - A.product(a, A.product(b, c))) < 1e-12 * scale
    assert max_abs(A.involve(A.product(a, b)) - A.product(A.involve(b), A.involve(a))) < 1e-12 * scale
    assert max_abs(A.involve(A.involve(a)) - a) < 1e-12 * scale
    assert max_abs(A.product(A.unit, a) - a) < 1e-12 * scale
    # the star is antilinear
    assert max_abs(A.involve(1j * a) + 1j * A.involve(a)) < 1e-12 * scale


@settings(max_examples=25, deadline=None)
@given(data=st.data(), name=st.sampled_from(NAMES))
def test_lmult_rmult_are_the_regular_representations(data, name):
    A = qg_of(name).algebra
    a, b = data.draw(elements(name)), data.draw(elements(name))
    assert max_abs(A.lmult(a) @ b - A.product(a, b)) < 1e-10
    assert max_abs(A.rmult(b) @ a - A.product(a, b)) < 1e-10


def test_tensor_product_matches_kron_structure(rng):
    A = qg_of("kac_paljutkin").algebra
    B = qg_of("sweedler").algebra
    T = TensorStarAlgebra([A, B])
    a1, a2 = A.random_element(rng).coords, A.random_element(rng).coords
    b1, b2 = B.random_element(rng).coords, B.random_element(rng).coords
    lhs = T.product(np.kron(a1, b1), np.kron(a2, b2))
    assert max_abs(lhs - np.kron(A.product(a1, a2), B.product(b1, b2))) < 1e-12
    assert max_abs(T.involve(np.kron(a1, b1)) - np.kron(A.involve(a1), B.involve(b1))) < 1e-12
    # full structure constants agree with the factorwise product
    x, y = T.random_element(rng).coords, T.random_element(rng).coords
    assert max_abs(np.einsum("i,j,ijk->k", x, y, T.mult) - T.product(x, y)) < 1e-11


def test_from_matrices_recovers_the_matrix_algebra():
    E = np.zeros((4, 2, 2))
    for k, (i, j) in enumerate([(0, 0), (0, 1), (1, 0), (1, 1)]):
        E[k, i, j] = 1
    A = FiniteStarAlgebra.from_matrices(E)
    assert A.dim == 4
    assert max(axiom_residuals(A).values()) < 1e-12
    assert not A.is_commutative()


def test_generated_group_kinds():
    d = generate_example("function_algebra", "s3")
    assert d.dimension == 6
    qg = load_def(d)
    assert qg.algebra.is_commutative()
    cocomm = np.transpose(qg.D, (1, 0, 2))
    assert max_abs(cocomm - qg.D) > 0.5


def load_def(d):
    from aqg.hopf import QuantumGroup

    return QuantumGroup.from_definition(d)


def test_not_a_group_is_rejected():
    with pytest.raises(AQGError) as exc:
        validate_group([[0, 1], [0, 1]])
    assert exc.value.code == "NOT_A_GROUP"
    with pytest.raises(AQGError) as exc:
        generate_example("group_algebra", table=[[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    assert exc.value.code == "NOT_A_GROUP"


@pytest.mark.parametrize("group", sorted(GROUPS))
def test_all_named_groups_validate(group):
    validate_group(GROUPS[group][0]())
