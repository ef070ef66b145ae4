"""The universal C*-level at finite dimension: A_u, the left regular
corepresentation V, the universal corepresentation U and the bijection
between corepresentations and *-homomorphisms on the dual.

A_u is realized concretely through pi_r.  Its norm is computed
intrinsically, as the square root of the spectral radius of a*a in A, so
comparing it with the operator norm of pi_r(a) is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import FiniteStarAlgebra, TensorStarAlgebra, max_abs
from .errors import AQGError
from .gns import BigUnitary, defining_matrix, gns_of_functional
from .legs import embed, is_unitary
from .report import OPERATOR, SCALAR, Report


class MixedElement:
    """sum_i e_i (x) ops[i] in A (x) B(H)."""

    def __init__(self, algebra, ops):
        self.algebra = algebra
        self.ops = np.asarray(ops, dtype=complex)

    @classmethod
    def one_tensor(cls, algebra, op):
        return cls(algebra, np.einsum("i,ab->iab", algebra.unit, op))

    def __mul__(self, other):
        ops = np.einsum("ijk,iab,jbc->kac", self.algebra.mult, self.ops, other.ops)
        return MixedElement(self.algebra, ops)

    def star(self):
        K = self.algebra.K
        return MixedElement(self.algebra, np.einsum("ji,iba->jab", K, self.ops.conj()))

    def matrix(self, pi):
        return np.einsum("iab,icd->acbd", pi, self.ops).reshape(pi.shape[1] * self.ops.shape[1], -1)

    def slice(self, p, q):
        """(id (x) omega_{p,q}): coordinates of sum_i <ops[i] p, q> e_i."""
        return np.einsum("b,iba,a->i", np.conj(q), self.ops, p)

    def distance(self, other):
        return max_abs(self.ops - other.ops)


def spectral_norm(A, x):
    """C*-norm of x in A, from the spectrum of x*x."""
    xx = A.product(A.involve(x), x)
    return float(np.sqrt(np.max(np.abs(np.linalg.eigvals(A.lmult(xx))))))


@dataclass
class UniversalRealization:
    qg: object
    gns: object
    pi_u: np.ndarray  # pi_u(e_i), acting on the GNS space
    registry: dict = field(default_factory=dict)

    def norm_u(self, x):
        return spectral_norm(self.qg.algebra, np.asarray(x))

    def represent(self, x):
        return np.einsum("i,ijk->jk", np.asarray(x), self.pi_u)

    def pi(self, X):
        """A_u -> A_r; the identity on the concrete realization."""
        return X

    def register(self, name, stack):
        self.registry[name] = np.asarray(stack, dtype=complex)

    def delta_u(self, k):
        pi = self.pi_u
        d = pi.shape[1]
        return np.einsum("ij,iab,jcd->acbd", self.qg.D[:, :, k], pi, pi).reshape(d * d, d * d)


def build_universal(qg, gns):
    if not qg.positive:
        raise AQGError("POSITIVITY_REQUIRED", f"{qg.name} has no positive faithful Haar functional")
    u = UniversalRealization(qg, gns, gns.pi.copy())
    pi, D, eps = gns.pi, qg.D, qg.counit.covector
    d = pi.shape[1]
    u.register("pi_r", pi)
    u.register("counit", eps.reshape(-1, 1, 1))
    u.register("counit_x_pi_r", np.einsum("ijk,i,jab->kab", D, eps, pi))
    u.register("pi_r_x_pi_r_delta", np.einsum("ijk,iab,jcd->kacbd", D, pi, pi).reshape(qg.dim, d * d, d * d))
    return u


def _is_star_hom(A, stack):
    mult = max_abs(np.einsum("ijk,kab->ijab", A.mult, stack) - np.einsum("iab,jbc->ijac", stack, stack))
    star = max_abs(np.einsum("ki,kab->iab", A.K, stack) - np.transpose(stack.conj(), (0, 2, 1)))
    unit = max_abs(np.einsum("i,iab->ab", A.unit, stack) - np.eye(stack.shape[1]))
    return mult, star, unit


def universal_report(u, rng, samples=100):
    qg = u.qg
    A = qg.algebra
    n = A.dim
    rep = Report(f"universal realization of {qg.name}", qg.tol)
    rank = np.linalg.matrix_rank(np.array([u.pi(X).reshape(-1) for X in u.pi_u]), tol=1e-9)
    rep.check("universal.pi_kernel", "pi: A_u -> A_r has trivial kernel", abs(rank - n), tol=0.5, norm="dimension")
    rep.check("universal.pi_pi_u", "pi o pi_u = pi_r", max_abs(np.array([u.pi(X) for X in u.pi_u]) - u.gns.pi), norm=OPERATOR)
    rep.check("universal.norm_unit", "||1||_u = 1", abs(u.norm_u(A.unit) - 1), norm=SCALAR)
    xs = [A.random_element(rng).coords for _ in range(samples)]
    norms = [u.norm_u(x) for x in xs]
    res = max(abs(nu - np.linalg.norm(u.gns.represent(x), 2)) for x, nu in zip(xs, norms))
    rep.check("universal.norm_equals_reduced", "||pi_u(a)|| = ||pi_r(a)||", res, norm=SCALAR)
    basis = u.pi_u.reshape(n, -1).T
    for name, stack in u.registry.items():
        mult, star, unit = _is_star_hom(A, stack)
        rep.check(f"universal.registry[{name}].star_hom", "registered map is a unital *-representation", max(mult, star, unit), norm=OPERATOR)
        # theta = theta~ o pi_u for a linear theta~ on pi_u(A)
        fmap, *_ = np.linalg.lstsq(basis.T, stack.reshape(n, -1), rcond=None)
        rep.check(f"universal.registry[{name}].factors", "theta factors through pi_u",
                  max_abs(basis.T @ fmap - stack.reshape(n, -1)), norm=OPERATOR)
        excess = max(np.linalg.norm(np.einsum("i,iab->ab", x, stack), 2) - nu for x, nu in zip(xs, norms))
        rep.check(f"universal.registry[{name}].norm_bound", "||theta(a)|| <= ||a||_u", max(0.0, excess), norm=SCALAR)
    eps = qg.counit.covector
    D = qg.D
    pi = u.pi_u
    left = np.einsum("ijk,i,jab->kab", D, eps, pi)
    right = np.einsum("ijk,j,iab->kab", D, eps, pi)
    rep.check("universal.counit_u", "(eps_u (x) id)Delta_u = (id (x) eps_u)Delta_u = id",
              max(max_abs(left - pi), max_abs(right - pi)), norm=OPERATOR)
    du = np.array([u.delta_u(k) for k in range(n)])
    mult, star, unit = _is_star_hom(A, du)
    rep.check("universal.delta_u_star_hom", "Delta_u is a unital *-homomorphism", max(mult, star, unit), norm=OPERATOR)
    rank = np.linalg.matrix_rank(du.reshape(n, -1), tol=1e-9)
    rep.check("universal.delta_u_injective", "Delta_u is injective", abs(rank - n), tol=0.5, norm="dimension")
    return rep


def build_V(qg, gns, universal=None):
    """Left regular corepresentation as an element of A_u (x) B(H)."""
    A = qg.algebra
    n = A.dim
    I = np.eye(n)
    Y = defining_matrix(qg)
    IL = np.kron(I, gns.L)
    # V(pi_u (x) Lambda)(Delta(b)(a (x) 1)) = pi_u(a) (x) Lambda(b)
    Vmod = IL @ np.linalg.solve(Y, np.linalg.inv(IL))
    ops = (Vmod @ np.kron(A.unit[:, None], I)).reshape(n, n, n)
    V = MixedElement(A, ops)
    V.module_matrix = Vmod
    return V


def V_report(qg, gns, V, W, dual, rng, samples=20):
    A = qg.algebra
    n = A.dim
    rep = Report(f"left regular corepresentation of {qg.name}", qg.tol)
    lm = np.einsum("iab,icd->acbd", A.left_regular, V.ops).reshape(n * n, n * n)
    rep.check("V.left_multiplier", "V is left multiplication by an element of A_u (x) B(H)",
              max_abs(lm - V.module_matrix), norm=OPERATOR)
    one = MixedElement.one_tensor(A, np.eye(n))
    rep.check("V.unitary", "V*V = VV* = 1",
              max((V.star() * V).distance(one), (V * V.star()).distance(one)), norm=OPERATOR)
    l1 = gns.L @ A.unit
    rep.check("V.unit_vector", "V(pi_u(1) (x) Lambda(1)) = pi_u(1) (x) Lambda(1)",
              max_abs(V.module_matrix @ np.kron(A.unit, l1) - np.kron(A.unit, l1)))
    Vm = V.matrix(gns.pi)
    rep.check("V.lifts_to_W", "(pi (x) id)(V) = W", max_abs(Vm - W.matrix), norm=OPERATOR)
    B = qg.haar.bilinear
    L = gns.L
    res = 0.0
    for a in range(n):
        for b in range(n):
            x = np.einsum("k,ijk,j->i", A.K[:, b], qg.D, B[:, a])
            res = max(res, max_abs(V.slice(L[:, a], L[:, b]) - x))
    rep.check("V.slice", "(id (x) omega_{Lambda(a),Lambda(b)})(V) = pi_u((id (x) phi)(Delta(b*)(1 (x) a)))", res)
    lhs = np.einsum("ijk,kab->ijab", qg.D, V.ops)
    rhs = np.einsum("iab,jbc->ijac", V.ops, V.ops)
    rep.check("V.corep_left", "(Delta_u (x) id)(V) = V13 V23", max_abs(lhs - rhs), norm=OPERATOR)
    Wm = W.matrix
    Ws = Wm.conj().T
    lhs = np.array([Wm @ np.kron(V.ops[k], np.eye(n)) @ Ws for k in range(n)])
    rhs = np.einsum("ijk,iab,jcd->kacbd", A.mult, V.ops, V.ops).reshape(n, n * n, n * n)
    rep.check("V.corep_right", "(id (x) Delta^_r)(V) = V12 V13", max_abs(lhs - rhs), norm=OPERATOR)
    res = 0.0
    Vs = V.star()
    for k in range(n):
        delta = MixedElement(A, np.einsum("ij,jab->iab", qg.D[:, :, k], gns.pi))
        impl = Vs * MixedElement.one_tensor(A, gns.pi[k]) * V
        res = max(res, delta.distance(impl))
    rep.check("V.implements_delta", "(id (x) pi)Delta_u(a) = V*(1 (x) pi(a))V", res, norm=OPERATOR)
    J = gns.J
    Nm = _hpow(gns.nabla, -0.5)
    Np = _hpow(gns.nabla, 0.5)
    res = 0.0
    for _ in range(samples):
        p = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        q = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        res = max(res, max_abs(Vs.slice(p, q) - V.slice(J(Nm @ q), J(Np @ p))))
    rep.check("V.adjoint_slice", "(id (x) omega_{p,q})(V*) = (id (x) omega_{J nabla^-1/2 q, J nabla^1/2 p})(V)", res)
    return rep


def _hpow(H, p):
    from .gns import hermitian_power

    return hermitian_power(H, p)


def build_U(qg, dual, universal, dual_universal):
    """U = (pi_u (x) pi^_u)(X) on H (x) H."""
    n = qg.dim
    pi, pih = universal.pi_u, dual_universal.pi_u
    U = np.einsum("ij,iab,jcd->acbd", dual.X, pi, pih).reshape(n * n, n * n)
    return BigUnitary(U, (n, n), "U")


def U_report(qg, dual, universal, dual_universal, U, W, V):
    n = qg.dim
    A, Ah = qg.algebra, dual.algebra
    rep = Report(f"universal corepresentation of {qg.name}", qg.tol)
    Um = U.matrix
    rep.check("U.unitary", "U*U = UU* = 1", U.unitarity_residual(), norm=OPERATOR)
    pi, pih = universal.pi_u, dual_universal.pi_u
    X = dual.X
    dims = (n, n, n)
    lhs = sum(X[k, l] * np.kron(universal.delta_u(k), pih[l]) for k in range(n) for l in range(n))
    rhs = embed(Um, (0, 2), dims) @ embed(Um, (1, 2), dims)
    rep.check("U.corep_left", "(Delta_u (x) id)(U) = U13 U23", max_abs(lhs - rhs), norm=OPERATOR)
    lhs = sum(X[k, l] * np.kron(pi[k], dual_universal.delta_u(l)) for k in range(n) for l in range(n))
    rhs = embed(Um, (0, 1), dims) @ embed(Um, (0, 2), dims)
    rep.check("U.corep_right", "(id (x) Delta^_u)(U) = U12 U13", max_abs(lhs - rhs), norm=OPERATOR)
    rep.check("U.reduces_to_W", "(pi (x) pi^)(U) = W", max_abs(Um - W.matrix), norm=OPERATOR)
    Vh = np.einsum("ij,jab->iab", X, pih)
    rep.check("U.reduces_to_V", "(id (x) pi^)(U) = V", max_abs(Vh - V.ops), norm=OPERATOR)
    L = universal.gns.L
    B = qg.haar.bilinear
    phi = qg.haar.phi.covector
    res1 = res2 = 0.0
    for a in range(n):
        for b in range(n):
            x = np.einsum("k,ijk,j->i", A.K[:, b], qg.D, B[:, a])
            res1 = max(res1, max_abs(U.slice_right(L[:, a], L[:, b]) - universal.represent(x)))
            # a phi b*: x -> phi(b* x a)
            bs = A.involve(np.eye(n)[b])
            cov = np.array([phi @ A.product(A.product(bs, np.eye(n)[k]), np.eye(n)[a]) for k in range(n)])
            w = dual.from_covector(cov)
            res2 = max(res2, max_abs(U.slice_left(L[:, a], L[:, b]) - dual_universal.represent(w)))
    rep.check("U.slice_right_leg", "(id (x) omega^'_{Lambda(a),Lambda(b)})(U) = pi_u((id (x) phi)(Delta(b*)(1 (x) a)))", res1, norm=OPERATOR)
    rep.check("U.slice_left_leg", "(omega'_{Lambda(a),Lambda(b)} (x) id)(U) = pi^_u(a phi b*)", res2, norm=OPERATOR)
    I = np.eye(n)
    sl = np.array([U.slice_right(I[p], I[q]).reshape(-1) for p in range(n) for q in range(n)])
    sr = np.array([U.slice_left(I[p], I[q]).reshape(-1) for p in range(n) for q in range(n)])
    r1 = np.linalg.matrix_rank(sl, tol=1e-9)
    r2 = np.linalg.matrix_rank(sr, tol=1e-9)
    rep.check("U.density", "span (id (x) omega)(U) and span (omega (x) id)(U) have dimension n",
              max(abs(r1 - n), abs(r2 - n)), tol=0.5, norm="dimension")
    return rep


def dual_gns(dual):
    """GNS data of psi^ on the dual, for which Lambda^(a^) = Lambda(a)."""
    return gns_of_functional(dual.algebra, dual.psi_hat, dual.base.tol)


class Corepresentation:
    """A unitary corepresentation as coefficients coeffs[i, c] in A (x) C."""

    def __init__(self, qg, carrier, coeffs, side="algebraic", name=""):
        self.qg = qg
        self.carrier = carrier
        self.coeffs = np.asarray(coeffs, dtype=complex).reshape(qg.dim, carrier.dim)
        self.side = side
        self.name = name

    @classmethod
    def from_operator(cls, qg, pi, carrier, matrix, side="reduced", name=""):
        """Decompose sum_{i,c} z[i,c] pi(e_i) (x) C(c) given as an operator; C needs ``matrices``."""
        n = qg.dim
        basis = np.einsum("iab,xcd->ixacbd", pi, carrier.matrices)
        basis = basis.reshape(n * carrier.dim, -1).T
        z, *_ = np.linalg.lstsq(basis, np.asarray(matrix).reshape(-1), rcond=None)
        res = max_abs(basis @ z - np.asarray(matrix).reshape(-1))
        if res >= qg.tol:
            raise AQGError("NOT_COREP", f"operator is not in A_r (x) C (residual {res:.3g})")
        out = cls(qg, carrier, z.reshape(n, carrier.dim), side, name)
        out.operator = np.asarray(matrix)
        return out

    def tensor_algebra(self):
        return TensorStarAlgebra([self.qg.algebra, self.carrier])

    def residuals(self):
        qg, C = self.qg, self.carrier
        A = qg.algebra
        U = self.coeffs
        # (Delta (x) id)(U) = U13 U23, coefficientwise in A (x) A (x) C
        lhs = np.einsum("ijk,kc->ijc", qg.D, U)
        rhs = np.einsum("ia,jb,abc->ijc", U, U, C.mult, optimize=True)
        corep = max_abs(lhs - rhs)
        Us = np.einsum("pi,qa,ia->pq", A.K, C.K, U.conj())
        one = np.outer(A.unit, C.unit)
        prod = lambda X, Y: np.einsum("ia,jb,ijk,abc->kc", X, Y, A.mult, C.mult, optimize=True)
        unitary = max(max_abs(prod(Us, U) - one), max_abs(prod(U, Us) - one))
        return corep, unitary

    def check(self, tol=None):
        tol = self.qg.tol if tol is None else tol
        corep, unitary = self.residuals()
        if corep >= tol or unitary >= tol:
            raise AQGError("NOT_COREP", f"not a unitary corepresentation (corep {corep:.3g}, unitary {unitary:.3g})")


class StarHom:
    """theta: A^ -> C with theta(e_j^) = sum_c Theta[c, j] f_c."""

    def __init__(self, source, carrier, matrix):
        self.source = source
        self.carrier = carrier
        self.matrix = np.asarray(matrix, dtype=complex)

    def residuals(self):
        S, C, Th = self.source, self.carrier, self.matrix
        lhs = np.einsum("ijk,ck->ijc", S.mult, Th)
        rhs = np.einsum("ai,bj,abc->ijc", Th, Th, C.mult)
        mult = max_abs(lhs - rhs)
        star = max_abs(Th @ S.K - C.K @ np.conj(Th))
        unit = max_abs(Th @ S.unit - C.unit)
        return mult, star, unit


def corep_to_hom(corep, dual):
    """theta(w) = (w (x) id)(U)."""
    corep.check()
    theta = StarHom(dual.algebra, corep.carrier, (dual.P @ corep.coeffs).T)
    mult, star, unit = theta.residuals()
    if max(mult, star, unit) >= corep.qg.tol:
        raise AQGError("NOT_STAR_HOM", f"slice map is not a unital *-homomorphism ({max(mult, star, unit):.3g})")
    return theta


def hom_to_corep(theta, dual, name=""):
    """(id (x) theta)(X)."""
    mult, star, unit = theta.residuals()
    if max(mult, star, unit) >= dual.base.tol:
        raise AQGError("NOT_STAR_HOM", f"map is not a unital *-homomorphism ({max(mult, star, unit):.3g})")
    corep = Corepresentation(dual.base, theta.carrier, dual.X @ theta.matrix.T, "algebraic", name)
    corep.check()
    return corep


def bijection_report(corep, dual, label):
    rep = Report(f"corepresentation {label}", corep.qg.tol)
    corep_res, unitary = corep.residuals()
    rep.check(f"corep[{label}].corep", "(Delta (x) id)(U) = U13 U23", corep_res)
    rep.check(f"corep[{label}].unitary", "U*U = UU* = 1", unitary)
    theta = corep_to_hom(corep, dual)
    m, s, u = theta.residuals()
    rep.check(f"corep[{label}].theta_star_hom", "theta is a unital *-homomorphism", max(m, s, u))
    back = hom_to_corep(theta, dual)
    rep.check(f"corep[{label}].round_trip_corep", "hom_to_corep(corep_to_hom(U)) = U", max_abs(back.coeffs - corep.coeffs))
    again = corep_to_hom(back, dual)
    rep.check(f"corep[{label}].round_trip_hom", "corep_to_hom(hom_to_corep(theta)) = theta", max_abs(again.matrix - theta.matrix))
    return rep, theta


def b_algebra_report(corep, gns, label):
    """Slices (omega_{p,q} (x) id)(U) span a *-subalgebra B of C with BC = C."""
    qg, C = corep.qg, corep.carrier
    n = qg.dim
    L = gns.L
    rep = Report(f"B-algebra of {label}", qg.tol)
    # (omega_{Lambda(a),Lambda(b)} (x) id)(U) = sum_i <pi(e_i) Lambda(a), Lambda(b)> U[i]
    Bv = np.array([
        np.einsum("i,ic->c", np.einsum("b,iba,a->i", np.conj(L[:, b]), gns.pi, L[:, a]), corep.coeffs)
        for a in range(n) for b in range(n)
    ])
    r = np.linalg.matrix_rank(Bv, tol=1e-9)
    prods = np.array([C.product(x, y) for x in Bv for y in Bv])
    stars = np.array([C.involve(x) for x in Bv])
    r_closed = np.linalg.matrix_rank(np.vstack([Bv, prods, stars]), tol=1e-9)
    rep.check(f"B[{label}].closed", "B B and B* lie in B", abs(r_closed - r), tol=0.5, norm="dimension")
    rep.check(f"B[{label}].square", "B^2 = B", abs(np.linalg.matrix_rank(prods, tol=1e-9) - r), tol=0.5, norm="dimension")
    BC = np.array([C.product(x, C.basis_element(c).coords) for x in Bv for c in range(C.dim)])
    rep.check(f"B[{label}].nondegenerate", "span B C = C", abs(np.linalg.matrix_rank(BC, tol=1e-9) - C.dim), tol=0.5, norm="dimension")
    rep.info[f"B[{label}].dimension"] = int(r)
    return rep


def lift_corep(corep, pi):
    """U_u with (pi (x) id)(U_u) = U; at finite dimension pi is invertible on coefficients."""
    rank = np.linalg.matrix_rank(pi.reshape(pi.shape[0], -1), tol=1e-9)
    if rank < corep.qg.dim:
        raise AQGError("NOT_COREP", "reduced representation is not injective")
    corep.check()
    return Corepresentation(corep.qg, corep.carrier, corep.coeffs.copy(), "universal", corep.name + "_u")


def lift_report(lifted, reduced, V, gns, label):
    """(pi (x) id)(U_u) = U and (U_u)13 = V12* U23 V12 U23*."""
    qg, C = reduced.qg, reduced.carrier
    n = qg.dim
    rep = Report(f"lift of {label}", qg.tol)
    Cmat = carrier_matrices(C)
    dc = Cmat.shape[1]
    Ured = np.einsum("ic,iab,cxy->axby", reduced.coeffs, gns.pi, Cmat).reshape(n * dc, n * dc)
    if hasattr(reduced, "operator") and reduced.operator.shape == Ured.shape and getattr(C, "matrices", None) is not None:
        rep.check(f"lift[{label}].operator", "coefficients reproduce the given operator", max_abs(Ured - reduced.operator), norm=OPERATOR)
    Ulift = np.einsum("ic,iab,cxy->axby", lifted.coeffs, gns.pi, Cmat).reshape(n * dc, n * dc)
    rep.check(f"lift[{label}].reduces", "(pi (x) id)(U_u) = U", max_abs(Ulift - Ured), norm=OPERATOR)
    dims = (n, n, dc)
    Vm = V.matrix(gns.pi)
    V12 = embed(Vm, (0, 1), dims)
    U23 = embed(Ured, (1, 2), dims)
    U13 = embed(Ulift, (0, 2), dims)
    rhs = V12.conj().T @ U23 @ V12 @ U23.conj().T
    rep.check(f"lift[{label}].formula", "(U_u)13 = V12* U23 V12 U23*", max_abs(U13 - rhs), norm=OPERATOR)
    corep_res, unitary = lifted.residuals()
    rep.check(f"lift[{label}].corep", "(Delta_u (x) id)(U_u) = (U_u)13 (U_u)23", corep_res)
    return rep


def carrier_matrices(C):
    """A faithful matrix picture of C: its own matrices if given, else the left regular one."""
    mats = getattr(C, "matrices", None)
    if mats is not None:
        return np.asarray(mats)
    return C.left_regular.copy()


def trivial_corep(qg):
    C = FiniteStarAlgebra(np.ones((1, 1, 1)), np.ones((1, 1)), [1.0], ["1"], "C")
    C.matrices = np.ones((1, 1, 1))
    return Corepresentation(qg, C, qg.algebra.unit.reshape(-1, 1), "algebraic", "trivial")


def diagonal_algebra(k, name="C^k"):
    mult = np.zeros((k, k, k))
    for i in range(k):
        mult[i, i, i] = 1
    C = FiniteStarAlgebra(mult, np.eye(k), np.ones(k), [f"p{i}" for i in range(k)], name)
    C.matrices = np.array([np.diag(np.eye(k)[i]) for i in range(k)])
    return C


def character_corep(qg, group_likes, name="characters"):
    """sum_c v_c (x) p_c on C^k for group-like unitaries v_c of A.

    Group-like unitaries of C[G] are the characters of its dual F(G), so a
    list of them assembles into a diagonal corepresentation.
    """
    C = diagonal_algebra(len(group_likes))
    coeffs = np.array(group_likes, dtype=complex).T
    corep = Corepresentation(qg, C, coeffs, "algebraic", name)
    corep.check()
    return corep


def matrix_units(d):
    mats = []
    for i in range(d):
        for j in range(d):
            E = np.zeros((d, d))
            E[i, j] = 1
            mats.append(E)
    C = FiniteStarAlgebra.from_matrices(mats, name=f"M_{d}")
    return C
