"""GNS construction of a positive faithful functional, the fundamental unitary
W and the reduced objects it generates.

H is C^n with the standard inner product <x, y> = y^H x, and
``Lambda(a) = L @ coords(a)`` for the Hermitian square root L of the Gram
matrix.  Antilinear operators are kept as ``Semilinear`` (matrix, flag)
pairs, see its docstring for the composition rules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import max_abs
from .errors import AQGError
from .haar import gram_matrices, kms_automorphism
from .legs import conj_antiunitary, embed, is_unitary, slice_first, slice_second
from .report import OPERATOR, Report


class Semilinear:
    """x -> M x, or x -> M conj(x) when ``antilinear``.

    For A = M o C and B = N o C:  A B = M conj(N) (linear),  A* = M^T o C
    (from <Ax, y> = conj<x, A* y>).  A linear operator X conjugated by an
    antilinear A is ``A X A = M conj(X) conj(M)``.
    """

    def __init__(self, matrix, antilinear=False):
        self.matrix = np.asarray(matrix, dtype=complex)
        self.antilinear = bool(antilinear)

    def __call__(self, x):
        x = np.asarray(x)
        return self.matrix @ (np.conj(x) if self.antilinear else x)

    def __matmul__(self, other):
        N = np.conj(other.matrix) if self.antilinear else other.matrix
        return Semilinear(self.matrix @ N, self.antilinear != other.antilinear)

    @property
    def adjoint(self):
        return Semilinear(self.matrix.T if self.antilinear else self.matrix.conj().T, self.antilinear)

    def sandwich(self, X):
        """self o X o self as a matrix (linear when self is antilinear)."""
        if self.antilinear:
            return conj_antiunitary(self.matrix, X)
        return self.matrix @ X @ self.matrix

    def distance(self, other):
        if self.antilinear != other.antilinear:
            return float("inf")
        return max_abs(self.matrix - other.matrix)


def hermitian_power(H, p):
    """H^p for a positive definite Hermitian matrix, by spectral calculus (p may be complex)."""
    w, U = np.linalg.eigh((H + H.conj().T) / 2)
    return (U * np.power(w.astype(complex), p)) @ U.conj().T


def hermitian_sqrt(G):
    w, U = np.linalg.eigh((G + G.conj().T) / 2)
    return (U * np.sqrt(np.clip(w, 0, None))) @ U.conj().T


def modular_objects(L, K):
    """T, nabla and J for the GNS map L and the involution matrix K of the algebra."""
    Linv = np.linalg.inv(L)
    T = Semilinear(L @ K @ np.conj(Linv), antilinear=True)
    nabla = (T.adjoint @ T).matrix
    J = Semilinear(T.matrix @ np.conj(hermitian_power(nabla, -0.5)), antilinear=True)
    return T, nabla, J


@dataclass
class GnsData:
    gram: np.ndarray
    L: np.ndarray
    L_inv: np.ndarray
    pi: np.ndarray  # pi[i] = pi_r(e_i)
    T: Semilinear
    nabla: np.ndarray
    J: Semilinear
    rho: np.ndarray
    J_hat: Semilinear | None = None

    @property
    def dim(self):
        return self.L.shape[0]

    def Lambda(self, x):
        return self.L @ np.asarray(x)

    def represent(self, x):
        return np.einsum("i,ijk->jk", np.asarray(x), self.pi)


def gns_of_functional(A, phi, tol=1e-9):
    G, B = gram_matrices(A, phi)
    if max_abs(G - G.conj().T) >= tol or np.linalg.eigvalsh((G + G.conj().T) / 2).min() <= -tol:
        raise AQGError("POSITIVITY_REQUIRED", "functional is not positive")
    rho = kms_automorphism(B)
    L = hermitian_sqrt(G)
    Linv = np.linalg.inv(L)
    pi = np.array([L @ X @ Linv for X in A.left_regular])
    T, nabla, J = modular_objects(L, A.K)
    return GnsData(gram=G, L=L, L_inv=Linv, pi=pi, T=T, nabla=nabla, J=J, rho=rho)


def build_gns(qg):
    h = qg.haar
    if not h.positive:
        raise AQGError("POSITIVITY_REQUIRED", f"left Haar functional of {qg.name} is not positive")
    if not h.faithful:
        raise AQGError("NOT_FAITHFUL", f"left Haar functional of {qg.name} is not faithful")
    gns = gns_of_functional(qg.algebra, h.phi.covector, qg.tol)
    gns.rho = qg.modular.rho.matrix
    return gns


def dual_conjugation(gns, dual):
    """J^ for the right Haar functional psi^ of the dual, with Lambda^(a^) = Lambda(a)."""
    _, _, J_hat = modular_objects(gns.L, dual.algebra.K)
    return J_hat


def gns_report(A, phi, gns, name="", tol=1e-9):
    rep = Report(f"GNS construction of {name or A.name}", tol)
    n = A.dim
    L, Li = gns.L, gns.L_inv
    G, _ = gram_matrices(A, phi)
    rep.check("gns.inner_product", "<Lambda(a), Lambda(b)> = phi(b* a)", max_abs(L.conj().T @ L - G), norm=OPERATOR)
    lhs = np.einsum("ijk,kl->ijl", gns.pi, L)  # pi(e_i) Lambda(e_l)
    rhs = np.einsum("jk,ilk->ijl", L, A.mult)
    rep.check("gns.representation", "pi_r(a) Lambda(b) = Lambda(ab)", max_abs(lhs - rhs), norm=OPERATOR)
    adj = np.einsum("ki,kab->iab", A.K, gns.pi) - np.transpose(gns.pi.conj(), (0, 2, 1))
    rep.check("gns.star_representation", "pi_r(a*) = pi_r(a)*", max_abs(adj), norm=OPERATOR)
    rank = np.linalg.matrix_rank(gns.pi.reshape(n, -1), tol=1e-9)
    rep.check("gns.pi_injective", "pi_r is injective", abs(rank - n), tol=0.5, norm="dimension")
    T, nabla, J = gns.T, gns.nabla, gns.J
    rep.check("gns.T", "T Lambda(a) = Lambda(a*)", max_abs(T.matrix @ np.conj(L) - L @ A.K), norm=OPERATOR)
    rep.check("gns.T_adjoint", "T* Lambda(a) = Lambda(rho(a*))", max_abs(T.adjoint.matrix @ np.conj(L) - L @ gns.rho @ A.K), norm=OPERATOR)
    rep.check("gns.nabla_hermitian", "nabla = T*T is selfadjoint", max_abs(nabla - nabla.conj().T), norm=OPERATOR)
    rep.check("gns.nabla_positive", "nabla > 0", max(0.0, -float(np.linalg.eigvalsh((nabla + nabla.conj().T) / 2).min())), norm=OPERATOR)
    for k in (-2, -1, 1, 2):
        Nk = np.linalg.matrix_power(nabla, k) if k > 0 else np.linalg.matrix_power(np.linalg.inv(nabla), -k)
        Rk = np.linalg.matrix_power(gns.rho, k) if k > 0 else np.linalg.matrix_power(np.linalg.inv(gns.rho), -k)
        rep.check(f"gns.nabla_power[{k}]", f"nabla^{k} Lambda(a) = Lambda(rho^{k}(a))", max_abs(Nk @ L - L @ Rk), norm=OPERATOR)
    rep.check("gns.J_antiunitary", "J antiunitary", is_unitary(J.matrix), norm=OPERATOR)
    rep.check("gns.J_involutive", "J^2 = 1", max_abs((J @ J).matrix - np.eye(n)), norm=OPERATOR)
    polar = J @ Semilinear(hermitian_power(nabla, 0.5))
    rep.check("gns.polar", "T = J nabla^(1/2)", polar.distance(T), norm=OPERATOR)
    rep.check("gns.J_nabla", "J nabla J = nabla^-1", max_abs(J.sandwich(nabla) - np.linalg.inv(nabla)), norm=OPERATOR)
    return rep


class BigUnitary:
    """A matrix on a tensor product of spaces with dimensions ``dims``."""

    def __init__(self, matrix, dims, name=""):
        self.matrix = np.asarray(matrix, dtype=complex)
        self.dims = tuple(dims)
        self.name = name
        if self.matrix.shape != (int(np.prod(self.dims)),) * 2:
            raise ValueError(f"matrix shape {self.matrix.shape} does not match legs {self.dims}")

    @property
    def adjoint(self):
        return BigUnitary(self.matrix.conj().T, self.dims, self.name + "*")

    def leg(self, legs, dims):
        return embed(self.matrix, legs, dims)

    def unitarity_residual(self):
        return is_unitary(self.matrix)

    def slice_right(self, p, q):
        """(id (x) omega_{p,q})(self) for a two-leg operator."""
        return slice_second(self.matrix, self.dims[0], self.dims[1], p, q)

    def slice_left(self, p, q):
        return slice_first(self.matrix, self.dims[0], self.dims[1], p, q)


def defining_matrix(qg):
    """Y(a (x) b) = Delta(b)(a (x) 1) on A (x) A in coordinates."""
    from .hopf import flip_matrix, t1_matrix

    n = qg.dim
    return t1_matrix(qg.algebra, qg.D) @ flip_matrix(n)


def build_fundamental_unitary(qg, gns):
    n = qg.dim
    Y = defining_matrix(qg)
    s = np.linalg.svd(Y, compute_uv=False)
    if s[-1] <= 1e-9 * s[0]:
        raise AQGError("SINGULAR_SYSTEM", "the vectors Delta(b)(a (x) 1) do not span H (x) H")
    LL = np.kron(gns.L, gns.L)
    LLi = np.kron(gns.L_inv, gns.L_inv)
    W = LL @ np.linalg.solve(Y, LLi)
    return BigUnitary(W, (n, n), "W")


def pentagon_residual(W):
    W = W.matrix if isinstance(W, BigUnitary) else np.asarray(W)
    n = W.shape[0]
    d = int(round(np.sqrt(n)))
    dims = (d, d, d)
    W12 = embed(W, (0, 1), dims)
    W13 = embed(W, (0, 2), dims)
    W23 = embed(W, (1, 2), dims)
    return max_abs(W12 @ W13 @ W23 - W23 @ W12)


def verify_pentagon(W, tol=1e-9, name="W"):
    M = W.matrix if isinstance(W, BigUnitary) else np.asarray(W)
    rep = Report(f"pentagon equation for {name}", tol)
    rep.check("fundamental.pentagon", "W12 W13 W23 = W23 W12", pentagon_residual(M), norm=OPERATOR)
    return rep


def fundamental_report(qg, gns, W, rng, samples=50):
    n = qg.dim
    A = qg.algebra
    rep = Report(f"fundamental unitary of {qg.name}", qg.tol)
    rep.check("fundamental.unitary", "W*W = WW* = 1", W.unitarity_residual(), norm=OPERATOR)
    LL = np.kron(gns.L, gns.L)
    res = 0.0
    for _ in range(samples):
        a = A.random_element(rng).coords
        b = A.random_element(rng).coords
        v = qg.AA.product(qg.Dmat @ b, np.kron(a, A.unit))
        res = max(res, max_abs(W.matrix @ LL @ v - np.kron(gns.L @ a, gns.L @ b)))
    rep.check("fundamental.defining_relation", "W (Lambda (x) Lambda)(Delta(b)(a (x) 1)) = Lambda(a) (x) Lambda(b)", res)
    one = gns.L @ A.unit
    rep.check("fundamental.unit_vector", "W(Lambda(1) (x) Lambda(1)) = Lambda(1) (x) Lambda(1)",
              max_abs(W.matrix @ np.kron(one, one) - np.kron(one, one)))
    res = max(max_abs(W.matrix @ LL @ qg.Dmat[:, j] - np.kron(one, gns.L[:, j])) for j in range(n))
    rep.check("fundamental.coproduct_vector", "W (Lambda (x) Lambda)(Delta(b)) = Lambda(1) (x) Lambda(b)", res)
    rep.extend(verify_pentagon(W, qg.tol))
    return rep


def reduced_structures(qg, gns, W, dual=None):
    """Delta_r, the dual Delta^_r, the slice formulas and W inside A_r (x) A^_r."""
    from .duality import build_dual

    dual = dual or build_dual(qg)
    n = qg.dim
    A, Ah = qg.algebra, dual.algebra
    rep = Report(f"reduced structures of {qg.name}", qg.tol)
    Wm = W.matrix
    Ws = Wm.conj().T
    I = np.eye(n)
    L, Li = gns.L, gns.L_inv
    pi = gns.pi
    pih = np.array([L @ X @ Li for X in Ah.left_regular])  # pi^_r(e_i^)
    pipi = np.einsum("ijk,iab,jcd->kacbd", qg.D, pi, pi).reshape(n, n * n, n * n)

    # Delta_r(x) = W*(1 (x) x)W
    res = max(max_abs(Ws @ np.kron(I, pi[k]) @ Wm - pipi[k]) for k in range(n))
    rep.check("reduced.delta_r", "W*(1 (x) pi_r(a))W = (pi_r (x) pi_r)Delta(a)", res, norm=OPERATOR)
    rep.check("reduced.delta_r_unit", "Delta_r(1) = 1 (x) 1", max_abs(Ws @ Wm - np.eye(n * n)), norm=OPERATOR)

    # (id (x) omega_{Lambda(a), Lambda(b)})(W) = pi_r((id (x) phi)(Delta(b*)(1 (x) a)))
    B = qg.haar.bilinear
    res = 0.0
    for a in range(n):
        for b in range(n):
            x = np.einsum("k,ijk,j->i", A.K[:, b], qg.D, B[:, a])
            res = max(res, max_abs(W.slice_right(L[:, a], L[:, b]) - gns.represent(x)))
    rep.check("reduced.slice_left_leg", "(id (x) omega_{Lambda(a),Lambda(b)})(W) = pi_r((id (x) phi)(Delta(b*)(1 (x) a)))", res, norm=OPERATOR)

    # (omega_{Lambda^(t), Lambda^(h)} (x) id)(W) = pi^_r((psi^ (x) id)((h* (x) 1)Delta^(t)))
    AhAh = dual.qg.AA
    res = 0.0
    for t in range(n):
        cop = dual.D[:, :, t].reshape(-1)
        for h in range(n):
            y = AhAh.product(np.kron(Ah.involve(I[h]), Ah.unit), cop).reshape(n, n)
            x = dual.psi_hat @ y
            lhs = W.slice_left(L[:, t], L[:, h])
            res = max(res, max_abs(lhs - np.einsum("i,ijk->jk", x, pih)))
    rep.check("reduced.slice_right_leg", "(omega_{Lambda^(t),Lambda^(h)} (x) id)(W) = pi^_r((psi^ (x) id)((h* (x) 1)Delta^(t)))", res, norm=OPERATOR)

    slices = np.array([W.slice_right(I[p], I[q]).reshape(-1) for p in range(n) for q in range(n)])
    r1 = np.linalg.matrix_rank(slices, tol=1e-9)
    r2 = np.linalg.matrix_rank(np.vstack([slices, pi.reshape(n, -1)]), tol=1e-9)
    rep.check("reduced.slice_span", "span (id (x) omega)(W) = pi_r(A)", max(abs(r1 - n), abs(r2 - n)), tol=0.5, norm="dimension")
    rep.info["reduced.slice_span_dimension"] = int(r1)

    # Delta^_r(y) = W(y (x) 1)W* on pi^_r(A^)
    dims = (n, n, n)
    W12 = embed(Wm, (0, 1), dims)
    W23 = embed(Wm, (1, 2), dims)
    pihpih = np.einsum("ijk,iab,jcd->kacbd", dual.D, pih, pih).reshape(n, n * n, n * n)
    res_cop = res_coass = 0.0
    for k in range(n):
        y = Wm @ np.kron(pih[k], I) @ Ws
        res_cop = max(res_cop, max_abs(y - pihpih[k]))
        left = W12 @ embed(y, (0, 2), dims) @ W12.conj().T
        right = W23 @ embed(y, (0, 1), dims) @ W23.conj().T
        res_coass = max(res_coass, max_abs(left - right))
    rep.check("reduced.delta_hat_r", "W(pi^_r(w) (x) 1)W* = (pi^_r (x) pi^_r)Delta^(w)", res_cop, norm=OPERATOR)
    rep.check("reduced.delta_hat_r_coassociative", "(Delta^_r (x) id)Delta^_r = (id (x) Delta^_r)Delta^_r", res_coass, norm=OPERATOR)

    J_hat = gns.J_hat or dual_conjugation(gns, dual)
    gns.J_hat = J_hat
    JJ = np.kron(J_hat.matrix, gns.J.matrix)
    rep.check("reduced.conjugation", "(J^ (x) J)W*(J^ (x) J) = W", max_abs(conj_antiunitary(JJ, Ws) - Wm), norm=OPERATOR)

    # W inside M(A_r (x) A^_r), with X from the duality module
    X = dual.X
    pp = np.einsum("iab,jcd->ijacbd", pi, pih).reshape(n, n, n * n, n * n)
    rep.check("reduced.W_is_X", "(pi_r (x) pi^_r)(X) = W", max_abs(np.einsum("ij,ijab->ab", X, pp) - Wm), norm=OPERATOR)
    AAh = dual.AAhat
    xv = X.reshape(-1)
    res = 0.0
    for i in range(n):
        for j in range(n):
            e = np.zeros(n * n, complex)
            e[i * n + j] = 1
            prod = AAh.product(xv, e).reshape(n, n)
            res = max(res, max_abs(Wm @ pp[i, j] - np.einsum("ij,ijab->ab", prod, pp)))
    rep.check("reduced.W_multiplier", "W (pi_r (x) pi^_r)(x) = (pi_r (x) pi^_r)(X x)", res, norm=OPERATOR)
    return rep
