"""The dual quantum group, Fourier transform, canonical element X and biduality.

The dual is spanned by the functionals ``e_i phi`` (``x -> phi(x e_i)``),
which serve as its basis.  A functional with covector ``c`` (values on
``e_j``) has dual coordinates ``w`` with ``c = w @ P``, where
``P[i, j] = phi(e_j e_i)`` is the pairing matrix.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .algebra import (
    AlgebraElement,
    FiniteStarAlgebra,
    LinearFunctional,
    TensorStarAlgebra,
    max_abs,
    tensor_algebra,
)
from .errors import AQGError
from .hopf import QuantumGroup
from .report import SCALAR, Report


class DualQuantumGroup:
    def __init__(self, qg):
        self.base = qg
        A = qg.algebra
        n = A.dim
        phi = qg.haar.phi.covector
        P = qg.haar.bilinear.T.copy()
        s = np.linalg.svd(P, compute_uv=False)
        if s[-1] <= 1e-9 * s[0]:
            raise AQGError("SINGULAR_PAIRING", "pairing between the algebra and its dual is singular")
        self.P = P
        self.Pinv = np.linalg.inv(P)
        D = qg.D
        # (w1 w2)(e_k) = sum_{p,q} w1(e_p) w2(e_q) D[p, q, k]
        conv = np.einsum("ip,jq,pqk->ijk", P, P, D)
        mult = conv @ self.Pinv
        # w*(a) = conj(w(S(a)*)): covector conj(c) conj(K) S
        Khat = (np.conj(P) @ np.conj(A.K) @ qg.S @ self.Pinv).T
        unit = qg.counit.covector @ self.Pinv
        # Delta(w)(x (x) y) = w(xy), expanded in the basis of dual tensors
        F = np.einsum("pqk,ik->ipq", A.mult, P)
        Dhat = np.einsum("ap,ipq,qb->abi", self.Pinv.T, F, self.Pinv)
        labels = [f"{l}^" for l in A.labels]
        self.algebra = FiniteStarAlgebra(mult, Khat.T, unit, labels, f"dual of {A.name}")
        self.D = Dhat
        self.qg = QuantumGroup(self.algebra, Dhat, f"dual of {qg.name}", qg.tol, check=True)
        # installed structure
        self.eps_hat = P @ A.unit  # eps^(w) = w(1)
        self.S_hat = (P @ qg.S @ self.Pinv).T  # S^(w) = w o S
        self.psi_hat = qg.counit.covector.copy()  # psi^(a^) = eps(a)
        self.phi = phi

    @property
    def dim(self):
        return self.algebra.dim

    def covector(self, w):
        """Values on the basis of A of the dual element with coordinates w."""
        return np.asarray(w) @ self.P

    def from_covector(self, c):
        return np.asarray(c) @ self.Pinv

    def fourier(self, a):
        """a -> a phi; in these coordinates the identity on coefficient vectors."""
        x = a.coords if isinstance(a, AlgebraElement) else np.asarray(a)
        return AlgebraElement(self.algebra, x.copy())

    def fourier_inv(self, w):
        x = w.coords if isinstance(w, AlgebraElement) else np.asarray(w)
        return AlgebraElement(self.base.algebra, x.copy())

    def fourier_covector(self, a):
        """The functional x -> phi(x a) computed directly from phi."""
        A = self.base.algebra
        return np.einsum("jak,a,k->j", A.mult, a, self.phi)

    @cached_property
    def X(self):
        """Coefficients of X = sum_i e_i (x) x^i in the basis e_i (x) e_j^."""
        return self.Pinv.copy()

    @cached_property
    def AAhat(self):
        return tensor_algebra(self.base.algebra, self.algebra)


def build_dual(qg):
    return DualQuantumGroup(qg)


def dual_report(dual, rng):
    """Installed counit, antipode and right Haar functional of the dual."""
    qg = dual.base
    hat = dual.qg
    A, Ah = qg.algebra, dual.algebra
    rep = Report(f"dual of {qg.name}", qg.tol)
    n = A.dim
    rep.check("dual.dimension", "dim of dual = dim A, pairing nonsingular", abs(Ah.dim - n), tol=0.5, norm="dimension")
    rep.check("dual.counit", "eps^(w) = w(1)", max_abs(hat.counit.covector - dual.eps_hat))
    rep.check("dual.antipode", "S^(w)(a) = w(S(a))", max_abs(hat.S - dual.S_hat))
    psi = dual.psi_hat
    right = np.einsum("ijk,i->jk", dual.D, psi) - np.outer(Ah.unit, psi)
    rep.check("dual.psi_right_invariant", "(psi^ (x) id)Delta^(w) = psi^(w) 1", max_abs(right))
    # the product, star and coproduct of the dual against their defining formulas, on random elements
    res_prod = res_star = res_cop = res_eps = 0.0
    for _ in range(20):
        w1 = Ah.random_element(rng).coords
        w2 = Ah.random_element(rng).coords
        c1, c2 = dual.covector(w1), dual.covector(w2)
        prod = dual.covector(Ah.product(w1, w2))
        res_prod = max(res_prod, max_abs(prod - np.einsum("p,q,pqk->k", c1, c2, qg.D)))
        star = dual.covector(Ah.involve(w1))
        # w*(a) = conj(w(S(a)*)) evaluated on every basis a
        direct = np.array([np.conj(c1 @ A.involve(qg.S[:, k])) for k in range(n)])
        res_star = max(res_star, max_abs(star - direct))
        cop = dual.D.reshape(n * n, n) @ w1
        vals = dual.P.T @ cop.reshape(n, n) @ dual.P
        res_cop = max(res_cop, max_abs(vals - np.einsum("pqk,k->pq", A.mult, c1)))
        res_eps = max(res_eps, abs(hat.counit.covector @ w1 - c1 @ A.unit))
    rep.check("dual.product", "(w1 w2)(a) = (w1 (x) w2)(Delta(a))", res_prod)
    rep.check("dual.star", "w*(a) = conj(w(S(a)*))", res_star)
    rep.check("dual.coproduct", "Delta^(w)(x (x) y) = w(xy)", res_cop)
    rep.check("dual.counit_random", "eps^(w) = w(1) on random w", res_eps)
    return rep


def fourier_report(dual, rng, samples=100):
    qg = dual.base
    A, Ah = qg.algebra, dual.algebra
    rep = Report(f"Fourier transform of {qg.name}", qg.tol)
    phi = dual.phi
    rt = planch = direct = conv = 0.0
    for _ in range(samples):
        a = A.random_element(rng).coords
        b = A.random_element(rng).coords
        ah = dual.fourier(a).coords
        rt = max(rt, max_abs(dual.fourier_inv(ah).coords - a))
        direct = max(direct, max_abs(dual.covector(ah) - dual.fourier_covector(a)))
        lhs = dual.psi_hat @ Ah.product(Ah.involve(ah), ah)
        rhs = phi @ A.product(A.involve(a), a)
        planch = max(planch, abs(lhs - rhs))
        bh = dual.fourier(b).coords
        prod = dual.covector(Ah.product(ah, bh))
        conv = max(conv, max_abs(prod - np.einsum("p,q,pqk->k", dual.covector(ah), dual.covector(bh), qg.D)))
    rep.check("fourier.round_trip", "fourier_inv(fourier(a)) = a", rt)
    rep.check("fourier.definition", "fourier(a)(x) = phi(x a)", direct)
    if qg.positive:
        rep.check("fourier.plancherel", "psi^(a^* a^) = phi(a* a)", planch, norm=SCALAR)
    else:
        rep.skip("fourier.plancherel", "Haar functional is not positive")
        rep.info["fourier.plancherel_deviation"] = planch
    rep.check("fourier.convolution", "(a^ b^)(x) = (a^ (x) b^)(Delta(x))", conv)
    one = dual.covector(dual.fourier(A.unit).coords)
    rep.check("fourier.unit", "fourier(1) = phi", max_abs(one - phi))
    return rep


def X_report(dual):
    qg = dual.base
    A, Ah = qg.algebra, dual.algebra
    n = A.dim
    rep = Report(f"canonical element X of {qg.name}", qg.tol)
    X = dual.X
    AAh = dual.AAhat
    x = X.reshape(-1)
    # (Delta (x) id)(X) = X13 X23 in A (x) A (x) A^
    T3 = TensorStarAlgebra([A, A, Ah])
    lhs = np.einsum("ijk,kl->ijl", qg.D, X).reshape(-1)
    X13 = np.einsum("il,j->ijl", X, A.unit).reshape(-1)
    X23 = np.einsum("i,jl->ijl", A.unit, X).reshape(-1)
    rep.check("X.corep_left", "(Delta (x) id)(X) = X13 X23", max_abs(lhs - T3.product(X13, X23)))
    T3h = TensorStarAlgebra([A, Ah, Ah])
    lhs = np.einsum("pql,il->ipq", dual.D, X).reshape(-1)
    X12 = np.einsum("ip,q->ipq", X, Ah.unit).reshape(-1)
    X13h = np.einsum("iq,p->ipq", X, Ah.unit).reshape(-1)
    rep.check("X.corep_right", "(id (x) Delta^)(X) = X12 X13", max_abs(lhs - T3h.product(X12, X13h)))
    xs = AAh.involve(x)
    one = AAh.unit
    rep.check("X.unitary", "X* X = X X* = 1",
              max(max_abs(AAh.product(xs, x) - one), max_abs(AAh.product(x, xs) - one)))
    rep.check("X.counit_slice", "(eps (x) id)(X) = 1", max_abs(qg.counit.covector @ X - Ah.unit))
    # x^i are dual to e_i
    rep.check("X.pairing", "x^i(e_j) = delta_ij", max_abs(dual.covector(X) - np.eye(n)))
    return rep


def verify_biduality(qg, dual=None):
    """The evaluation map A -> dual of the dual is an isomorphism of quantum groups."""
    dual = dual or build_dual(qg)
    bidual = build_dual(dual.qg)
    A, Ah, Ahh = qg.algebra, dual.algebra, bidual.algebra
    n = A.dim
    rep = Report(f"biduality of {qg.name}", qg.tol)
    # ev_a(w) = w(a): on the basis e_i^ this is (P a)_i; expand in the bidual basis
    E = bidual.Pinv.T @ dual.P
    s = np.linalg.svd(E, compute_uv=False)
    rep.flag("bidual.bijective", "evaluation map is bijective", s[-1] > 1e-9 * s[0])
    lhs = np.einsum("ijk,pk->ijp", A.mult, E)
    rhs = np.einsum("pi,qj,pqk->ijk", E, E, Ahh.mult)
    rep.check("bidual.multiplicative", "E(ab) = E(a)E(b)", max_abs(lhs - rhs))
    rep.check("bidual.star", "E(a*) = E(a)*", max_abs(E @ A.K - Ahh.K @ np.conj(E)))
    rep.check("bidual.unit", "E(1) = 1", max_abs(E @ A.unit - Ahh.unit))
    lhs = np.einsum("pi,qj,ijk->pqk", E, E, qg.D)
    rhs = np.einsum("pqr,rk->pqk", bidual.D, E)
    rep.check("bidual.comultiplication", "(E (x) E)Delta = Delta^^ E", max_abs(lhs - rhs))
    rep.check("bidual.counit", "eps^^ E = eps", max_abs(bidual.qg.counit.covector @ E - qg.counit.covector))
    rep.check("bidual.antipode", "S^^ E = E S", max_abs(bidual.qg.S @ E - E @ qg.S))
    # chi(X), pushed through E on its second leg, is the canonical element of the dual
    chiX = dual.X.T
    rep.check("bidual.flipped_X", "(id (x) E)chi(X) = canonical element of the dual",
              max_abs(chiX @ E.T - bidual.X))
    return rep
