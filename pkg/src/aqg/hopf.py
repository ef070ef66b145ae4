"""Comultiplication axioms, counit and antipode.

A comultiplication is stored as an array ``D`` of shape (n, n, n) where
``D[i, j, k]`` is the coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    AlgebraElement,
    FiniteStarAlgebra,
    LinearFunctional,
    LinearMap,
    axiom_residuals,
    max_abs,
    tensor_algebra,
)
from .errors import AQGError
from .report import Report


def flip_matrix(n, m=None):
    """Permutation matrix of a (x) b -> b (x) a on C^n (x) C^m."""
    m = n if m is None else m
    P = np.zeros((n * m, n * m))
    for i in range(n):
        for j in range(m):
            P[j * n + i, i * m + j] = 1
    return P


def comult_matrix(D):
    n = D.shape[0]
    return D.reshape(n * n, n)


def t1_matrix(A, D):
    """a (x) b -> Delta(a)(b (x) 1)."""
    n = A.dim
    T = np.einsum("iqa,ibp->pqab", D, A.mult)
    return T.reshape(n * n, n * n)


def t2_matrix(A, D):
    """a (x) b -> Delta(a)(1 (x) b)."""
    n = A.dim
    T = np.einsum("pja,jbq->pqab", D, A.mult)
    return T.reshape(n * n, n * n)


def _invertibility(T, cutoff=1e-9):
    s = np.linalg.svd(T, compute_uv=False)
    ok = s[-1] > cutoff * s[0]
    cond = float(s[0] / s[-1]) if s[-1] > 0 else float("inf")
    return ok, cond


def check_comultiplication(A, D, tol=DEFAULT_TOL, strict=True):
    """Axiom report for (A, Delta). Raises AXIOM_ERROR when ``strict``."""
    D = np.asarray(D, dtype=complex)
    n = A.dim
    rep = Report(f"comultiplication on {A.name}", tol)
    if D.shape != (n, n, n):
        raise AQGError("SCHEMA_ERROR", f"comultiplication has shape {D.shape}")
    for key, val in axiom_residuals(A).items():
        rep.check(f"algebra.{key}", _ALGEBRA_REFS[key], val)
    m = A.mult
    Dm = comult_matrix(D)
    lhs = np.einsum("abk,ijk->abij", m, D)
    rhs = np.einsum("ija,klb,ikp,jlq->abpq", D, D, m, m, optimize=True)
    rep.check("hopf.comult_multiplicative", "Delta(ab) = Delta(a)Delta(b)", max_abs(lhs - rhs))
    rep.check("hopf.comult_unital", "Delta(1) = 1 (x) 1", max_abs(Dm @ A.unit - np.kron(A.unit, A.unit)))
    rep.check(
        "hopf.comult_star",
        "Delta(a*) = Delta(a)*",
        max_abs(Dm @ A.K - np.kron(A.K, A.K) @ np.conj(Dm)),
    )
    left = np.einsum("pqi,ijk->pqjk", D, D)
    right = np.einsum("ijk,qrj->iqrk", D, D)
    rep.check("hopf.coassociativity", "(Delta (x) id)Delta = (id (x) Delta)Delta", max_abs(left - right))
    for label, T in (("t1", t1_matrix(A, D)), ("t2", t2_matrix(A, D))):
        ok, cond = _invertibility(T)
        rep.info[f"hopf.{label}_condition"] = cond
        ref = {"t1": "a (x) b -> Delta(a)(b (x) 1) is bijective", "t2": "a (x) b -> Delta(a)(1 (x) b) is bijective"}[label]
        rep.flag(f"hopf.{label}_bijective", ref, ok)
        if ok:
            rep.check(f"hopf.{label}_inverse", ref + " (T^-1 T = 1)", max_abs(np.linalg.solve(T, T) - np.eye(n * n)))
    if strict and not rep.passed:
        bad = rep.first_failure()
        raise AQGError("AXIOM_ERROR", f"{bad.id} failed with residual {bad.residual:.3g}", report=rep)
    return rep


_ALGEBRA_REFS = {
    "associativity": "(ab)c = a(bc)",
    "unit_left": "1 a = a",
    "unit_right": "a 1 = a",
    "star_antimultiplicative": "(ab)* = b* a*",
    "star_involutive": "a** = a",
}


def _rank(M, rel=1e-9):
    s = np.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > rel * max(1.0, s[0]))) if s.size else 0


def derive_counit(A, D, tol=DEFAULT_TOL):
    """The unique eps with (eps (x) id)Delta = (id (x) eps)Delta = id."""
    n = A.dim
    M1 = np.transpose(D, (1, 2, 0)).reshape(n * n, n)  # sum_i eps_i D[i, j, k] = delta_jk
    M2 = np.transpose(D, (0, 2, 1)).reshape(n * n, n)  # sum_j eps_j D[i, j, k] = delta_ik
    M = np.vstack([M1, M2])
    b = np.concatenate([np.eye(n).reshape(-1)] * 2)
    eps, *_ = np.linalg.lstsq(M, b, rcond=None)
    residual = max_abs(M @ eps - b)
    if residual >= tol:
        raise AQGError("NO_COUNIT", f"counit system is inconsistent (residual {residual:.3g})")
    if _rank(M) < n:
        raise AQGError("NON_UNIQUE", "counit system has a solution space of dimension > 1")
    m = A.mult
    hom = max_abs(np.einsum("abk,k->ab", m, eps) - np.outer(eps, eps))
    star = max_abs(eps @ A.K - np.conj(eps))
    if max(hom, star, abs(eps @ A.unit - 1)) >= tol:
        raise AQGError("NO_COUNIT", "counit is not a unital *-homomorphism")
    return LinearFunctional(A, eps)


@dataclass
class HopfPackage:
    counit: LinearFunctional
    S: LinearMap
    S_inv: LinearMap
    residual: float


def derive_antipode(A, D, eps, tol=DEFAULT_TOL):
    """Solve m(S (x) id)(Delta(a)(1 (x) b)) = eps(a) b for the matrix of S."""
    n = A.dim
    m = A.mult
    e = eps.covector if isinstance(eps, LinearFunctional) else np.asarray(eps)
    # sum_{r,i} S[r, i] C[r, i, k, l, p] = eps_k delta_lp
    C = np.einsum("ijk,jls,rsp->riklp", D, m, m, optimize=True)
    M = C.reshape(n * n, n**3).T
    b = np.einsum("k,lp->klp", e, np.eye(n)).reshape(-1)
    sol, *_ = np.linalg.lstsq(M, b, rcond=None)
    residual = max_abs(M @ sol - b)
    if residual >= tol:
        raise AQGError("NO_ANTIPODE", f"antipode system is inconsistent (residual {residual:.3g})")
    if _rank(M) < n * n:
        raise AQGError("NO_ANTIPODE", "antipode system does not determine S uniquely")
    S = sol.reshape(n, n)
    # second defining relation m(id (x) S)((b (x) 1)Delta(a)) = eps(a) b
    second = np.einsum("ijk,lip,rj,prq->klq", D, m, S, m, optimize=True)
    res2 = max_abs(second - np.einsum("k,lq->klq", e, np.eye(n)))
    if res2 >= tol:
        raise AQGError("NO_ANTIPODE", f"second antipode relation fails (residual {res2:.3g})")
    s = np.linalg.svd(S, compute_uv=False)
    if s[-1] <= 1e-9 * s[0]:
        raise AQGError("SINGULAR_ANTIPODE", "antipode is not invertible")
    Smap = LinearMap(A, A, S, antimultiplicative=True)
    return HopfPackage(LinearFunctional(A, e), Smap, Smap.inverse(), max(residual, res2))


def verify_antipode_identities(A, D, pkg, tol=DEFAULT_TOL):
    rep = Report(f"antipode identities on {A.name}", tol)
    n = A.dim
    S = pkg.S.matrix
    K = A.K
    eps = pkg.counit.covector
    rep.check("hopf.counit_left", "(eps (x) id)Delta = id", max_abs(np.einsum("i,ijk->jk", eps, D) - np.eye(n)))
    rep.check("hopf.counit_right", "(id (x) eps)Delta = id", max_abs(np.einsum("j,ijk->ik", eps, D) - np.eye(n)))
    rep.check("hopf.counit_star_hom", "eps(a*) = conj(eps(a)), eps(ab) = eps(a)eps(b)",
              max(max_abs(eps @ K - np.conj(eps)), max_abs(np.einsum("abk,k->ab", A.mult, eps) - np.outer(eps, eps))))
    rep.check("hopf.counit_coproduct", "(eps (x) eps)Delta = eps", max_abs(np.einsum("i,j,ijk->k", eps, eps, D) - eps))
    rep.check("hopf.counit_antipode", "eps S = eps", max_abs(eps @ S - eps))
    m = A.mult
    left = np.einsum("ijk,ri,jls,rsp->klp", D, S, m, m, optimize=True)
    rep.check("hopf.antipode_left", "m(S (x) id)(Delta(a)(1 (x) b)) = eps(a)b",
              max_abs(left - np.einsum("k,lp->klp", eps, np.eye(n))))
    right = np.einsum("ijk,lip,rj,prq->klq", D, m, S, m, optimize=True)
    rep.check("hopf.antipode_right", "m(id (x) S)((b (x) 1)Delta(a)) = eps(a)b",
              max_abs(right - np.einsum("k,lq->klq", eps, np.eye(n))))
    # S(S(a*)*) as a linear map is S K conj(S K)
    rep.check("hopf.antipode_star", "S(S(a*)*) = a", max_abs(S @ K @ np.conj(S @ K) - np.eye(n)))
    lhs = np.einsum("pi,qj,jik->pqk", S, S, D)  # chi (S (x) S) Delta
    rhs = np.einsum("pqr,rk->pqk", D, S)
    rep.check("hopf.antipode_coproduct", "chi (S (x) S)Delta = Delta S", max_abs(lhs - rhs))
    anti = np.einsum("ijk,pk->ijp", m, S) - np.einsum("pj,qi,pqk->ijk", S, S, m)
    rep.check("hopf.antipode_antimultiplicative", "S(ab) = S(b)S(a)", max_abs(anti))
    rep.check("hopf.antipode_inverse", "S^-1 S = 1", max_abs(pkg.S_inv.matrix @ S - np.eye(n)))
    rep.check("hopf.antipode_unit", "S(1) = 1", max_abs(S @ A.unit - A.unit))
    return rep


class QuantumGroup:
    """An algebra with comultiplication and its lazily derived structure."""

    def __init__(self, algebra, comult, name=None, tol=DEFAULT_TOL, check=True):
        self.algebra = algebra
        self.D = np.asarray(comult, dtype=complex)
        self.D.setflags(write=False)
        self.name = name or algebra.name
        self.tol = tol
        self.axiom_report = check_comultiplication(algebra, self.D, tol) if check else None

    @classmethod
    def from_definition(cls, d, tol=DEFAULT_TOL, check=True):
        A = FiniteStarAlgebra(d.mult, d.star, d.unit, d.labels, d.name)
        return cls(A, d.comult, d.name, tol, check)

    @property
    def dim(self):
        return self.algebra.dim

    @cached_property
    def Dmat(self):
        return comult_matrix(self.D)

    @cached_property
    def AA(self):
        return tensor_algebra(self.algebra, self.algebra)

    def comultiply(self, a):
        x = a.coords if isinstance(a, AlgebraElement) else np.asarray(a)
        out = self.Dmat @ x
        return AlgebraElement(self.AA, out) if isinstance(a, AlgebraElement) else out

    @cached_property
    def counit(self):
        return derive_counit(self.algebra, self.D, self.tol)

    @cached_property
    def hopf(self):
        return derive_antipode(self.algebra, self.D, self.counit, self.tol)

    @property
    def S(self):
        return self.hopf.S.matrix

    @property
    def S_inv(self):
        return self.hopf.S_inv.matrix

    @cached_property
    def haar(self):
        from .haar import solve_left_haar

        return solve_left_haar(self.algebra, self.D, self.tol)

    @cached_property
    def modular(self):
        from .haar import derive_modular

        return derive_modular(self)

    @property
    def positive(self):
        return self.haar.positive and self.haar.faithful

    def relabel(self, perm):
        """The same quantum group in the basis f_a = e_perm[a]."""
        n = self.dim
        P = np.zeros((n, n))
        for a, p in enumerate(perm):
            P[p, a] = 1  # old coordinates = P @ new coordinates
        A = self.algebra
        Pi = P.T
        mult = np.einsum("ia,jb,ijk,ck->abc", P, P, A.mult, Pi)
        K = Pi @ A.K @ P
        B = FiniteStarAlgebra(mult, K.T, Pi @ A.unit, [A.labels[p] for p in perm], A.name + " (relabelled)")
        D = np.einsum("ai,bj,ijk,kc->abc", Pi, Pi, self.D, P)
        return QuantumGroup(B, D, self.name, self.tol, check=False), P

    def __repr__(self):
        return f"QuantumGroup({self.name!r}, dim={self.dim})"
