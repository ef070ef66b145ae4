"""Left Haar functional, modular automorphisms, modular element and scaling constant."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, AlgebraElement, LinearFunctional, LinearMap, max_abs
from .errors import AQGError
from .report import SCALAR, Report


@dataclass
class HaarData:
    phi: LinearFunctional
    positive: bool
    faithful: bool
    gram: np.ndarray
    bilinear: np.ndarray  # B[i, j] = phi(e_i e_j)
    nullity: int


def gram_matrices(A, phi):
    """(G, B) with G[i, j] = phi(e_i* e_j) and B[i, j] = phi(e_i e_j)."""
    B = np.einsum("ijk,k->ij", A.mult, phi)
    return A.K.T @ B, B


def invariance_system(A, D):
    """Rows (i, k): sum_j D[i, j, k] w_j - w_k 1_i, i.e. (id (x) w)Delta(e_k) - w(e_k) 1."""
    n = A.dim
    M = np.transpose(D, (0, 2, 1)).copy()
    for k in range(n):
        M[:, k, k] -= A.unit
    return M.reshape(n * n, n)


def solve_left_haar(A, D, tol=DEFAULT_TOL):
    n = A.dim
    M = invariance_system(A, D)
    _, s, vh = np.linalg.svd(M)
    cutoff = 1e-9 * max(1.0, s[0])
    s_full = np.concatenate([s, np.zeros(max(0, n - s.size))])
    null = [vh[i].conj() for i in range(n) if s_full[i] <= cutoff]
    if not null:
        raise AQGError("NO_HAAR", "no non-zero left invariant functional exists")
    if len(null) > 1:
        raise AQGError("NON_UNIQUE_HAAR", f"left invariant functionals form a {len(null)}-dimensional space")
    phi = null[0]
    one = phi @ A.unit
    if abs(one) > 1e-9 * np.linalg.norm(phi):
        phi = phi / one
    else:
        # phi(1) = 0: scale the largest Gram diagonal entry to 1, or the
        # largest Gram entry when the whole diagonal vanishes
        G, _ = gram_matrices(A, phi)
        diag = np.abs(np.diag(G))
        if diag.max() > 1e-9 * max_abs(G):
            i = int(np.argmax(diag))
            phi = phi / G[i, i]
        else:
            phi = phi / G[np.unravel_index(np.argmax(np.abs(G)), G.shape)]
    phi = np.where(np.abs(phi) < 1e-15, 0, phi)
    G, B = gram_matrices(A, phi)
    herm = max_abs(G - G.conj().T) < tol
    positive = bool(herm and np.linalg.eigvalsh((G + G.conj().T) / 2).min() > -tol)
    sv = np.linalg.svd(B, compute_uv=False)
    faithful = bool(sv[-1] > 1e-9 * sv[0])
    return HaarData(
        phi=LinearFunctional(A, phi),
        positive=positive,
        faithful=faithful,
        gram=G,
        bilinear=B,
        nullity=len(null),
    )


def kms_automorphism(B):
    """The matrix rho with f(ab) = f(b rho(a)), given B[i, j] = f(e_i e_j)."""
    s = np.linalg.svd(B, compute_uv=False)
    if s[-1] <= 1e-9 * s[0]:
        raise AQGError("NOT_FAITHFUL", "the functional is not faithful")
    return np.linalg.solve(B, B.T)


@dataclass
class ModularPackage:
    rho: LinearMap
    rho_prime: LinearMap
    delta: AlgebraElement
    delta_inv: AlgebraElement
    mu: complex
    nu: float | None
    delta_residual: float
    mu_residual: float


def derive_rho(qg):
    A = qg.algebra
    haar = qg.haar
    if not haar.faithful:
        raise AQGError("NOT_FAITHFUL", "Gram matrix of the left Haar functional is singular")
    rho = kms_automorphism(haar.bilinear)
    psi = haar.phi.covector @ qg.S
    _, Bp = gram_matrices(A, psi)
    rho_p = kms_automorphism(Bp)
    return LinearMap(A, A, rho), LinearMap(A, A, rho_p)


def derive_delta_mu(qg, tol=None):
    """delta from (phi (x) id)(Delta(a)(1 (x) b)) = phi(a) delta b, mu from phi S^2 = mu phi."""
    tol = qg.tol if tol is None else tol
    A = qg.algebra
    n = A.dim
    m = A.mult
    phi = qg.haar.phi.covector
    lhs = np.einsum("ija,i,jbp->abp", qg.D, phi, m).reshape(-1)
    M = np.einsum("a,rbp->abpr", phi, m).reshape(n**3, n)
    delta, *_ = np.linalg.lstsq(M, lhs, rcond=None)
    res = max_abs(M @ delta - lhs)
    if res >= tol:
        raise AQGError("INCONSISTENT_DELTA", f"modular element relation has residual {res:.3g}")
    delta = np.where(np.abs(delta) < 1e-15, 0, delta)
    delta_inv = A.inverse(delta)
    phiS2 = phi @ qg.S @ qg.S
    mu = complex(np.vdot(phi, phiS2) / np.vdot(phi, phi))
    mu_res = max_abs(phiS2 - mu * phi)
    return delta, delta_inv, mu, res, mu_res


def derive_modular(qg):
    rho, rho_p = derive_rho(qg)
    delta, delta_inv, mu, res, mu_res = derive_delta_mu(qg)
    A = qg.algebra
    return ModularPackage(
        rho=rho,
        rho_prime=rho_p,
        delta=AlgebraElement(A, delta),
        delta_inv=AlgebraElement(A, delta_inv),
        mu=mu,
        nu=None,
        delta_residual=res,
        mu_residual=mu_res,
    )


def haar_report(qg):
    """Invariance, uniqueness, positivity and faithfulness of the left Haar functional."""
    A = qg.algebra
    rep = Report(f"Haar functional of {qg.name}", qg.tol)
    h = qg.haar
    phi = h.phi.covector
    n = A.dim
    left = np.einsum("ijk,j->ik", qg.D, phi) - np.outer(A.unit, phi)
    rep.check("haar.left_invariance", "(id (x) phi)Delta(a) = phi(a) 1", max_abs(left))
    rep.check("haar.unique", "left invariant functionals form a 1-dimensional space", abs(h.nullity - 1), tol=0.5, norm="dimension")
    psi = phi @ qg.S
    right = np.einsum("ijk,i->jk", qg.D, psi) - np.outer(A.unit, psi)
    rep.check("haar.right_invariance", "(phi S (x) id)Delta(a) = phi S(a) 1", max_abs(right))
    G = h.gram
    rep.info["haar.positive"] = h.positive
    rep.info["haar.faithful"] = h.faithful
    rep.info["haar.phi(1)"] = complex(phi @ A.unit)
    rep.flag("haar.faithful", "phi faithful (Gram matrix nonsingular)", h.faithful)
    if h.positive:
        rep.check("haar.gram_hermitian", "phi(a* b) = conj(phi(b* a))", max_abs(G - G.conj().T))
        rep.check("haar.gram_psd", "phi(a* a) >= 0", max(0.0, -float(np.linalg.eigvalsh(G).min())))
        rep.check("haar.state", "phi(1) = 1", abs(phi @ A.unit - 1), norm=SCALAR)
    else:
        for key in ("haar.gram_hermitian", "haar.gram_psd", "haar.state"):
            rep.skip(key, "left Haar functional is not positive")
    return rep


def run_identity_suite(qg):
    """Modular data of the left Haar functional and all algebraic identities tying them together."""
    A = qg.algebra
    n = A.dim
    m = A.mult
    D = qg.D
    rep = Report(f"modular identities of {qg.name}", qg.tol)
    mod = qg.modular
    S, Si = qg.S, qg.S_inv
    S2, Sm2 = S @ S, Si @ Si
    phi = qg.haar.phi.covector
    psi = phi @ S
    B = qg.haar.bilinear
    rho, rhop = mod.rho.matrix, mod.rho_prime.matrix
    d, di = mod.delta.coords, mod.delta_inv.coords
    K = A.K
    eye = np.eye(n)
    Ld, Rd = A.lmult(d), A.rmult(d)
    Ldi, Rdi = A.lmult(di), A.rmult(di)

    rep.check("modular.kms", "phi(ab) = phi(b rho(a))", max_abs(B - (B @ rho).T))
    _, Bp = gram_matrices(A, psi)
    rep.check("modular.kms_prime", "phi S(ab) = phi S(b rho'(a))", max_abs(Bp - (Bp @ rhop).T))
    rep.check("modular.rho_automorphism", "rho(ab) = rho(a)rho(b)",
              max_abs(np.einsum("ijk,pk->ijp", m, rho) - np.einsum("pi,qj,pqk->ijk", rho, rho, m)))
    rep.check("modular.rho_star", "rho(rho(a*)*) = a", max_abs(rho @ K @ np.conj(rho @ K) - eye))
    rep.check("modular.S_rho_prime", "S rho' = rho S", max_abs(S @ rhop - rho @ S))
    rep.check("modular.S2_rho_commute", "S^2 rho = rho S^2", max_abs(S2 @ rho - rho @ S2))
    rep.check("modular.S2_rho_prime_commute", "S^2 rho' = rho' S^2", max_abs(S2 @ rhop - rhop @ S2))
    lhs = np.einsum("pqr,rk->pqk", D, rho)
    rhs = np.einsum("pi,qj,ijk->pqk", S2, rho, D)
    rep.check("modular.delta_rho", "Delta rho = (S^2 (x) rho)Delta", max_abs(lhs - rhs))
    lhs = np.einsum("pqr,rk->pqk", D, rhop)
    rhs = np.einsum("pi,qj,ijk->pqk", rhop, Sm2, D)
    rep.check("modular.delta_rho_prime", "Delta rho' = (rho' (x) S^-2)Delta", max_abs(lhs - rhs))

    # modular element
    rep.check("modular.delta_defining", "(phi (x) id)(Delta(a)(1 (x) b)) = phi(a) delta b", mod.delta_residual)
    rep.check("modular.delta_inverse", "delta delta^-1 = delta^-1 delta = 1",
              max(max_abs(A.product(d, di) - A.unit), max_abs(A.product(di, d) - A.unit)))
    rep.check("modular.delta_group_like", "Delta(delta) = delta (x) delta", max_abs(qg.Dmat @ d - np.kron(d, d)))
    rep.check("modular.delta_counit", "eps(delta) = 1", abs(qg.counit.covector @ d - 1), norm=SCALAR)
    rep.check("modular.delta_antipode", "S(delta) = delta^-1", max_abs(S @ d - di))
    mu = mod.mu
    rep.info["modular.mu"] = mu
    rep.check("modular.mu_defining", "phi S^2 = mu phi", mod.mu_residual)
    rep.check("modular.rho_delta", "rho(delta) = mu^-1 delta", max_abs(rho @ d - d / mu))
    rep.check("modular.rho_prime_delta", "rho'(delta) = mu^-1 delta", max_abs(rhop @ d - d / mu))
    rep.check("modular.rho_prime_conjugate", "rho'(a) = delta rho(a) delta^-1", max_abs(rhop - Ld @ Rdi @ rho))
    if qg.haar.positive:
        rep.check("modular.mu_unimodular", "|mu| = 1 for positive phi", abs(abs(mu) - 1), norm=SCALAR)
    else:
        rep.skip("modular.mu_unimodular", "left Haar functional is not positive")

    # relations between phi, phi S and delta
    rep.check("modular.phi_S_delta", "phi(S(a)) = phi(a delta)", max_abs(psi - phi @ Rd))
    rep.check("modular.phi_S_mu", "phi(a delta) = mu phi(delta a)", max_abs(phi @ Rd - mu * (phi @ Ld)))
    rep.check("modular.phi_S2", "phi(S^2(a)) = phi(delta^-1 a delta)", max_abs(phi @ S2 - phi @ Ldi @ Rd))
    right = np.einsum("ijk,i->jk", D, psi) - np.outer(A.unit, psi)
    rep.check("modular.psi_right_invariant", "(phi S (x) id)Delta(a) = phi S(a) 1", max_abs(right))

    # strong left invariance
    L = np.einsum("ijb,aj->iab", D, B)  # (id (x) phi)((1 (x) a)Delta(b))
    M = np.einsum("ija,jb->iab", D, B)  # (id (x) phi)(Delta(a)(1 (x) b))
    rep.check("modular.strong_left_invariance",
              "(id (x) phi)((1 (x) a)Delta(b)) = S((id (x) phi)(Delta(a)(1 (x) b)))",
              max_abs(L - np.einsum("pi,iab->pab", S, M)))
    # (id (x) phi S)(Delta(a)(b (x) 1)) = (phi S)(a) delta^-1 b
    lhs = np.einsum("ija,j,ibp->pab", D, psi, m)
    rhs = np.einsum("a,pb->pab", psi, Ldi)
    rep.check("modular.right_delta_inverse", "(id (x) phi S)(Delta(a)(b (x) 1)) = (phi S)(a) delta^-1 b",
              max_abs(lhs - rhs))
    return rep
