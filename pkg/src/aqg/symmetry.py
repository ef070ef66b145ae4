"""Automorphism lifting, the one-parameter groups sigma, sigma', K, tau,
the unitary antipode R, group-like elements and the modular element.

Operator-level maps are pulled back to A through pi_r: an operator map f
becomes the matrix whose i-th column holds the coordinates of
pi_r^-1(f(pi_r(e_i))).  The least squares residual of that decomposition
says whether f preserves pi_r(A).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import LinearMap, max_abs
from .errors import AQGError
from .gns import gns_of_functional, hermitian_power
from .legs import conj_antiunitary, is_unitary
from .report import OPERATOR, SCALAR, Report

DEFAULT_TIMES = (0.3, 1.0, -0.7)


def pull_back(gns, f):
    n = gns.pi.shape[0]
    basis = gns.pi.reshape(n, -1).T
    images = np.array([f(X).reshape(-1) for X in gns.pi]).T
    coords, *_ = np.linalg.lstsq(basis, images, rcond=None)
    return coords, max_abs(basis @ coords - images)


def intertwines(f, g, D, h=None):
    """Residual of (f (x) g)Delta = Delta h (h defaults to f)."""
    h = f if h is None else h
    return max_abs(np.einsum("pi,qj,ijk->pqk", f, g, D) - np.einsum("pqr,rk->pqk", D, h))


def _require_positive(qg):
    if not qg.positive:
        raise AQGError("POSITIVITY_REQUIRED", f"{qg.name}: the Haar functional is not positive")


def star_automorphism_residual(A, M):
    mult = max_abs(np.einsum("ijk,pk->ijp", A.mult, M) - np.einsum("pi,qj,pqk->ijk", M, M, A.mult))
    star = max_abs(M @ A.K - A.K @ np.conj(M))
    unit = max_abs(M @ A.unit - A.unit)
    return max(mult, star, unit)


@dataclass
class AutomorphismPair:
    alpha: np.ndarray
    beta: np.ndarray
    r: float
    u: np.ndarray
    v: np.ndarray
    alpha_u: np.ndarray
    report: Report


def analyze_automorphism_pair(qg, gns, alpha, beta, V=None, W=None):
    _require_positive(qg)
    A = qg.algebra
    n = A.dim
    alpha = np.asarray(alpha.matrix if isinstance(alpha, LinearMap) else alpha, dtype=complex)
    beta = np.asarray(beta.matrix if isinstance(beta, LinearMap) else beta, dtype=complex)
    tol = qg.tol
    rep = Report(f"automorphism pair on {qg.name}", tol)
    for name, M in (("alpha", alpha), ("beta", beta)):
        res = star_automorphism_residual(A, M)
        if res >= tol or np.linalg.matrix_rank(M, tol=1e-9) < n:
            raise AQGError("NOT_INTERTWINING", f"{name} is not a *-automorphism (residual {res:.3g})")
        rep.check(f"automorphism.{name}_star_automorphism", f"{name} is a *-automorphism", res)
    res_ab = intertwines(alpha, beta, qg.D)
    if res_ab >= tol:
        raise AQGError("NOT_INTERTWINING", f"(alpha (x) beta)Delta != Delta alpha (residual {res_ab:.3g})")
    rep.check("automorphism.intertwining", "(alpha (x) beta)Delta = Delta alpha", res_ab)
    rep.check("automorphism.beta_intertwining", "(beta (x) beta)Delta = Delta beta", intertwines(beta, beta, qg.D))
    phi = qg.haar.phi.covector
    pa, pb = phi @ alpha, phi @ beta
    r = complex(np.vdot(phi, pa) / np.vdot(phi, phi))
    res = max(max_abs(pa - r * phi), max_abs(pb - r * phi), abs(r.imag))
    if res >= tol or r.real <= 0:
        raise AQGError("NOT_RELATIVELY_INVARIANT", f"no positive r with phi alpha = r phi = phi beta (residual {res:.3g})")
    r = r.real
    rep.check("automorphism.relative_invariance", "phi alpha = r phi and phi beta = r phi", res)
    rep.info["automorphism.r"] = r
    L, Li = gns.L, gns.L_inv
    u = r**-0.5 * L @ alpha @ Li
    v = r**-0.5 * L @ beta @ Li
    rep.check("automorphism.u_unitary", "u Lambda(a) = r^-1/2 Lambda(alpha(a)) is unitary", is_unitary(u), norm=OPERATOR)
    rep.check("automorphism.v_unitary", "v Lambda(a) = r^-1/2 Lambda(beta(a)) is unitary", is_unitary(v), norm=OPERATOR)
    if W is not None:
        Wm = W.matrix
        rep.check("automorphism.W_uv", "W(u (x) v) = (u (x) u)W", max_abs(Wm @ np.kron(u, v) - np.kron(u, u) @ Wm), norm=OPERATOR)
        rep.check("automorphism.W_vv", "W(v (x) v) = (v (x) v)W", max_abs(Wm @ np.kron(v, v) - np.kron(v, v) @ Wm), norm=OPERATOR)
    alpha_u = None
    if V is not None:
        # alpha_u((id (x) omega_{p,q})(V)) = (id (x) omega_{vp,uq})(V), solved over all basis pairs
        I = np.eye(n)
        src = np.array([V.slice(I[p], I[q]) for p in range(n) for q in range(n)]).T
        dst = np.array([V.slice(v @ I[p], u @ I[q]) for p in range(n) for q in range(n)]).T
        X, *_ = np.linalg.lstsq(src.T, dst.T, rcond=None)
        alpha_u = X.T
        rep.check("automorphism.alpha_u_solved", "(alpha_u (x) id)(V) = (1 (x) u*)V(1 (x) v)", max_abs(alpha_u @ src - dst))
        rep.check("automorphism.pi_alpha_u", "pi alpha_u = alpha", max_abs(alpha_u - alpha))
        # alpha_r = Ad u on A_r, so (alpha_u)_r = alpha_r and (alpha_r)_u = alpha
        reduced_u = np.array([gns.represent(alpha_u[:, i]) for i in range(n)])
        alpha_r = np.array([u @ X @ u.conj().T for X in gns.pi])
        rep.check("automorphism.round_trip_reduced", "(alpha_u)_r = alpha_r", max_abs(reduced_u - alpha_r), norm=OPERATOR)
        lifted, res_pb = pull_back(gns, lambda X: u @ X @ u.conj().T)
        rep.check("automorphism.round_trip_universal", "(alpha_r)_u = alpha", max(max_abs(lifted - alpha), res_pb))
        rank = np.linalg.matrix_rank(gns.pi.reshape(n, -1), tol=1e-9)
        rep.check("automorphism.unique", "pi alpha_1 = pi alpha_2 forces alpha_1 = alpha_2 (ker pi = 0)", abs(rank - n), tol=0.5, norm="dimension")
    return AutomorphismPair(alpha, beta, r, u, v, alpha_u, rep)


@dataclass
class OneParameterData:
    nabla: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    nu: float
    times: tuple
    psi_gns: object = None
    report: Report = field(default=None, repr=False)

    def power(self, name, z):
        return hermitian_power(getattr(self, name), z)


def _ad(H, z):
    """x -> H^{iz} x H^{-iz}."""
    Hp, Hm = hermitian_power(H, 1j * z), hermitian_power(H, -1j * z)
    return lambda X: Hp @ X @ Hm


def build_one_parameter(qg, gns, times=DEFAULT_TIMES):
    _require_positive(qg)
    A = qg.algebra
    n = A.dim
    tol = qg.tol
    rep = Report(f"one-parameter groups of {qg.name}", tol)
    L, Li = gns.L, gns.L_inv
    S, Si = qg.S, qg.S_inv
    mod = qg.modular
    d, di = mod.delta.coords, mod.delta_inv.coords
    # P Lambda(a) = Lambda(delta^-1 S^-2(a) delta)
    P = L @ A.lmult(di) @ A.rmult(d) @ Si @ Si @ Li
    Q0 = L @ S @ S @ Li  # Q0 Lambda(a) = Lambda(S^2(a)) = nu^{-i/2} Q Lambda(a)
    Q = hermitian_power(Q0.conj().T @ Q0, 0.5)
    phase = np.vdot(Q, Q0) / np.vdot(Q, Q)
    nu_phase = float(np.exp(-2 * np.angle(phase)))
    rep.check("one_parameter.Q_positive_part", "Q0 = nu^{-i/2} Q with Q positive", max_abs(Q0 - phase * Q), norm=OPERATOR)
    for name, M in (("nabla", gns.nabla), ("P", P), ("Q", Q)):
        rep.check(f"one_parameter.{name}_hermitian", f"{name} selfadjoint", max_abs(M - M.conj().T), norm=OPERATOR)
        ev = np.linalg.eigvalsh((M + M.conj().T) / 2)
        rep.check(f"one_parameter.{name}_positive", f"{name} positive nonsingular", max(0.0, 1e-12 - ev.min()), norm=OPERATOR)
    tau1, _ = pull_back(gns, _ad(Q, 1.0))
    phi = qg.haar.phi.covector
    nu_c = complex(np.vdot(phi, phi @ tau1) / np.vdot(phi, phi))
    rep.check("one_parameter.nu_solved", "phi tau_1 = nu phi", max_abs(phi @ tau1 - nu_c * phi))
    nu = float(nu_c.real)
    rep.check("one_parameter.nu_consistent", "nu from tau_1 agrees with the phase of S^2 on Lambda(A)", abs(nu - nu_phase), norm=SCALAR)
    rep.check("one_parameter.nu_trivial", "nu = 1", abs(nu_c - 1), norm=SCALAR)
    rep.info["one_parameter.nu"] = nu
    # P^k, Q^k actions, k = -1, 1
    M1 = A.lmult(di) @ A.rmult(d) @ Si @ Si
    Mm1 = A.lmult(d) @ A.rmult(di) @ S @ S
    rep.check("one_parameter.P[1]", "P Lambda(a) = Lambda(delta^-1 S^-2(a) delta)", max_abs(P @ L - L @ M1), norm=OPERATOR)
    rep.check("one_parameter.P[-1]", "P^-1 Lambda(a) = Lambda(delta S^2(a) delta^-1)", max_abs(np.linalg.inv(P) @ L - L @ Mm1), norm=OPERATOR)
    for k in (1, -1):
        lhs = np.linalg.matrix_power(Q, k) if k > 0 else np.linalg.inv(Q)
        Sk = S @ S if k > 0 else Si @ Si
        rhs = nu ** (k * 0.5j) * L @ Sk @ Li
        rep.check(f"one_parameter.Q[{k}]", f"Q^{k} Lambda(a) = nu^(({k})i/2) Lambda(S^({2 * k})(a))", max_abs(lhs - rhs), norm=OPERATOR)
    # sigma' from the GNS construction of psi = phi S, independently of sigma
    psi_gns = gns_of_functional(A, phi @ S, tol)
    D = qg.D
    sig_i, r1 = pull_back(gns, lambda X: np.linalg.inv(gns.nabla) @ X @ gns.nabla)
    rep.check("one_parameter.sigma_analytic", "sigma_i(pi_u(a)) = pi_u(rho^-1(a))", max(max_abs(sig_i - np.linalg.inv(gns.rho)), r1))
    tau_i, r2 = pull_back(gns, lambda X: np.linalg.inv(Q) @ X @ Q)
    rep.check("one_parameter.tau_analytic", "tau_i(pi_u(a)) = pi_u(S^-2(a))", max(max_abs(tau_i - Si @ Si), r2))
    sig0, _ = pull_back(gns, _ad(gns.nabla, 0.0))
    rep.check("one_parameter.sigma_zero", "sigma_0 = id", max_abs(sig0 - np.eye(n)))
    dpi = gns.represent(d)
    for t in times:
        sig, ra = pull_back(gns, _ad(gns.nabla, t))
        sigm, _ = pull_back(gns, _ad(gns.nabla, -t))
        K, rb = pull_back(gns, _ad(P, t))
        tau, rc = pull_back(gns, _ad(Q, t))
        taum, _ = pull_back(gns, _ad(Q, -t))
        sigp, rd = pull_back(psi_gns, _ad(psi_gns.nabla, t))
        rep.check(f"one_parameter.preserves_A[{t}]", "sigma_t, K_t, tau_t, sigma'_t preserve A", max(ra, rb, rc, rd))
        rep.check(f"one_parameter.sigma_star[{t}]", "sigma_t is a *-automorphism", star_automorphism_residual(A, sig))
        rep.check(f"one_parameter.sigma_K[{t}]", "(sigma_t (x) K_t)Delta = Delta sigma_t", intertwines(sig, K, D))
        rep.check(f"one_parameter.tau_sigma[{t}]", "(tau_t (x) sigma_t)Delta = Delta sigma_t", intertwines(tau, sig, D))
        rep.check(f"one_parameter.tau_tau[{t}]", "(tau_t (x) tau_t)Delta = Delta tau_t", intertwines(tau, tau, D))
        rep.check(f"one_parameter.sigma_prime_tau[{t}]", "(sigma'_t (x) tau_-t)Delta = Delta sigma'_t", intertwines(sigp, taum, D))
        dit, _ = pull_back(gns, lambda X: hermitian_power(dpi, 1j * t) @ X @ hermitian_power(dpi, -1j * t))
        rep.check(f"one_parameter.sigma_prime_delta[{t}]", "sigma'_t(a) = delta^{it} sigma_t(a) delta^{-it}", max_abs(sigp - dit @ sig))
        rep.check(f"one_parameter.K_delta[{t}]", "K_t(a) = delta^{-it} tau_-t(a) delta^{it}",
                  max_abs(K - pull_back(gns, lambda X: hermitian_power(dpi, -1j * t) @ X @ hermitian_power(dpi, 1j * t))[0] @ taum))
        rep.check(f"one_parameter.phi_tau[{t}]", "phi tau_t = nu^t phi", max_abs(phi @ tau - nu**t * phi))
        rep.check(f"one_parameter.sigma_group[{t}]", "sigma_t sigma_-t = id", max_abs(sig @ sigm - np.eye(n)))
    return OneParameterData(gns.nabla, P, Q, nu, tuple(times), psi_gns, rep)


@dataclass
class PolarData:
    R: LinearMap
    tau_half: np.ndarray
    kappa: np.ndarray
    report: Report


def build_polar(qg, gns, J_hat, onep):
    _require_positive(qg)
    A = qg.algebra
    n = A.dim
    rep = Report(f"polar decomposition of the antipode of {qg.name}", qg.tol)
    # R(x) = J^ x* J^
    R, pres = pull_back(gns, lambda X: conj_antiunitary(J_hat.matrix, X.conj().T))
    rep.check("polar.R_preserves_A", "J^ pi_r(a)* J^ lies in pi_r(A)", pres)
    Q = onep.Q
    # tau_{-i/2}(x) = Q^{1/2} x Q^{-1/2}
    th, _ = pull_back(gns, lambda X: hermitian_power(Q, 0.5) @ X @ hermitian_power(Q, -0.5))
    kappa = R @ th
    rep.check("polar.decomposition", "R(tau_{-i/2}(a)) = S(a)", max_abs(kappa - qg.S))
    rep.check("polar.R_involutive", "R^2 = id", max_abs(R @ R - np.eye(n)))
    rep.check("polar.R_unit", "R(1) = 1", max_abs(R @ A.unit - A.unit))
    rep.check("polar.R_star", "R(a*) = R(a)*", max_abs(R @ A.K - A.K @ np.conj(R)))
    anti = np.einsum("ijk,pk->ijp", A.mult, R) - np.einsum("pj,qi,pqk->ijk", R, R, A.mult)
    rep.check("polar.R_antimultiplicative", "R(ab) = R(b)R(a)", max_abs(anti))
    lhs = np.einsum("pi,qj,jik->pqk", R, R, qg.D)
    rep.check("polar.R_coproduct", "chi(R (x) R)Delta = Delta R", max_abs(lhs - np.einsum("pqr,rk->pqk", qg.D, R)))
    for t in onep.times:
        tau, _ = pull_back(gns, _ad(Q, t))
        rep.check(f"polar.R_tau[{t}]", "R tau_t = tau_t R", max_abs(R @ tau - tau @ R))
        sig, _ = pull_back(gns, _ad(gns.nabla, -t))
        sigp, _ = pull_back(onep.psi_gns, _ad(onep.psi_gns.nabla, t))
        rep.check(f"polar.sigma_prime_R[{t}]", "sigma'_t = R sigma_-t R", max_abs(sigp - R @ sig @ R))
    phi = qg.haar.phi.covector
    psi = phi @ R
    right = np.einsum("ijk,i->jk", qg.D, psi) - np.outer(A.unit, psi)
    rep.check("polar.psi_right_invariant", "psi = phi R is right invariant", max_abs(right))
    rep.check("polar.psi_is_phi_S", "phi R = phi S", max_abs(psi - phi @ qg.S))
    Rmap = LinearMap(A, A, R, antimultiplicative=True)
    return PolarData(Rmap, th, kappa, rep)


@dataclass
class GroupLikeReport:
    element: np.ndarray
    kind: str
    lam: float
    report: Report


def analyze_group_like(qg, gns, v, onep, polar):
    A = qg.algebra
    v = np.asarray(v.coords if hasattr(v, "coords") else v, dtype=complex)
    tol = qg.tol
    res = max_abs(qg.Dmat @ v - np.kron(v, v))
    if res >= tol or max_abs(v) < tol:
        raise AQGError("NOT_GROUP_LIKE", f"Delta(v) != v (x) v (residual {res:.3g})")
    _require_positive(qg)
    rep = Report(f"group-like element of {qg.name}", tol)
    rep.check("group_like.coproduct", "Delta(v) = v (x) v", res)
    vs = A.involve(v)
    unitary = max(max_abs(A.product(vs, v) - A.unit), max_abs(A.product(v, vs) - A.unit))
    X = gns.represent(v)
    positive = max_abs(vs - v) < tol and np.linalg.eigvalsh((X + X.conj().T) / 2).min() > tol
    if unitary < tol:
        kind = "unitary"
    elif positive:
        kind = "positive"
    else:
        raise AQGError("NOT_GROUP_LIKE", "group-like element is neither unitary nor strictly positive")
    rep.info["group_like.kind"] = kind
    logs = []
    sig_images = {}
    for t in onep.times:
        sig, _ = pull_back(gns, _ad(gns.nabla, t))
        sv = sig @ v
        c = np.vdot(v, sv) / np.vdot(v, v)
        sig_images[t] = sv
        logs.append(np.angle(c) / t if kind == "unitary" else np.log(abs(c)) / t)
    lam = float(np.exp(np.mean(logs)))
    for t, sv in sig_images.items():
        factor = lam ** (1j * t) if kind == "unitary" else lam**t
        rep.check(f"group_like.sigma[{t}]", "sigma_t(v) = lambda^{it} v" if kind == "unitary" else "sigma_t(v) = lambda^t v",
                  max_abs(sv - factor * v))
        tau, _ = pull_back(gns, _ad(onep.Q, t))
        rep.check(f"group_like.tau[{t}]", "tau_t(v) = v", max_abs(tau @ v - v))
    R = polar.R.matrix
    if kind == "unitary":
        rep.check("group_like.R", "R(v) = v*", max_abs(R @ v - vs))
    else:
        rep.check("group_like.R", "R(v) = v^-1", max_abs(R @ v - A.inverse(v)))
    rep.info["group_like.lambda"] = lam
    return GroupLikeReport(v, kind, lam, rep)


def _algebraic_power(A, x, z):
    """x^z for x with positive spectrum, through the left regular matrix."""
    w, U = np.linalg.eig(A.lmult(x))
    f = (U * np.power(w.astype(complex), z)) @ np.linalg.inv(U)
    return f @ A.unit


def modular_element_suite(qg, gns=None, onep=None, polar=None):
    A = qg.algebra
    n = A.dim
    rep = Report(f"modular element of {qg.name}", qg.tol)
    mod = qg.modular
    d, di = mod.delta.coords, mod.delta_inv.coords
    phi = qg.haar.phi.covector
    rep.check("delta.defining", "(phi (x) id)(Delta(a)(1 (x) b)) = phi(a) delta b", mod.delta_residual)
    rep.check("delta.group_like", "Delta(delta) = delta (x) delta", max_abs(qg.Dmat @ d - np.kron(d, d)))
    rep.check("delta.antipode", "S(delta) = delta^-1", max_abs(qg.S @ d - di))
    rep.check("delta.rho", "rho(delta) = mu^-1 delta", max_abs(mod.rho.matrix @ d - d / mod.mu))
    rep.check("delta.counit", "eps(delta) = 1", abs(qg.counit.covector @ d - 1), norm=SCALAR)
    rep.info["delta.coords"] = [complex(x) for x in d]
    rep.info["delta.mu"] = complex(mod.mu)
    res = 0.0
    for i in range(n):
        for j in range(n):
            y = A.product(A.involve(np.eye(n)[i]), np.eye(n)[j])
            lhs = np.einsum("ijk,i,k->j", qg.D, phi, y)
            res = max(res, max_abs(lhs - (phi @ y) * d))
    rep.check("delta.slice", "(phi (x) id)Delta(y) = phi(y) delta", res)
    if gns is None or onep is None or polar is None:
        for key in ("delta.reduced", "delta.tau[t]", "delta.R", "delta.sigma[t]", "delta.psi_density", "delta.powers"):
            rep.skip(key, "requires a positive Haar functional")
        return rep
    dpi = gns.represent(d)
    rep.check("delta.reduced", "pi(delta_u) = delta_r, a positive operator",
              max(max_abs(dpi - dpi.conj().T), max(0.0, -float(np.linalg.eigvalsh((dpi + dpi.conj().T) / 2).min()))), norm=OPERATOR)
    R = polar.R.matrix
    rep.check("delta.R", "R(delta) = delta^-1", max_abs(R @ d - di))
    for t in onep.times:
        tau, _ = pull_back(gns, _ad(onep.Q, t))
        sig, _ = pull_back(gns, _ad(gns.nabla, t))
        rep.check(f"delta.tau[{t}]", "tau_t(delta) = delta", max_abs(tau @ d - d))
        rep.check(f"delta.sigma[{t}]", "sigma_t(delta) = nu^-t delta", max_abs(sig @ d - onep.nu ** (-t) * d))
    # psi = phi(delta^1/2 . delta^1/2), with delta^1/2 from spectral calculus on pi(delta)
    half = hermitian_power(dpi, 0.5)
    psi = phi @ qg.S
    dens = np.array([phi @ pull_back_vector(gns, half @ X @ half) for X in gns.pi])
    rep.check("delta.psi_density", "phi S(a) = phi(delta^1/2 a delta^1/2)", max_abs(dens - psi))
    res = 0.0
    for z in (1j, -1j, 0.5):
        dz = _algebraic_power(A, d, z)
        Pz = hermitian_power(dpi, z)
        for i in range(n):
            res = max(res, max_abs(Pz @ gns.pi[i] - gns.represent(A.product(dz, np.eye(n)[i]))))
    rep.check("delta.powers", "delta^z pi_u(a) = pi_u(delta^z a) for z = i, -i, 1/2", res, norm=OPERATOR)
    return rep


def pull_back_vector(gns, X):
    n = gns.pi.shape[0]
    basis = gns.pi.reshape(n, -1).T
    c, *_ = np.linalg.lstsq(basis, X.reshape(-1), rcond=None)
    return c
