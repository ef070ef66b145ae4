"""Command pipelines: each command assembles one verification report."""

from __future__ import annotations

import json
import re
from functools import cached_property
from importlib import resources

import numpy as np

from .errors import AQGError
from .report import Report

SECTIONS = ("verify", "haar", "modular", "gns", "fundamental", "dual", "universal", "lift", "polar")
COMMANDS = SECTIONS + ("report",)


class Context:
    """Lazily built objects shared between the sections of one run."""

    def __init__(self, qg, seed=0, times=None):
        from .symmetry import DEFAULT_TIMES

        self.qg = qg
        self.seed = seed
        self.times = tuple(times) if times else DEFAULT_TIMES

    def rng(self, salt):
        # one stream per section, so a section's checks do not depend on which ran before it
        return np.random.default_rng([self.seed, SECTIONS.index(salt)])

    @cached_property
    def gns(self):
        from .gns import build_gns

        return build_gns(self.qg)

    @cached_property
    def W(self):
        from .gns import build_fundamental_unitary

        return build_fundamental_unitary(self.qg, self.gns)

    @cached_property
    def dual(self):
        from .duality import build_dual

        return build_dual(self.qg)

    @cached_property
    def dual_gns(self):
        from .universal import dual_gns

        return dual_gns(self.dual)

    @cached_property
    def J_hat(self):
        from .gns import dual_conjugation

        return dual_conjugation(self.gns, self.dual)

    @cached_property
    def universal(self):
        from .universal import build_universal

        return build_universal(self.qg, self.gns)

    @cached_property
    def dual_universal(self):
        from .universal import build_universal

        return build_universal(self.dual.qg, self.dual_gns)

    @cached_property
    def V(self):
        from .universal import build_V

        return build_V(self.qg, self.gns, self.universal)

    @cached_property
    def U(self):
        from .universal import build_U

        return build_U(self.qg, self.dual, self.universal, self.dual_universal)

    @cached_property
    def one_parameter(self):
        from .symmetry import build_one_parameter

        return build_one_parameter(self.qg, self.gns, self.times)

    @cached_property
    def polar(self):
        from .symmetry import build_polar

        return build_polar(self.qg, self.gns, self.J_hat, self.one_parameter)

    def group_likes(self):
        """Unitary group-like elements among the unit and the basis, with labels."""
        qg = self.qg
        A = qg.algebra
        out = [("1", A.unit.copy())]
        for i in range(A.dim):
            x = np.eye(A.dim, dtype=complex)[i]
            if max_abs_(qg.Dmat @ x - np.kron(x, x)) < qg.tol and max_abs_(A.product(A.involve(x), x) - A.unit) < qg.tol:
                if max_abs_(x - A.unit) >= qg.tol:
                    out.append((A.labels[i], x))
        return out


def max_abs_(x):
    return float(np.max(np.abs(x))) if np.size(x) else 0.0


def section_verify(ctx):
    from .hopf import check_comultiplication, verify_antipode_identities

    qg = ctx.qg
    rep = Report(qg.name, qg.tol)
    rep.extend(check_comultiplication(qg.algebra, qg.D, qg.tol, strict=False))
    rep.extend(verify_antipode_identities(qg.algebra, qg.D, qg.hopf, qg.tol))
    return rep


def section_haar(ctx):
    from .haar import haar_report

    return haar_report(ctx.qg)


def section_modular(ctx):
    from .haar import run_identity_suite
    from .symmetry import modular_element_suite

    qg = ctx.qg
    rep = run_identity_suite(qg)
    if qg.positive:
        rep.extend(modular_element_suite(qg, ctx.gns, ctx.one_parameter, ctx.polar))
    else:
        rep.extend(modular_element_suite(qg))
    return rep


def section_gns(ctx):
    from .gns import gns_report

    qg = ctx.qg
    return gns_report(qg.algebra, qg.haar.phi.covector, ctx.gns, qg.name, qg.tol)


def section_fundamental(ctx):
    from .gns import fundamental_report, reduced_structures

    qg = ctx.qg
    rep = fundamental_report(qg, ctx.gns, ctx.W, ctx.rng("fundamental"))
    ctx.gns.J_hat = ctx.J_hat
    rep.extend(reduced_structures(qg, ctx.gns, ctx.W, ctx.dual))
    return rep


def section_dual(ctx):
    from .duality import X_report, dual_report, fourier_report, verify_biduality

    dual = ctx.dual
    rng = ctx.rng("dual")
    rep = dual_report(dual, rng)
    rep.extend(fourier_report(dual, rng))
    rep.extend(X_report(dual))
    rep.extend(verify_biduality(ctx.qg, dual))
    sub = Context(dual.qg, ctx.seed, ctx.times)
    rep.extend(section_verify(sub), prefix="dual:")
    rep.extend(section_haar(sub), prefix="dual:")
    from .haar import run_identity_suite

    rep.extend(run_identity_suite(dual.qg), prefix="dual:")
    return rep


def section_universal(ctx):
    from .universal import (
        Corepresentation,
        U_report,
        V_report,
        b_algebra_report,
        bijection_report,
        character_corep,
        trivial_corep,
        universal_report,
    )
    from .algebra import FiniteStarAlgebra

    qg, dual = ctx.qg, ctx.dual
    rng = ctx.rng("universal")
    rep = universal_report(ctx.universal, rng)
    rep.extend(universal_report(ctx.dual_universal, rng), prefix="dual:")
    rep.extend(V_report(qg, ctx.gns, ctx.V, ctx.W, dual, rng))
    rep.extend(U_report(qg, dual, ctx.universal, ctx.dual_universal, ctx.U, ctx.W, ctx.V))
    U = Corepresentation(qg, dual.algebra, dual.X, "universal", "U")
    carrier = FiniteStarAlgebra.from_matrices(ctx.dual_gns.pi, name="reduced dual")
    Wc = Corepresentation.from_operator(qg, ctx.gns.pi, carrier, ctx.W.matrix, name="W")
    chars = character_corep(qg, [x for _, x in ctx.group_likes()])
    for label, corep in (("U", U), ("trivial", trivial_corep(qg)), ("W", Wc), ("characters", chars)):
        sub, theta = bijection_report(corep, dual, label)
        rep.extend(sub)
        rep.extend(b_algebra_report(corep, ctx.gns, label))
        if label == "U":
            rep.check("corep[U].theta_identity", "U on the dual gives theta = id", max_abs_(theta.matrix - np.eye(qg.dim)))
        if label == "trivial":
            rep.check("corep[trivial].theta_counit", "1 (x) 1 gives theta = counit of the dual",
                      max_abs_(theta.matrix[0] - dual.qg.counit.covector))
        if label == "W":
            # the carrier basis is pi^(e^_j), so theta = pi^ is the identity matrix
            rep.check("corep[W].theta_reduced", "W gives theta = pi^", max_abs_(theta.matrix - np.eye(qg.dim)))
    return rep


def section_lift(ctx):
    from .universal import Corepresentation, character_corep, lift_corep, lift_report, matrix_units, trivial_corep

    qg = ctx.qg
    gns = ctx.gns
    rep = Report(qg.name, qg.tol)
    Mn = matrix_units(qg.dim)
    Wc = Corepresentation.from_operator(qg, gns.pi, Mn, ctx.W.matrix, name="W")
    chars = character_corep(qg, [x for _, x in ctx.group_likes()])
    for label, corep in (("W", Wc), ("trivial", trivial_corep(qg)), ("characters", chars)):
        lifted = lift_corep(corep, gns.pi)
        rep.extend(lift_report(lifted, corep, ctx.V, gns, label))
        if label == "W":
            Vops = np.einsum("ic,cab->iab", lifted.coeffs, Mn.matrices)
            rep.check("lift[W].is_V", "the lift of W is V", max_abs_(Vops - ctx.V.ops))
    return rep


def section_polar(ctx):
    from .symmetry import analyze_automorphism_pair, analyze_group_like

    qg = ctx.qg
    rep = Report(qg.name, qg.tol)
    rep.extend(ctx.one_parameter.report)
    rep.extend(ctx.polar.report)
    S2 = qg.S @ qg.S
    for label, M in (("identity", np.eye(qg.dim)), ("S2", S2)):
        pair = analyze_automorphism_pair(qg, ctx.gns, M, M, ctx.V, ctx.W)
        rep.extend(pair.report, prefix=f"[{label}]")
    for label, x in ctx.group_likes():
        g = analyze_group_like(qg, ctx.gns, x, ctx.one_parameter, ctx.polar)
        rep.extend(g.report, prefix=f"[{label}]")
    return rep


HANDLERS = {
    "verify": section_verify,
    "haar": section_haar,
    "modular": section_modular,
    "gns": section_gns,
    "fundamental": section_fundamental,
    "dual": section_dual,
    "universal": section_universal,
    "lift": section_lift,
    "polar": section_polar,
}

# sections that need a positive faithful Haar functional
POSITIVE_ONLY = {"gns", "fundamental", "universal", "lift", "polar"}


def run_command(command, qg, seed=0, times=None):
    """Run one command; errors propagate, except that ``report`` skips the
    positive-only sections for a non-positive Haar functional."""
    if command not in COMMANDS:
        raise AQGError("USAGE", f"unknown command {command!r}")
    ctx = Context(qg, seed, times)
    rep = Report(qg.name, qg.tol)
    sections = SECTIONS if command == "report" else (command,)
    for name in sections:
        if command == "report" and name in POSITIVE_ONLY and not qg.positive:
            rep.skip(f"section:{name}", "left Haar functional is not positive")
            continue
        rep.extend(HANDLERS[name](ctx))
    rep.info["positive"] = bool(qg.positive)
    rep.info["dimension"] = qg.dim
    return rep


def manifest_key(entry_id):
    """Entry id with per-example labels and sample times replaced by placeholders."""
    key = re.sub(r"^\[(?!identity\]|S2\])[^\]]+\]", "[*]", entry_id)
    return re.sub(r"\[-?[0-9.]+\]$", "[t]", key)


def collect_ids(qg, seed=0):
    """{manifest key: (section, ref)} for everything the sections of ``report`` emit on ``qg``."""
    ctx = Context(qg, seed)
    out = {}
    for name in SECTIONS:
        if name in POSITIVE_ONLY and not qg.positive:
            continue
        for e in HANDLERS[name](ctx).entries:
            out.setdefault(manifest_key(e.id), (name, e.ref))
    return out


def build_manifest():
    from .generate import BUNDLED
    from .hopf import QuantumGroup

    ids = {}
    for make in BUNDLED.values():
        for key, val in collect_ids(QuantumGroup.from_definition(make())).items():
            ids.setdefault(key, val)
    return {
        "version": 1,
        "ids": {k: {"section": sec, "ref": ref} for k, (sec, ref) in sorted(ids.items())},
    }


def load_manifest():
    text = (resources.files("aqg") / "data" / "manifest.json").read_text(encoding="utf-8")
    return json.loads(text)


def coverage_gaps(rep, manifest=None):
    """Manifest ids that ``rep`` neither checked nor explicitly skipped."""
    manifest = manifest or load_manifest()
    seen = {manifest_key(e.id) for e in rep.entries} | {manifest_key(s["id"]) for s in rep.skipped}
    skipped_sections = {s["id"].split(":", 1)[1] for s in rep.skipped if s["id"].startswith("section:")}
    return [k for k, v in manifest["ids"].items() if k not in seen and v["section"] not in skipped_sections]


def write_manifest(path=None):
    """Regenerate the bundled manifest (or write it to ``path``)."""
    target = path or resources.files("aqg") / "data" / "manifest.json"
    with open(target, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(build_manifest(), indent=1) + "\n")
