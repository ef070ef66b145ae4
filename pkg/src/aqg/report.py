"""Verification reports: a flat list of residual checks."""

from __future__ import annotations

import json
import math

from .algebra import DEFAULT_TOL

REPORT_SCHEMA_VERSION = "1"

COORD = "coordinate max-norm"
OPERATOR = "max-abs matrix entry"
SCALAR = "absolute value"


def fmt_residual(x):
    """Six significant digits, so reports are stable across platforms."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf"
    return float(f"{x:.6g}")


class Entry:
    __slots__ = ("id", "ref", "residual", "tolerance", "norm")

    def __init__(self, id, ref, residual, tolerance, norm):
        self.id = id
        self.ref = ref
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.norm = norm

    @property
    def passed(self):
        return self.residual < self.tolerance

    def to_dict(self):
        return {
            "id": self.id,
            "ref": self.ref,
            "residual": fmt_residual(self.residual),
            "tolerance": self.tolerance,
            "pass": self.passed,
            "norm": self.norm,
        }


class Report:
    def __init__(self, subject="", tol=DEFAULT_TOL):
        self.subject = subject
        self.tol = tol
        self.entries = []
        self.skipped = []
        self.info = {}
        self.errors = []

    def check(self, id, ref, residual, tol=None, norm=COORD):
        entry = Entry(id, ref, residual, self.tol if tol is None else tol, norm)
        self.entries.append(entry)
        return entry

    def flag(self, id, ref, ok):
        """Record a yes/no verdict as residual 0 or 1."""
        return self.check(id, ref, 0.0 if ok else 1.0, tol=0.5, norm="verdict")

    def skip(self, id, reason):
        self.skipped.append({"id": id, "reason": reason})

    def error(self, code, message):
        self.errors.append({"code": code, "message": message})

    def extend(self, other, prefix=""):
        for e in other.entries:
            self.entries.append(Entry(prefix + e.id, e.ref, e.residual, e.tolerance, e.norm))
        for s in other.skipped:
            self.skipped.append({"id": prefix + s["id"], "reason": s["reason"]})
        self.errors.extend(other.errors)
        for k, v in other.info.items():
            self.info[prefix + k] = v
        return self

    @property
    def passed(self):
        return not self.errors and all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def first_failure(self):
        for e in self.entries:
            if not e.passed:
                return e
        return None

    def get(self, id):
        for e in self.entries:
            if e.id == id:
                return e
        raise KeyError(id)

    def ids(self):
        return [e.id for e in self.entries] + [s["id"] for s in self.skipped]

    def max_residual(self):
        vals = [e.residual for e in self.entries if e.norm != "verdict"]
        return max(vals) if vals else 0.0

    def to_dict(self, version="0"):
        n_fail = sum(not e.passed for e in self.entries)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "subject": self.subject,
            "stamp": {"tolerance": self.tol, "version": version},
            "summary": {
                "total": len(self.entries),
                "passed": len(self.entries) - n_fail,
                "failed": n_fail,
                "skipped": len(self.skipped),
                "errors": len(self.errors),
                "max_residual": fmt_residual(self.max_residual()),
            },
            "info": {k: _jsonable(v) for k, v in sorted(self.info.items())},
            "entries": [e.to_dict() for e in self.entries],
            "skipped": list(self.skipped),
            "errors": list(self.errors),
        }

    def to_json(self, version="0"):
        return json.dumps(self.to_dict(version), indent=2, sort_keys=True)

    def format_text(self):
        lines = [f"# {self.subject}"]
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            lines.append(f"{mark}  {e.id:<48} {e.residual:.3e}  (tol {e.tolerance:.0e})")
        for s in self.skipped:
            lines.append(f"SKIP  {s['id']:<48} {s['reason']}")
        for err in self.errors:
            lines.append(f"ERROR {err['code']}: {err['message']}")
        state = "ALL PASS" if self.passed else "FAILED"
        lines.append(f"{state}: {len(self.entries)} checks, {len(self.failures())} failed, {len(self.skipped)} skipped")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, complex):
        return [fmt_residual(v.real), fmt_residual(v.imag)]
    if isinstance(v, float):
        return fmt_residual(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if hasattr(v, "item"):
        return _jsonable(v.item())
    return v
