"""Definition files: UTF-8 JSON describing an algebra with comultiplication.

Layout (complex numbers as ``[re, im]``)::

    {
      "format": "aqg-definition", "version": 1,
      "name": "group_z2", "dimension": 2, "basis": ["e", "g"],
      "unit": [[1, 0], [0, 0]],
      "mult":   [[i, j, [[k, [re, im]], ...]], ...],   # e_i e_j
      "star":   [[i, [[j, [re, im]], ...]], ...],      # e_i*
      "comult": [[k, [[p, q, [re, im]], ...]], ...]    # Delta(e_k)
    }

Entries not listed are zero.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .errors import AQGError
from .generate import Definition

FORMAT = "aqg-definition"

_complex = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
_index = {"type": "integer", "minimum": 0}

SCHEMA = {
    "type": "object",
    "required": ["format", "version", "name", "dimension", "basis", "unit", "mult", "star", "comult"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT},
        "version": {"const": 1},
        "name": {"type": "string"},
        "dimension": {"type": "integer", "minimum": 1},
        "basis": {"type": "array", "items": {"type": "string"}},
        "unit": {"type": "array", "items": _complex},
        "mult": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_index, _index, {"type": "array", "items": {
                    "type": "array", "prefixItems": [_index, _complex], "minItems": 2, "maxItems": 2}}],
                "minItems": 3,
                "maxItems": 3,
            },
        },
        "star": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_index, {"type": "array", "items": {
                    "type": "array", "prefixItems": [_index, _complex], "minItems": 2, "maxItems": 2}}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "comult": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_index, {"type": "array", "items": {
                    "type": "array", "prefixItems": [_index, _index, _complex], "minItems": 3, "maxItems": 3}}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "meta": {"type": "object"},
    },
}


def _num(x):
    x = float(x)
    return int(x) if x.is_integer() and abs(x) < 2**53 else x


def _c(z):
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


def to_document(d):
    n = d.dimension
    mult = []
    for i in range(n):
        for j in range(n):
            terms = [[k, _c(d.mult[i, j, k])] for k in range(n) if d.mult[i, j, k] != 0]
            if terms:
                mult.append([i, j, terms])
    star = [[i, [[j, _c(d.star[i, j])] for j in range(n) if d.star[i, j] != 0]] for i in range(n)]
    comult = []
    for k in range(n):
        terms = [[p, q, _c(d.comult[p, q, k])] for p in range(n) for q in range(n) if d.comult[p, q, k] != 0]
        comult.append([k, terms])
    doc = {
        "format": FORMAT,
        "version": 1,
        "name": d.name,
        "dimension": n,
        "basis": list(d.labels),
        "unit": [_c(x) for x in d.unit],
        "mult": mult,
        "star": star,
        "comult": comult,
    }
    if d.meta:
        doc["meta"] = d.meta
    return doc


def dumps(d):
    """Serialize with one sparse entry per line."""
    doc = to_document(d)
    lines = []
    for key, value in doc.items():
        head = f" {json.dumps(key)}: "
        if key in ("unit", "mult", "star", "comult") and value:
            items = ",\n".join("  " + json.dumps(v, ensure_ascii=False) for v in value)
            lines.append(head + "[\n" + items + "\n ]")
        else:
            lines.append(head + json.dumps(value, ensure_ascii=False))
    return "{\n" + ",\n".join(lines) + "\n}\n"


def dump(d, path):
    Path(path).write_text(dumps(d), encoding="utf-8")


def _check_index(value, n, where):
    if value >= n:
        raise AQGError("SCHEMA_ERROR", f"{where}: index {value} out of range for dimension {n}")


def from_document(doc):
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise AQGError("SCHEMA_ERROR", f"field {where}: {exc.message}") from None
    n = doc["dimension"]
    if len(doc["basis"]) != n:
        raise AQGError("SCHEMA_ERROR", f"basis: {len(doc['basis'])} labels for dimension {n}")
    if len(doc["unit"]) != n:
        raise AQGError("SCHEMA_ERROR", f"unit: {len(doc['unit'])} coordinates for dimension {n}")
    mult = np.zeros((n, n, n), dtype=complex)
    for e, (i, j, terms) in enumerate(doc["mult"]):
        _check_index(i, n, f"mult/{e}/0")
        _check_index(j, n, f"mult/{e}/1")
        for t, (k, z) in enumerate(terms):
            _check_index(k, n, f"mult/{e}/2/{t}")
            mult[i, j, k] += complex(*z)
    star = np.zeros((n, n), dtype=complex)
    for e, (i, terms) in enumerate(doc["star"]):
        _check_index(i, n, f"star/{e}/0")
        for t, (j, z) in enumerate(terms):
            _check_index(j, n, f"star/{e}/1/{t}")
            star[i, j] += complex(*z)
    comult = np.zeros((n, n, n), dtype=complex)
    for e, (k, terms) in enumerate(doc["comult"]):
        _check_index(k, n, f"comult/{e}/0")
        for t, (p, q, z) in enumerate(terms):
            _check_index(p, n, f"comult/{e}/1/{t}")
            _check_index(q, n, f"comult/{e}/1/{t}")
            comult[p, q, k] += complex(*z)
    unit = np.array([complex(*z) for z in doc["unit"]])
    return Definition(doc["name"], list(doc["basis"]), mult, star, unit, comult, dict(doc.get("meta", {})))


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AQGError("PARSE_ERROR", f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def bundled_path(name):
    return resources.files("aqg") / "data" / name


def resolve(path):
    """The file itself, or a bundled definition with the same basename."""
    p = Path(path)
    if p.exists():
        return p
    for candidate in (p.name, p.name + ".aqg.json" if not p.name.endswith(".json") else p.name):
        b = bundled_path(candidate)
        if b.is_file():
            return b
    raise AQGError("PARSE_ERROR", f"{path}: no such file")


def read_definition(path):
    p = resolve(path)
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise AQGError("PARSE_ERROR", f"{path}: not UTF-8 ({exc.reason})") from None
    return loads(text)


def load(path, tol=1e-9):
    """(algebra, comultiplication) as a QuantumGroup with the axioms checked."""
    from .algebra import FiniteStarAlgebra
    from .hopf import QuantumGroup

    d = read_definition(path)
    try:
        A = FiniteStarAlgebra(d.mult, d.star, d.unit, d.labels, d.name)
    except ValueError as exc:
        raise AQGError("SCHEMA_ERROR", str(exc)) from None
    return QuantumGroup(A, d.comult, d.name, tol, check=True)
