"""Generators for the bundled example definitions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import AQGError


@dataclass
class Definition:
    """Raw data of a definition file.

    ``comult[i, j, k]`` is the coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``.
    """

    name: str
    labels: list
    mult: np.ndarray
    star: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def dimension(self):
        return len(self.labels)


# groups given by Cayley tables, table[a][b] = index of a*b


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def klein_table():
    return [[a ^ b for b in range(4)] for a in range(4)]


def _perm_table(perms):
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(len(q)))

    return [[index[compose(p, q)] for q in perms] for p in perms]


S3_ELEMENTS = sorted(itertools.permutations(range(3)))
S3_LABELS = ["".join(str(x) for x in p) for p in S3_ELEMENTS]


def symmetric3_table():
    return _perm_table(S3_ELEMENTS)


def validate_group(table):
    """Return (identity, inverse list) or raise NOT_A_GROUP."""
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise AQGError("NOT_A_GROUP", "Cayley table must be a non-empty square table")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise AQGError("NOT_A_GROUP", "Cayley table entries out of range")
    ids = [e for e in range(n) if all(t[e, x] == x and t[x, e] == x for x in range(n))]
    if len(ids) != 1:
        raise AQGError("NOT_A_GROUP", "no two-sided identity")
    e = ids[0]
    inverse = []
    for a in range(n):
        inv = [b for b in range(n) if t[a, b] == e and t[b, a] == e]
        if not inv:
            raise AQGError("NOT_A_GROUP", f"element {a} has no inverse")
        inverse.append(inv[0])
    for a in range(n):
        for b in range(n):
            if not np.array_equal(t[t[a, b], :], t[a, t[b, :]]):
                raise AQGError("NOT_A_GROUP", "operation is not associative")
    return e, inverse


def group_algebra(table, labels=None, name="group algebra"):
    """C[G]: e_g e_h = e_gh, e_g* = e_(g^-1), Delta(g) = g (x) g."""
    e, inverse = validate_group(table)
    n = len(table)
    mult = np.zeros((n, n, n), dtype=complex)
    star = np.zeros((n, n), dtype=complex)
    comult = np.zeros((n, n, n), dtype=complex)
    for a in range(n):
        star[a, inverse[a]] = 1
        comult[a, a, a] = 1
        for b in range(n):
            mult[a, b, table[a][b]] = 1
    unit = np.zeros(n, dtype=complex)
    unit[e] = 1
    labels = labels or [f"g{i}" for i in range(n)]
    return Definition(name, list(labels), mult, star, unit, comult, {"kind": "group_algebra", "table": table})


def function_algebra(table, labels=None, name="function algebra"):
    """F(G): pointwise product on indicators, Delta(f)(s, t) = f(st)."""
    validate_group(table)
    n = len(table)
    mult = np.zeros((n, n, n), dtype=complex)
    comult = np.zeros((n, n, n), dtype=complex)
    for a in range(n):
        mult[a, a, a] = 1
        for b in range(n):
            comult[a, b, table[a][b]] = 1
    labels = labels or [f"d{i}" for i in range(n)]
    return Definition(
        name,
        [f"delta_{l}" for l in labels],
        mult,
        np.eye(n, dtype=complex),
        np.ones(n, dtype=complex),
        comult,
        {"kind": "function_algebra", "table": table},
    )


def sweedler():
    """Sweedler's 4-dimensional Hopf *-algebra, basis (1, g, x, gx).

    Relations g^2 = 1, x^2 = 0, xg = -gx, with g* = g, x* = x,
    Delta(g) = g (x) g and Delta(x) = x (x) 1 + g (x) x.
    """
    labels = ["1", "g", "x", "gx"]
    # words as (power of g, power of x) with sign bookkeeping
    words = [(0, 0), (1, 0), (0, 1), (1, 1)]
    index = {w: i for i, w in enumerate(words)}
    n = 4
    mult = np.zeros((n, n, n), dtype=complex)
    for i, (g1, x1) in enumerate(words):
        for j, (g2, x2) in enumerate(words):
            if x1 + x2 > 1:
                continue
            # g^g1 x^x1 g^g2 x^x2 = (-1)^(x1 g2) g^(g1+g2) x^(x1+x2)
            sign = -1 if (x1 and g2) else 1
            mult[i, j, index[((g1 + g2) % 2, x1 + x2)]] = sign
    star = np.zeros((n, n), dtype=complex)
    star[0, 0] = star[1, 1] = star[2, 2] = 1
    star[3, 3] = -1  # (gx)* = x g = -gx
    comult = np.zeros((n, n, n), dtype=complex)

    def put(k, terms):
        for (i, j), c in terms:
            comult[index[i], index[j], k] += c

    put(0, [(((0, 0), (0, 0)), 1)])
    put(1, [(((1, 0), (1, 0)), 1)])
    put(2, [(((0, 1), (0, 0)), 1), (((1, 0), (0, 1)), 1)])
    put(3, [(((1, 1), (1, 0)), 1), (((0, 0), (1, 1)), 1)])
    unit = np.array([1, 0, 0, 0], dtype=complex)
    return Definition("sweedler", labels, mult, star, unit, comult, {"kind": "sweedler"})


def kac_paljutkin():
    """The 8-dimensional Kac-Paljutkin quantum group.

    As an algebra C^4 (+) M_2 with basis e1..e4 (minimal central
    projections of the abelian part) and matrix units e11, e12, e21, e22.
    """
    labels = ["e1", "e2", "e3", "e4", "e11", "e12", "e21", "e22"]
    ix = {l: i for i, l in enumerate(labels)}
    n = 8
    mult = np.zeros((n, n, n), dtype=complex)
    for k in range(4):
        mult[k, k, k] = 1
    for a in (1, 2):
        for b in (1, 2):
            for c in (1, 2):
                mult[ix[f"e{a}{b}"], ix[f"e{b}{c}"], ix[f"e{a}{c}"]] = 1
    star = np.eye(n, dtype=complex)
    star[ix["e12"], ix["e12"]] = 0
    star[ix["e21"], ix["e21"]] = 0
    star[ix["e12"], ix["e21"]] = 1
    star[ix["e21"], ix["e12"]] = 1
    unit = np.array([1, 1, 1, 1, 1, 0, 0, 1], dtype=complex)
    comult = np.zeros((n, n, n), dtype=complex)
    h = 0.5
    rows = {
        "e1": [("e1", "e1", 1), ("e2", "e2", 1), ("e3", "e3", 1), ("e4", "e4", 1),
               ("e11", "e11", h), ("e12", "e12", h), ("e21", "e21", h), ("e22", "e22", h)],
        "e2": [("e1", "e2", 1), ("e2", "e1", 1), ("e3", "e4", 1), ("e4", "e3", 1),
               ("e11", "e22", h), ("e22", "e11", h), ("e21", "e12", 0.5j), ("e12", "e21", -0.5j)],
        "e3": [("e1", "e3", 1), ("e3", "e1", 1), ("e2", "e4", 1), ("e4", "e2", 1),
               ("e11", "e22", h), ("e22", "e11", h), ("e21", "e12", -0.5j), ("e12", "e21", 0.5j)],
        "e4": [("e1", "e4", 1), ("e4", "e1", 1), ("e2", "e3", 1), ("e3", "e2", 1),
               ("e11", "e11", h), ("e22", "e22", h), ("e12", "e12", -h), ("e21", "e21", -h)],
        "e11": [("e1", "e11", 1), ("e11", "e1", 1), ("e2", "e22", 1), ("e22", "e2", 1),
                ("e3", "e22", 1), ("e22", "e3", 1), ("e4", "e11", 1), ("e11", "e4", 1)],
        "e12": [("e1", "e12", 1), ("e12", "e1", 1), ("e2", "e21", 1j), ("e21", "e2", -1j),
                ("e3", "e21", -1j), ("e21", "e3", 1j), ("e4", "e12", -1), ("e12", "e4", -1)],
        "e21": [("e1", "e21", 1), ("e21", "e1", 1), ("e2", "e12", -1j), ("e12", "e2", 1j),
                ("e3", "e12", 1j), ("e12", "e3", -1j), ("e4", "e21", -1), ("e21", "e4", -1)],
        "e22": [("e1", "e22", 1), ("e22", "e1", 1), ("e2", "e11", 1), ("e11", "e2", 1),
                ("e3", "e11", 1), ("e11", "e3", 1), ("e4", "e22", 1), ("e22", "e4", 1)],
    }
    for k, terms in rows.items():
        for a, b, c in terms:
            comult[ix[a], ix[b], ix[k]] += c
    return Definition("kac_paljutkin", labels, mult, star, unit, comult, {"kind": "kac_paljutkin"})


GROUPS = {
    "z1": (lambda: cyclic_table(1), None),
    "z2": (lambda: cyclic_table(2), None),
    "z3": (lambda: cyclic_table(3), None),
    "z4": (lambda: cyclic_table(4), None),
    "z5": (lambda: cyclic_table(5), None),
    "z6": (lambda: cyclic_table(6), None),
    "z2xz2": (klein_table, None),
    "s3": (symmetric3_table, S3_LABELS),
}


def group_labels(group):
    _, labels = GROUPS[group]
    if labels is not None:
        return labels
    return [f"g{i}" for i in range(len(GROUPS[group][0]()))]


def generate_example(kind, group=None, table=None, labels=None):
    """Build a definition for ``kind`` in {group_algebra, function_algebra,
    kac_paljutkin, sweedler}; group kinds take a named group or a table."""
    if kind == "kac_paljutkin":
        return kac_paljutkin()
    if kind == "sweedler":
        return sweedler()
    if kind not in ("group_algebra", "function_algebra"):
        raise AQGError("USAGE", f"unknown example kind {kind!r}")
    if table is None:
        if group not in GROUPS:
            raise AQGError("USAGE", f"unknown group {group!r}")
        table = GROUPS[group][0]()
        labels = labels or group_labels(group)
        tag = group
    else:
        tag = "custom"
    table = [list(map(int, row)) for row in table]
    if kind == "group_algebra":
        return group_algebra(table, labels, name=f"group_{tag}")
    return function_algebra(table, labels, name=f"function_{tag}")


BUNDLED = {
    "group_z2": lambda: generate_example("group_algebra", "z2"),
    "group_z4": lambda: generate_example("group_algebra", "z4"),
    "group_s3": lambda: generate_example("group_algebra", "s3"),
    "function_z2": lambda: generate_example("function_algebra", "z2"),
    "function_s3": lambda: generate_example("function_algebra", "s3"),
    "kac_paljutkin": kac_paljutkin,
    "sweedler": sweedler,
}
