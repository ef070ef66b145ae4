"""Leg numbering for operators on tensor products of Hilbert spaces."""

from __future__ import annotations

import numpy as np


def embed(op, legs, dims):
    """Operator acting as ``op`` on ``legs`` (0-based, in the given order)
    and as the identity elsewhere, on the space with leg dimensions ``dims``.

    ``embed(W, (0, 2), (n, n, n))`` is W13.
    """
    dims = tuple(dims)
    legs = tuple(legs)
    N = len(dims)
    rest = tuple(i for i in range(N) if i not in legs)
    order = legs + rest
    d_rest = int(np.prod([dims[i] for i in rest])) if rest else 1
    big = np.kron(op, np.eye(d_rest))
    shape = [dims[i] for i in order]
    T = big.reshape(shape + shape)
    perm = [order.index(i) for i in range(N)]
    T = T.transpose(perm + [p + N for p in perm])
    total = int(np.prod(dims))
    return T.reshape(total, total)


def swap(d1, d2):
    """Unitary a (x) b -> b (x) a from C^d1 (x) C^d2 to C^d2 (x) C^d1."""
    P = np.zeros((d1 * d2, d1 * d2))
    for i in range(d1):
        for j in range(d2):
            P[j * d1 + i, i * d2 + j] = 1
    return P


def slice_second(X, d1, d2, p, q):
    """(id (x) omega_{p,q})(X) with omega_{p,q}(y) = <y p, q>."""
    T = X.reshape(d1, d2, d1, d2)
    return np.einsum("b,abcd,d->ac", np.conj(q), T, p)


def slice_first(X, d1, d2, p, q):
    """(omega_{p,q} (x) id)(X)."""
    T = X.reshape(d1, d2, d1, d2)
    return np.einsum("a,abcd,c->bd", np.conj(q), T, p)


def conj_antiunitary(M, X):
    """A X A for the antilinear A = M o conj, as a linear operator."""
    return M @ np.conj(X) @ np.conj(M)


def is_unitary(U):
    d = U.shape[0]
    return max(np.max(np.abs(U.conj().T @ U - np.eye(d))), np.max(np.abs(U @ U.conj().T - np.eye(d))))
