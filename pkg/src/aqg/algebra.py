"""Finite-dimensional *-algebras given by structure constants.

Conventions used throughout the package:

* ``mult[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.
* ``star[i, j]`` is the coefficient of ``e_j`` in ``e_i*``; internally the
  conjugate-linear involution acts on coordinates as ``x -> K @ conj(x)``
  with ``K = star.T``.
* Tensor products use row-major basis ordering: ``e_i (x) f_j`` has index
  ``i * dim(B) + j``.
"""

from __future__ import annotations

import string
from functools import cached_property

import numpy as np

from .errors import AQGError

DEFAULT_TOL = 1e-9


def _as_complex(x, name):
    arr = np.asarray(x, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise AQGError("SCHEMA_ERROR", f"{name} contains NaN or infinity")
    return arr


def max_abs(x):
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


class FiniteStarAlgebra:
    """A unital *-algebra on C^n given by structure constants."""

    def __init__(self, mult, star, unit, labels=None, name=None):
        mult = _as_complex(mult, "mult")
        n = mult.shape[0]
        if mult.shape != (n, n, n):
            raise AQGError("SCHEMA_ERROR", f"mult has shape {mult.shape}, expected {(n, n, n)}")
        self._mult = mult
        self._init_common(n, star, unit, labels, name)

    def _init_common(self, n, star, unit, labels, name):
        star = _as_complex(star, "star")
        unit = _as_complex(unit, "unit")
        if star.shape != (n, n):
            raise AQGError("SCHEMA_ERROR", f"star has shape {star.shape}, expected {(n, n)}")
        if unit.shape != (n,):
            raise AQGError("SCHEMA_ERROR", f"unit has shape {unit.shape}, expected {(n,)}")
        self.dim = n
        self.star = star
        self.K = star.T.copy()
        self.unit = unit
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(n)]
        if len(self.labels) != n:
            raise AQGError("SCHEMA_ERROR", "number of labels differs from the dimension")
        self.name = name or "algebra"
        for arr in (self.star, self.K, self.unit):
            arr.setflags(write=False)

    # structure

    @property
    def mult(self):
        return self._mult

    @property
    def factors(self):
        return (self,)

    @property
    def factor_dims(self):
        return tuple(f.dim for f in self.factors)

    @classmethod
    def from_matrices(cls, matrices, name="matrix algebra", tol=DEFAULT_TOL):
        """The *-algebra spanned by a list of linearly independent matrices.

        The span must be closed under products and adjoints and contain the
        identity; the given matrices become the basis.
        """
        mats = np.asarray(matrices, dtype=complex)
        n, d, _ = mats.shape
        basis = mats.reshape(n, d * d).T
        if np.linalg.matrix_rank(basis, tol=1e-9 * max(1.0, max_abs(basis))) < n:
            raise AQGError("AXIOM_ERROR", "matrices are linearly dependent")

        def coords(targets):
            t = targets.reshape(-1, d * d).T
            sol, *_ = np.linalg.lstsq(basis, t, rcond=None)
            res = max_abs(basis @ sol - t)
            if res > tol * max(1.0, max_abs(t)):
                raise AQGError("AXIOM_ERROR", f"span of matrices is not closed (residual {res:.3g})")
            return sol.T

        prods = np.einsum("iab,jbc->ijac", mats, mats).reshape(n * n, d, d)
        mult = coords(prods).reshape(n, n, n)
        star = coords(np.conj(np.transpose(mats, (0, 2, 1))))
        unit = coords(np.eye(d)[None])[0]
        alg = cls(mult, star, unit, name=name)
        alg.matrices = mats
        return alg

    # elements

    def element(self, coords):
        return AlgebraElement(self, coords)

    def basis_element(self, i):
        x = np.zeros(self.dim, dtype=complex)
        x[i] = 1.0
        return AlgebraElement(self, x)

    def unit_element(self):
        return AlgebraElement(self, self.unit)

    def random_element(self, rng):
        return AlgebraElement(self, rng.normal(size=self.dim) + 1j * rng.normal(size=self.dim))

    # coordinate level operations

    def product(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.mult)

    def involve(self, x):
        return self.K @ np.conj(x)

    def lmult(self, x):
        """Matrix of y -> x y."""
        return np.einsum("i,ijk->kj", x, self.mult)

    def rmult(self, y):
        """Matrix of x -> x y."""
        return np.einsum("j,ijk->ki", y, self.mult)

    @cached_property
    def left_regular(self):
        """Stack of left multiplication matrices of the basis elements."""
        return np.transpose(self.mult, (0, 2, 1)).copy()

    def spectrum(self, x):
        return np.linalg.eigvals(self.lmult(x))

    def inverse(self, x, tol=DEFAULT_TOL):
        L = self.lmult(x)
        s = np.linalg.svd(L, compute_uv=False)
        if s[-1] <= 1e-12 * max(1.0, s[0]):
            raise AQGError("AXIOM_ERROR", "element is not invertible")
        return np.linalg.solve(L, self.unit)

    def is_commutative(self, tol=DEFAULT_TOL):
        return max_abs(self.mult - np.transpose(self.mult, (1, 0, 2))) < tol

    def __repr__(self):
        return f"FiniteStarAlgebra(name={self.name!r}, dim={self.dim})"


class TensorStarAlgebra(FiniteStarAlgebra):
    """Tensor product of algebras; products are contracted factorwise.

    Full structure constants are only materialized on request, so that
    three-fold tensor powers of an 8-dimensional algebra stay cheap.
    """

    def __init__(self, factors):
        flat = []
        for f in factors:
            flat.extend(f.factors)
        self._factors = tuple(flat)
        dims = [f.dim for f in flat]
        n = int(np.prod(dims))
        star = flat[0].star
        unit = flat[0].unit
        labels = flat[0].labels
        for f in flat[1:]:
            star = np.kron(star, f.star)
            unit = np.kron(unit, f.unit)
            labels = [f"{a}(x){b}" for a in labels for b in f.labels]
        self._mult = None
        self._init_common(n, star, unit, labels, " (x) ".join(f.name for f in flat))

    @property
    def factors(self):
        return self._factors

    @cached_property
    def _product_subscripts(self):
        k = len(self._factors)
        letters = iter(string.ascii_letters)
        xs = [next(letters) for _ in range(k)]
        ys = [next(letters) for _ in range(k)]
        zs = [next(letters) for _ in range(k)]
        terms = ["".join(xs), "".join(ys)] + [xs[i] + ys[i] + zs[i] for i in range(k)]
        return ",".join(terms) + "->" + "".join(zs)

    @cached_property
    def _product_path(self):
        # the default greedy search caps intermediates at the input size and
        # falls back to the naive contraction; allow larger intermediates
        dims = self.factor_dims
        ops = [np.empty(dims), np.empty(dims)] + [f.mult for f in self._factors]
        return np.einsum_path(self._product_subscripts, *ops, optimize=("greedy", 2**26))[0]

    def product(self, x, y):
        dims = self.factor_dims
        out = np.einsum(
            self._product_subscripts,
            np.reshape(x, dims),
            np.reshape(y, dims),
            *[f.mult for f in self._factors],
            optimize=self._product_path,
        )
        return out.reshape(-1)

    @property
    def mult(self):
        if self._mult is None:
            m = self._factors[0].mult
            for f in self._factors[1:]:
                a, b = m.shape[0], f.dim
                m = np.einsum("ikp,jlq->ijklpq", m, f.mult).reshape(a * b, a * b, a * b)
            self._mult = m
        return self._mult

    def lmult(self, x):
        dims = self.factor_dims
        k = len(dims)
        mats = [np.transpose(f.mult, (0, 2, 1)) for f in self._factors]
        letters = iter(string.ascii_letters)
        xs = [next(letters) for _ in range(k)]
        rows = [next(letters) for _ in range(k)]
        cols = [next(letters) for _ in range(k)]
        sub = "".join(xs) + "," + ",".join(xs[i] + rows[i] + cols[i] for i in range(k))
        sub += "->" + "".join(rows) + "".join(cols)
        out = np.einsum(sub, np.reshape(x, dims), *mats, optimize=True)
        return out.reshape(self.dim, self.dim)

    def rmult(self, y):
        dims = self.factor_dims
        k = len(dims)
        letters = iter(string.ascii_letters)
        ys = [next(letters) for _ in range(k)]
        rows = [next(letters) for _ in range(k)]
        cols = [next(letters) for _ in range(k)]
        sub = "".join(ys) + "," + ",".join(cols[i] + ys[i] + rows[i] for i in range(k))
        sub += "->" + "".join(rows) + "".join(cols)
        out = np.einsum(sub, np.reshape(y, dims), *[f.mult for f in self._factors], optimize=True)
        return out.reshape(self.dim, self.dim)


def tensor_algebra(A, B):
    return TensorStarAlgebra([A, B])


class AlgebraElement:
    __array_priority__ = 1000

    def __init__(self, algebra, coords):
        coords = np.asarray(coords, dtype=complex).reshape(-1)
        if coords.shape != (algebra.dim,):
            raise AQGError("ALGEBRA_MISMATCH", f"expected {algebra.dim} coordinates, got {coords.shape[0]}")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise AQGError("ALGEBRA_MISMATCH", "elements live in different algebras")

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return AlgebraElement(self.algebra, self.coords * other)

    def __rmul__(self, scalar):
        return AlgebraElement(self.algebra, scalar * self.coords)

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.coords - other.coords)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.coords)

    def star(self):
        return involute(self)

    def distance(self, other):
        self._check(other)
        return max_abs(self.coords - other.coords)

    def __repr__(self):
        terms = [f"({c:.4g}){l}" for c, l in zip(self.coords, self.algebra.labels) if abs(c) > 1e-12]
        return " + ".join(terms) if terms else "0"


def multiply(a, b):
    a._check(b)
    return AlgebraElement(a.algebra, a.algebra.product(a.coords, b.coords))


def involute(a):
    return AlgebraElement(a.algebra, a.algebra.involve(a.coords))


def tensor(a, b):
    """Simple tensor a (x) b as an element of the tensor product algebra."""
    return AlgebraElement(tensor_algebra(a.algebra, b.algebra), np.kron(a.coords, b.coords))


class LinearFunctional:
    def __init__(self, algebra, covector):
        covector = np.asarray(covector, dtype=complex).reshape(-1)
        if covector.shape != (algebra.dim,):
            raise AQGError("ALGEBRA_MISMATCH", "covector length differs from the dimension")
        self.algebra = algebra
        self.covector = covector

    def __call__(self, a):
        if isinstance(a, AlgebraElement):
            if a.algebra.dim != self.algebra.dim:
                raise AQGError("ALGEBRA_MISMATCH", "functional applied to a foreign element")
            a = a.coords
        return complex(self.covector @ a)

    def compose(self, f):
        """The functional x -> self(f(x)) for a linear map f."""
        if f.antilinear:
            raise AQGError("ALGEBRA_MISMATCH", "composition with an antilinear map is not a functional")
        return LinearFunctional(f.source, self.covector @ f.matrix)

    def __repr__(self):
        return f"LinearFunctional({np.round(self.covector, 6)})"


class LinearMap:
    """Matrix of a (possibly antilinear, possibly antimultiplicative) map.

    An antilinear map acts as ``x -> matrix @ conj(x)``.  Composition tracks
    both flags: two antilinear maps compose to a linear one, and likewise
    for antimultiplicativity.
    """

    def __init__(self, source, target, matrix, antilinear=False, antimultiplicative=False):
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (target.dim, source.dim):
            raise AQGError("ALGEBRA_MISMATCH", f"matrix shape {matrix.shape} does not fit the algebras")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.antilinear = antilinear
        self.antimultiplicative = antimultiplicative

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, np.eye(algebra.dim))

    @classmethod
    def star_map(cls, algebra):
        return cls(algebra, algebra, algebra.K, antilinear=True, antimultiplicative=True)

    def apply(self, x):
        return self.matrix @ (np.conj(x) if self.antilinear else x)

    def __call__(self, a):
        return AlgebraElement(self.target, self.apply(a.coords))

    def compose(self, other):
        """self o other"""
        inner = np.conj(other.matrix) if self.antilinear else other.matrix
        return LinearMap(
            other.source,
            self.target,
            self.matrix @ inner,
            antilinear=self.antilinear != other.antilinear,
            antimultiplicative=self.antimultiplicative != other.antimultiplicative,
        )

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self):
        inv = np.linalg.inv(self.matrix)
        if self.antilinear:
            # x = M conj(y)  =>  y = conj(M^-1 x)
            inv = np.conj(inv)
        return LinearMap(self.target, self.source, inv, self.antilinear, self.antimultiplicative)

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        out = LinearMap.identity(self.source)
        for _ in range(k):
            out = self.compose(out)
        return out

    def distance(self, other):
        if self.antilinear != other.antilinear:
            raise AQGError("ALGEBRA_MISMATCH", "comparing a linear with an antilinear map")
        return max_abs(self.matrix - other.matrix)


def slice_leg(omega, leg, x, tensor_alg=None):
    """Partial application of ``omega`` on leg ``leg`` (1-based) of ``x``.

    ``x`` is an element of a tensor product algebra (or a raw coordinate
    vector together with ``tensor_alg``); the result lives on the tensor
    product of the remaining legs.
    """
    if isinstance(x, AlgebraElement):
        tensor_alg = x.algebra
        coords = x.coords
    else:
        coords = np.asarray(x, dtype=complex)
    factors = tensor_alg.factors
    if len(factors) < 2 or not 1 <= leg <= len(factors):
        raise AQGError("ALGEBRA_MISMATCH", f"leg {leg} out of range")
    if factors[leg - 1].dim != omega.algebra.dim:
        raise AQGError("ALGEBRA_MISMATCH", f"functional does not live on leg {leg}")
    arr = np.reshape(coords, tensor_alg.factor_dims)
    out = np.tensordot(arr, omega.covector, axes=([leg - 1], [0]))
    rest = [f for i, f in enumerate(factors) if i != leg - 1]
    target = rest[0] if len(rest) == 1 else TensorStarAlgebra(rest)
    return AlgebraElement(target, out.reshape(-1))


def axiom_residuals(A):
    """Residuals of associativity, unit, and star laws on basis elements."""
    n = A.dim
    m = A.mult
    left = np.einsum("ijp,pkq->ijkq", m, m)
    right = np.einsum("jkp,ipq->ijkq", m, m)
    eye = np.eye(n)
    unit_l = np.einsum("i,ijk->jk", A.unit, m).T
    unit_r = np.einsum("j,ijk->ik", A.unit, m).T
    K = A.K
    # (e_i e_j)* = e_j* e_i*, with real basis coordinates
    star_prod = np.einsum("ijk,lk->ijl", np.conj(m), K)
    prod_star = np.einsum("pj,qi,pqk->ijk", K, K, m)
    return {
        "associativity": max_abs(left - right),
        "unit_left": max_abs(unit_l - eye),
        "unit_right": max_abs(unit_r - eye),
        "star_antimultiplicative": max_abs(star_prod - prod_star),
        "star_involutive": max_abs(K @ np.conj(K) - eye),
    }
