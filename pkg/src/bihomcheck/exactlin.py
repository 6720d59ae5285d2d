"""Exact rational linear and multilinear algebra over a fixed ordered basis.

Everything downstream (axiom checkers, constructions, searches) is evaluated
on top of the values defined here.  All scalars are arbitrary-precision
rationals (``fractions.Fraction``), so every computation is exact and
deterministic: repeating a computation yields bit-identical results, and a
failing identity always comes with a certifiable counterexample.

Conventions, fixed once and used by the serializer as well:

* ``LinearMap`` stores a ``dim_out x dim_in`` grid; column ``j`` holds the
  image of basis vector ``e_j``, i.e. ``f(e_j) = sum_i entries[i][j] e_i``.
* ``BilinearOp`` stores a cube ``c[i][j][k]`` with
  ``e_i . e_j = sum_k c[i][j][k] e_k``.
* ``Comultiplication`` stores ``d[i][j][k]`` with
  ``delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k``.
* Checkers scan index tuples in lexicographic order and report the smallest
  failing tuple, so counterexamples are diff-friendly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


Scalar = Fraction
Vector = tuple[Fraction, ...]


class ShapeError(ValueError):
    """Dimension mismatch between operands."""


class NotInvertibleError(ValueError):
    """Square matrix is singular.  A legitimate outcome, not a bug."""


def frac(x) -> Fraction:
    """Coerce ints / strings / Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point scalars are not allowed; use Fraction")
    return Fraction(x)


def _freeze_vector(v: Sequence) -> Vector:
    return tuple(frac(x) for x in v)


def _freeze_matrix(rows: Sequence[Sequence]) -> tuple[Vector, ...]:
    out = tuple(_freeze_vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeError("ragged matrix rows")
    return out


def _freeze_cube(cube: Sequence) -> tuple[tuple[Vector, ...], ...]:
    out = tuple(_freeze_matrix(plane) for plane in cube)
    n = len(out)
    for plane in out:
        if len(plane) != n or any(len(row) != n for row in plane):
            raise ShapeError("cube is not n x n x n")
    return out


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ShapeError(f"vector dims differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ShapeError(f"vector dims differ: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    c = frac(c)
    return tuple(c * a for a in v)


def basis_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


# ---------------------------------------------------------------------------
# Core value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearMap:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _freeze_matrix(self.entries))
        if not self.entries or not self.entries[0]:
            raise ShapeError("linear map must have positive dimensions")

    @property
    def dim_out(self) -> int:
        return len(self.entries)

    @property
    def dim_in(self) -> int:
        return len(self.entries[0])

    @staticmethod
    def identity(dim: int) -> LinearMap:
        return LinearMap(tuple(basis_vector(dim, i) for i in range(dim)))

    @staticmethod
    def zero(dim_out: int, dim_in: int) -> LinearMap:
        return LinearMap(tuple(zero_vector(dim_in) for _ in range(dim_out)))

    @staticmethod
    def diagonal(diag: Sequence) -> LinearMap:
        d = _freeze_vector(diag)
        return LinearMap(tuple(
            tuple(d[i] if i == j else Fraction(0) for j in range(len(d)))
            for i in range(len(d))))

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> LinearMap:
        """Build from images of basis vectors (column convention)."""
        mat = _freeze_matrix(cols)
        return LinearMap(tuple(zip(*mat)))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.dim_in:
            raise ShapeError(f"map expects dim {self.dim_in}, got {len(v)}")
        return tuple(sum((row[j] * v[j] for j in range(self.dim_in)),
                         Fraction(0)) for row in self.entries)

    def is_identity(self) -> bool:
        return self.dim_in == self.dim_out and self == LinearMap.identity(self.dim_in)


@dataclass(frozen=True)
class BilinearOp:
    cube: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cube", _freeze_cube(self.cube))
        if not self.cube:
            raise ShapeError("bilinear op must have positive dimension")

    @property
    def dim(self) -> int:
        return len(self.cube)

    @staticmethod
    def zero(dim: int) -> BilinearOp:
        z = zero_vector(dim)
        return BilinearOp(tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    @staticmethod
    def from_products(dim: int, products: dict[tuple[int, int], Sequence]) -> BilinearOp:
        """Build from the nonzero basis products e_i . e_j -> vector."""
        cube = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in products.items():
            cube[i][j] = list(_freeze_vector(vec))
            if len(cube[i][j]) != dim:
                raise ShapeError("product vector has wrong dimension")
        return BilinearOp(cube)

    def basis_product(self, i: int, j: int) -> Vector:
        return self.cube[i][j]

    def apply(self, u: Vector, v: Vector) -> Vector:
        d = self.dim
        if len(u) != d or len(v) != d:
            raise ShapeError(f"operands must have dim {d}")
        out = [Fraction(0)] * d
        for i in range(d):
            if not u[i]:
                continue
            for j in range(d):
                c = u[i] * v[j]
                if not c:
                    continue
                row = self.cube[i][j]
                for k in range(d):
                    if row[k]:
                        out[k] += c * row[k]
        return tuple(out)

    def opposite(self) -> BilinearOp:
        """Product with the arguments swapped."""
        d = self.dim
        return BilinearOp(tuple(tuple(self.cube[j][i] for j in range(d))
                                for i in range(d)))


@dataclass(frozen=True)
class Tensor2:
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _freeze_matrix(self.coeffs))
        if not self.coeffs or len(self.coeffs) != len(self.coeffs[0]):
            raise ShapeError("Tensor2 must be square with positive dimension")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def zero(dim: int) -> Tensor2:
        z = zero_vector(dim)
        return Tensor2(tuple(z for _ in range(dim)))

    @staticmethod
    def from_pairs(dim: int, pairs: dict[tuple[int, int], object]) -> Tensor2:
        grid = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), c in pairs.items():
            grid[i][j] = frac(c)
        return Tensor2(grid)

    def __add__(self, other: Tensor2) -> Tensor2:
        if self.dim != other.dim:
            raise ShapeError("Tensor2 dims differ")
        return Tensor2(tuple(vec_add(a, b)
                             for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Tensor2:
        return Tensor2(tuple(vec_scale(-1, row) for row in self.coeffs))

    def is_zero(self) -> bool:
        return all(not c for row in self.coeffs for c in row)


@dataclass(frozen=True)
class Tensor3:
    coeffs: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _freeze_cube(self.coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def zero(dim: int) -> Tensor3:
        z = zero_vector(dim)
        return Tensor3(tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    def __add__(self, other: Tensor3) -> Tensor3:
        if self.dim != other.dim:
            raise ShapeError("Tensor3 dims differ")
        return Tensor3(tuple(tuple(vec_add(a, b) for a, b in zip(p, q))
                             for p, q in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Tensor3) -> Tensor3:
        if self.dim != other.dim:
            raise ShapeError("Tensor3 dims differ")
        return Tensor3(tuple(tuple(vec_sub(a, b) for a, b in zip(p, q))
                             for p, q in zip(self.coeffs, other.coeffs)))

    def is_zero(self) -> bool:
        return all(not c for plane in self.coeffs for row in plane for c in row)

    def flatten(self) -> Vector:
        return tuple(c for plane in self.coeffs for row in plane for c in row)


@dataclass(frozen=True)
class Comultiplication:
    cube: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cube", _freeze_cube(self.cube))
        if not self.cube:
            raise ShapeError("comultiplication must have positive dimension")

    @property
    def dim(self) -> int:
        return len(self.cube)

    @staticmethod
    def zero(dim: int) -> Comultiplication:
        z = zero_vector(dim)
        return Comultiplication(tuple(tuple(z for _ in range(dim))
                                      for _ in range(dim)))

    @staticmethod
    def from_images(dim: int, images: dict[int, dict[tuple[int, int], object]]) -> Comultiplication:
        """Build from the nonzero splittings delta(e_i) = sum c e_j (x) e_k."""
        cube = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, terms in images.items():
            for (j, k), c in terms.items():
                cube[i][j][k] = frac(c)
        return Comultiplication(cube)

    def image(self, i: int) -> Tensor2:
        return Tensor2(self.cube[i])


# ---------------------------------------------------------------------------
# Verdicts and witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Lexicographically smallest failing index tuple with both sides.

    ``lhs``/``rhs`` are flattened coefficient tuples of the two unequal
    values (a 1-tuple when the values are scalars).
    """
    indices: tuple[int, ...]
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]


@dataclass(frozen=True)
class CheckVerdict:
    passed: bool
    law: str | None = None
    witness: Witness | None = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("passing verdict cannot carry a witness")
        if not self.passed and self.witness is None:
            raise ValueError("failing verdict must carry a witness")

    def __bool__(self) -> bool:
        return self.passed

    @staticmethod
    def ok() -> CheckVerdict:
        return CheckVerdict(True)

    @staticmethod
    def fail(law: str, indices: Iterable[int], lhs, rhs) -> CheckVerdict:
        lhs = (lhs,) if isinstance(lhs, Fraction) else tuple(lhs)
        rhs = (rhs,) if isinstance(rhs, Fraction) else tuple(rhs)
        return CheckVerdict(False, law, Witness(tuple(indices), lhs, rhs))


def first_failure(verdicts: Iterable[CheckVerdict]) -> CheckVerdict:
    """Aggregate: the first failing verdict, else pass."""
    for v in verdicts:
        if not v.passed:
            return v
    return CheckVerdict.ok()


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Exact matrix product f o g (apply g first)."""
    if f.dim_in != g.dim_out:
        raise ShapeError(f"cannot compose: {f.dim_in} != {g.dim_out}")
    rows = []
    for i in range(f.dim_out):
        row = []
        for j in range(g.dim_in):
            row.append(sum((f.entries[i][k] * g.entries[k][j]
                            for k in range(f.dim_in)), Fraction(0)))
        rows.append(tuple(row))
    return LinearMap(tuple(rows))


def power(f: LinearMap, n: int) -> LinearMap:
    """f composed with itself n times; n = 0 gives the identity."""
    if f.dim_in != f.dim_out:
        raise ShapeError("power requires a square map")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    out = LinearMap.identity(f.dim_in)
    for _ in range(n):
        out = compose(out, f)
    return out


def maps_commute(f: LinearMap, g: LinearMap) -> bool:
    return compose(f, g) == compose(g, f)


def invert(f: LinearMap) -> LinearMap:
    """Exact inverse by Gaussian elimination; NotInvertibleError if singular."""
    if f.dim_in != f.dim_out:
        raise ShapeError("only square maps can be inverted")
    n = f.dim_in
    aug = [list(f.entries[i]) + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise NotInvertibleError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return LinearMap(tuple(tuple(row[n:]) for row in aug))


def apply_bilinear(m: BilinearOp, u: Vector, v: Vector) -> Vector:
    return m.apply(u, v)


def map_tensor2(f: LinearMap, g: LinearMap, t: Tensor2) -> Tensor2:
    """(f (x) g)(t)."""
    if f.dim_in != t.dim or g.dim_in != t.dim:
        raise ShapeError("tensor factor dims do not match the maps")
    d_out_f, d_out_g = f.dim_out, g.dim_out
    out = [[Fraction(0)] * d_out_g for _ in range(d_out_f)]
    for p in range(t.dim):
        for q in range(t.dim):
            c = t.coeffs[p][q]
            if not c:
                continue
            for a in range(d_out_f):
                fa = f.entries[a][p]
                if not fa:
                    continue
                for b in range(d_out_g):
                    gb = g.entries[b][q]
                    if gb:
                        out[a][b] += c * fa * gb
    return Tensor2(out)


def is_algebra_map(f: LinearMap, m: BilinearOp) -> CheckVerdict:
    """Pass iff f(e_i . e_j) = f(e_i) . f(e_j) for all basis pairs."""
    if f.dim_in != f.dim_out:
        raise ShapeError("algebra maps are endomorphisms")
    if f.dim_in != m.dim:
        raise ShapeError("map and product dims differ")
    d = m.dim
    images = [f.column(j) for j in range(d)]
    for i, j in itertools.product(range(d), repeat=2):
        lhs = f.apply(m.basis_product(i, j))
        rhs = m.apply(images[i], images[j])
        if lhs != rhs:
            return CheckVerdict.fail("multiplicative", (i, j), lhs, rhs)
    return CheckVerdict.ok()


def bilinear_equal(m1: BilinearOp, m2: BilinearOp) -> CheckVerdict:
    """Pass iff all structure constants agree; first differing (i,j,k) else."""
    if m1.dim != m2.dim:
        raise ShapeError("bilinear ops have different dims")
    d = m1.dim
    for i, j, k in itertools.product(range(d), repeat=3):
        a, b = m1.cube[i][j][k], m2.cube[i][j][k]
        if a != b:
            return CheckVerdict.fail("equal", (i, j, k), a, b)
    return CheckVerdict.ok()
