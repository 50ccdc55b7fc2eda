"""Exact linear algebra over the rationals.

Canonical reduced row echelon forms, ranks, kernels, and the subspace
lattice (span, sum, intersection, membership), all over
``fractions.Fraction``.  Rank decisions are exact by construction; no
floating point enters anywhere.

Subspaces are kept canonical: the basis is the reduced row echelon form
of any spanning set, with strictly increasing pivot columns and no zero
rows.  Two ``Subspace`` values therefore compare equal exactly when they
describe the same subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union

Rational = Fraction  # the scalar field for everything in this package

Scalar = Union[int, str, Fraction]
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class AmbientMismatch(ValueError):
    """Arguments live in different ambient spaces (or have wrong length)."""


class SingularMatrix(ValueError):
    """Inversion requested for a non-invertible matrix."""


def rat(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(xs: Iterable[Scalar]) -> Vector:
    return tuple(rat(x) for x in xs)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(_ONE if c == i else _ZERO for c in range(n))


@dataclass(frozen=True)
class Matrix:
    """Dense matrix of rationals, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if not rows:
            if cols is None:
                raise ValueError("cols required for a matrix with no rows")
            return cls(0, cols, ())
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ValueError(f"declared cols {cols} != row length {width}")
        entries = []
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            entries.extend(rat(x) for x in r)
        return cls(len(rows), width, tuple(entries))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(
            _ONE if r == c else _ZERO for r in range(n) for c in range(n)
        ))

    def at(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def iter_rows(self) -> Iterable[Vector]:
        for r in range(self.rows):
            yield self.row(r)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(
            self.entries[r * self.cols + c]
            for c in range(self.cols) for r in range(self.rows)
        ))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise AmbientMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for r in range(self.rows):
            row = self.row(r)
            for c in range(other.cols):
                acc = _ZERO
                for k, x in enumerate(row):
                    if x:
                        y = other.entries[k * other.cols + c]
                        if y:
                            acc += x * y
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def mul_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise AmbientMismatch(f"vector length {len(v)} != cols {self.cols}")
        out = []
        for r in range(self.rows):
            acc = _ZERO
            base = r * self.cols
            for c, x in enumerate(v):
                if x:
                    y = self.entries[base + c]
                    if y:
                        acc += x * y
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise SingularMatrix(f"{self.rows}x{self.cols} matrix is not square")
        n = self.rows
        aug = Matrix.from_rows(
            [list(self.row(r)) + list(unit_vector(n, r)) for r in range(n)],
            cols=2 * n if n else 0,
        )
        if n == 0:
            return self
        reduced, pivots = rref(aug)
        if pivots != tuple(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix.from_rows(
            [reduced.row(r)[n:] for r in range(n)], cols=n
        )

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = ", ".join(
                "[" + ", ".join(str(x) for x in self.row(r)) + "]"
                for r in range(self.rows)
            )
            return f"Matrix({self.rows}x{self.cols}: {body})"
        return f"Matrix({self.rows}x{self.cols})"


def vec_mat(v: Sequence[Fraction], m: Matrix) -> Vector:
    """Row vector times matrix."""
    if len(v) != m.rows:
        raise AmbientMismatch(f"vector length {len(v)} != rows {m.rows}")
    out = [_ZERO] * m.cols
    for r, x in enumerate(v):
        if x:
            base = r * m.cols
            for c in range(m.cols):
                y = m.entries[base + c]
                if y:
                    out[c] += x * y
    return tuple(out)


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form with its pivot columns.

    Leftmost-pivot, unit-leading-entry convention; the result has the
    same shape as the input (zero rows sink to the bottom).
    """
    rows = [list(m.row(r)) for r in range(m.rows)]
    pivots: list[int] = []
    rk = 0
    for c in range(m.cols):
        if rk == len(rows):
            break
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), -1)
        if piv < 0:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        pv = prow[c]
        if pv != 1:
            inv = _ONE / pv
            rows[rk] = prow = [x * inv for x in prow]
        for i in range(len(rows)):
            if i != rk:
                a = rows[i][c]
                if a:
                    ri = rows[i]
                    # columns before c of prow are zero, skip them
                    ri[c:] = [x - a * y for x, y in zip(ri[c:], prow[c:])]
        pivots.append(c)
        rk += 1
    flat = tuple(x for row in rows for x in row)
    return RrefResult(Matrix(m.rows, m.cols, flat), tuple(pivots))


def _int_rows(m: Matrix) -> list[list[int]]:
    """Rows rescaled to integers (common denominator cleared per row)."""
    out = []
    for r in range(m.rows):
        row = m.row(r)
        scale = 1
        for x in row:
            d = x.denominator
            scale = scale * d // gcd(scale, d)
        ints = [int(x.numerator * (scale // x.denominator)) for x in row]
        if any(ints):
            out.append(ints)
    return out


def _echelon_rank(rows: list[list[int]], ncols: int) -> int:
    """Fraction-free (one-step Bareiss) elimination; rows are consumed."""
    rk = 0
    prev = 1
    nrows = len(rows)
    for c in range(ncols):
        if rk == nrows:
            break
        # smallest-magnitude pivot limits coefficient growth
        piv, piv_abs = -1, 0
        for i in range(rk, nrows):
            a = rows[i][c]
            if a:
                aa = -a if a < 0 else a
                if piv < 0 or aa < piv_abs:
                    piv, piv_abs = i, aa
                    if aa == 1:
                        break
        if piv < 0:
            continue
        if piv != rk:
            rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        pv = prow[c]
        tail = prow[c:]
        for i in range(rk + 1, nrows):
            ri = rows[i]
            a = ri[c]
            if a:
                ri[c:] = [(pv * x - a * y) // prev for x, y in zip(ri[c:], tail)]
            elif pv != prev:
                ri[c:] = [(pv * x) // prev for x in ri[c:]]
        prev = pv
        rk += 1
    return rk


def rank(m: Matrix) -> int:
    """Exact rank: denominators cleared per row, then fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _echelon_rank(_int_rows(m), m.cols)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held by its canonical reduced-row-echelon basis."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise AmbientMismatch(
                f"basis width {self.basis.cols} != ambient dim {self.ambient_dim}"
            )

    @property
    def dim(self) -> int:
        return self.basis.rows

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix(0, n, ()))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @classmethod
    def from_vectors(cls, n: int, vecs: Sequence[Sequence[Scalar]]) -> "Subspace":
        return row_space(Matrix.from_rows(vecs, cols=n) if vecs else Matrix(0, n, ()))

    def basis_rows(self) -> Iterable[Vector]:
        return self.basis.iter_rows()

    def contains(self, v: Sequence[Fraction]) -> bool:
        return contains(self, v)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis!r})"


def row_space(m: Matrix) -> Subspace:
    """Canonical subspace spanned by the rows of ``m``."""
    reduced, pivots = rref(m)
    rows = [reduced.row(r) for r in range(len(pivots))]
    return Subspace(m.cols, Matrix.from_rows(rows, cols=m.cols))


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of the right kernel { v : m v = 0 }."""
    reduced, pivots = rref(m)
    n = m.cols
    pivot_set = set(pivots)
    vecs = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [_ZERO] * n
        v[f] = _ONE
        for r, p in enumerate(pivots):
            coef = reduced.at(r, f)
            if coef:
                v[p] = -coef
        vecs.append(v)
    return Subspace.from_vectors(n, vecs)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"ambient dims {a.ambient_dim} != {b.ambient_dim}")
    rows = list(a.basis_rows()) + list(b.basis_rows())
    return Subspace.from_vectors(a.ambient_dim, rows)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"ambient dims {a.ambient_dim} != {b.ambient_dim}")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    # columns = basis vectors of a then b; kernel rows give the vanishing
    # combinations, whose a-part sweeps out the intersection
    cols = a.dim + b.dim
    grid = []
    for coord in range(n):
        row = [a.basis.at(i, coord) for i in range(a.dim)]
        row += [b.basis.at(i, coord) for i in range(b.dim)]
        grid.append(row)
    ker = kernel_basis(Matrix.from_rows(grid, cols=cols))
    vecs = []
    for w in ker.basis_rows():
        v = [_ZERO] * n
        for i in range(a.dim):
            if w[i]:
                arow = a.basis.row(i)
                for c in range(n):
                    if arow[c]:
                        v[c] += w[i] * arow[c]
        vecs.append(v)
    return Subspace.from_vectors(n, vecs)


def contains(a: Subspace, v: Sequence[Fraction]) -> bool:
    """Exact membership test of a vector in a subspace."""
    if len(v) != a.ambient_dim:
        raise AmbientMismatch(f"vector length {len(v)} != ambient {a.ambient_dim}")
    residual = list(v)
    for row in a.basis_rows():
        p = next((c for c, x in enumerate(row) if x), None)
        if p is None:
            continue
        coef = residual[p]
        if coef:
            for c in range(p, len(residual)):
                if row[c]:
                    residual[c] -= coef * row[c]
    return not any(residual)
