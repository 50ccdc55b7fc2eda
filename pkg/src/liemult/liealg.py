"""Lie algebras presented by exact structure-constant tables.

Only brackets [e_i, e_j] with i < j are stored, so antisymmetry is
structural.  The Jacobi identity is verified exactly whenever an algebra
is built from outside input; algebras derived from valid ones (direct
sums, quotients by ideals, base changes) are valid by construction and
skip the re-check.

Derived subalgebra, center, lower central series, ideal tests, quotients
and base changes all reduce to the exact subspace machinery in
:mod:`liemult.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import (
    AmbientMismatch,
    Matrix,
    Subspace,
    Vector,
    contains,
    kernel_basis,
    subspace_sum,
    unit_vector,
    vec_mat,
    vector,
)

_ZERO = Fraction(0)


class IndexOutOfRange(ValueError):
    """Bracket indices outside 1 <= i < j <= dim, or a wrong-length vector."""


class DuplicateBracket(ValueError):
    """The same bracket [e_i, e_j] was given twice."""


class NotAnIdeal(ValueError):
    """Quotient requested by a subspace that is not an ideal."""


class NotNilpotent(ValueError):
    """Operation requires a nilpotent algebra."""


class JacobiViolation(ValueError):
    """Structure constants fail the Jacobi identity.

    Carries the first failing triple (1-based, matching e-numbering) and
    the nonzero defect vector.
    """

    def __init__(self, triple: tuple[int, int, int], defect: Vector):
        i, j, k = triple
        terms = " + ".join(
            f"{c}*e{t + 1}" for t, c in enumerate(defect) if c
        )
        super().__init__(
            f"Jacobi identity fails on (e{i},e{j},e{k}): defect {terms}"
        )
        self.triple = triple
        self.defect = defect


@lru_cache(maxsize=64)
def _zeros(n: int) -> Vector:
    return (_ZERO,) * n


BracketTable = tuple[tuple[int, int, Vector], ...]


@dataclass(frozen=True, repr=False)
class LieAlgebra:
    """Lie algebra on basis e_1..e_n given by rational structure constants.

    ``table`` holds (i, j, coefficient vector) triples with 0-based
    i < j and nonzero vectors only, sorted by (i, j); ``labels`` is an
    optional list of basis names and does not affect equality.
    """

    dim: int
    table: BracketTable
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @cached_property
    def _by_pair(self) -> dict[tuple[int, int], Vector]:
        return {(i, j): c for i, j, c in self.table}

    @property
    def is_abelian(self) -> bool:
        return not self.table

    def pair_coeffs(self, i: int, j: int) -> Optional[Vector]:
        """Stored coefficient vector of [e_i, e_j] (0-based, i < j), or None."""
        return self._by_pair.get((i, j))

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any 0-based i, j, with the sign handled."""
        if i == j:
            return _zeros(self.dim)
        if i < j:
            c = self._by_pair.get((i, j))
            return c if c is not None else _zeros(self.dim)
        c = self._by_pair.get((j, i))
        return tuple(-x for x in c) if c is not None else _zeros(self.dim)

    def _bracket_vec_basis(self, v: Sequence[Fraction], t: int) -> Vector:
        """[v, e_t] for a coefficient vector v."""
        acc: Optional[list[Fraction]] = None
        by = self._by_pair
        for m, vm in enumerate(v):
            if not vm or m == t:
                continue
            if m < t:
                c = by.get((m, t))
                f = vm
            else:
                c = by.get((t, m))
                f = -vm
            if c is None:
                continue
            if acc is None:
                acc = [_ZERO] * self.dim
            for idx, cv in enumerate(c):
                if cv:
                    acc[idx] += f * cv
        return tuple(acc) if acc is not None else _zeros(self.dim)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Bilinear, antisymmetric extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise AmbientMismatch(
                f"bracket arguments must have length {self.dim}"
            )
        acc = [_ZERO] * self.dim
        for i, j, c in self.table:
            w = x[i] * y[j] - x[j] * y[i]
            if w:
                for idx, cv in enumerate(c):
                    if cv:
                        acc[idx] += w * cv
        return tuple(acc)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={len(self.table)})"


def _canonical_table(dim: int, mapping: Mapping[tuple[int, int], Sequence[Fraction]]) -> BracketTable:
    items = []
    for (i, j), coeffs in mapping.items():
        coeffs = tuple(coeffs)
        if any(coeffs):
            items.append((i, j, coeffs))
    items.sort(key=lambda e: (e[0], e[1]))
    return tuple(items)


def _make(
    dim: int,
    mapping: Mapping[tuple[int, int], Sequence[Fraction]],
    labels: Optional[Sequence[str]] = None,
    validate: bool = True,
) -> LieAlgebra:
    alg = LieAlgebra(dim, _canonical_table(dim, mapping),
                     tuple(labels) if labels is not None else None)
    if validate:
        bad = first_jacobi_violation(alg)
        if bad is not None:
            (i, j, k), defect = bad
            raise JacobiViolation((i + 1, j + 1, k + 1), defect)
    return alg


def build(
    dim: int,
    brackets: Iterable[tuple[int, int, Sequence]],
    labels: Optional[Sequence[str]] = None,
) -> LieAlgebra:
    """Validated Lie algebra from 1-based bracket data.

    ``brackets`` lists (i, j, coefficient vector) with 1 <= i < j <= dim,
    matching the e1..en naming used in lieconst files; unlisted brackets
    are zero.  Raises IndexOutOfRange, DuplicateBracket or
    JacobiViolation.
    """
    if dim < 0:
        raise IndexOutOfRange(f"dimension must be non-negative, got {dim}")
    mapping: dict[tuple[int, int], Vector] = {}
    for i, j, coeffs in brackets:
        if not (1 <= i < j <= dim):
            raise IndexOutOfRange(
                f"bracket [e{i},e{j}] violates 1 <= i < j <= {dim}"
            )
        coeffs = vector(coeffs)
        if len(coeffs) != dim:
            raise IndexOutOfRange(
                f"coefficient vector for [e{i},e{j}] has length "
                f"{len(coeffs)}, expected {dim}"
            )
        key = (i - 1, j - 1)
        if key in mapping:
            raise DuplicateBracket(f"bracket [e{i},e{j}] given twice")
        mapping[key] = coeffs
    if labels is not None and len(tuple(labels)) != dim:
        raise IndexOutOfRange("labels length must equal dim")
    return _make(dim, mapping, labels, validate=True)


def jacobi_defect(L: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], 0-based."""
    a = L._bracket_vec_basis(L.bracket_basis(i, j), k)
    b = L._bracket_vec_basis(L.bracket_basis(j, k), i)
    c = L._bracket_vec_basis(L.bracket_basis(k, i), j)
    return tuple(x + y + z for x, y, z in zip(a, b, c))


def first_jacobi_violation(
    L: LieAlgebra,
) -> Optional[tuple[tuple[int, int, int], Vector]]:
    """First (lexicographic) triple with nonzero Jacobi defect, or None.

    Only triples touching a stored bracket can have a nonzero defect, so
    the scan is cheap for sparse tables.
    """
    candidates: set[tuple[int, int, int]] = set()
    for (i, j) in L._by_pair:
        for k in range(L.dim):
            if k != i and k != j:
                candidates.add(tuple(sorted((i, j, k))))  # type: ignore[arg-type]
    for (i, j, k) in sorted(candidates):
        defect = jacobi_defect(L, i, j, k)
        if any(defect):
            return (i, j, k), defect
    return None


def bracket(L: LieAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return L.bracket(x, y)


@lru_cache(maxsize=None)
def derived_subalgebra(L: LieAlgebra) -> Subspace:
    """Canonical span of all brackets [e_i, e_j], i < j."""
    return Subspace.from_vectors(L.dim, [c for _, _, c in L.table])


@lru_cache(maxsize=None)
def center(L: LieAlgebra) -> Subspace:
    """{ x : [x, e_j] = 0 for all j }, as the kernel of the stacked adjoint."""
    n = L.dim
    if n == 0:
        return Subspace.zero(0)
    rows: dict[tuple[int, int], list[Fraction]] = {}

    def row_for(j: int, t: int) -> list[Fraction]:
        key = (j, t)
        r = rows.get(key)
        if r is None:
            r = rows[key] = [_ZERO] * n
        return r

    for i, j, c in L.table:
        for t, cv in enumerate(c):
            if cv:
                # constraint block "[x, e_j] = 0": column m carries the
                # coefficient of e_t in [e_m, e_j]
                row_for(j, t)[i] += cv
                row_for(i, t)[j] -= cv
    if not rows:
        return Subspace.full(n)
    ordered = [rows[key] for key in sorted(rows)]
    return kernel_basis(Matrix.from_rows(ordered, cols=n))


@dataclass(frozen=True)
class SeriesReport:
    """Lower-central-series fingerprint of one algebra."""

    lcs_dims: tuple[int, ...]
    nilpotency_class: Optional[int]  # None when the series stalls above zero
    derived_dim: int
    center_dim: int

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_class is not None


def _bracket_span(L: LieAlgebra, s: Subspace) -> Subspace:
    """[L, S] as a canonical subspace."""
    vecs = []
    for r in range(s.dim):
        row = s.basis.row(r)
        for j in range(L.dim):
            v = L._bracket_vec_basis(row, j)
            if any(v):
                vecs.append(v)
    return Subspace.from_vectors(L.dim, vecs)


@lru_cache(maxsize=None)
def lower_central_series(L: LieAlgebra) -> SeriesReport:
    """Dims of L >= [L,L] >= [L,[L,L]] >= ... until zero or stabilization."""
    n = L.dim
    dims = [n]
    cur = Subspace.full(n)
    derived_dim = 0
    while cur.dim > 0:
        nxt = _bracket_span(L, cur)
        if len(dims) == 1:
            derived_dim = nxt.dim
        if nxt.dim == cur.dim:
            return SeriesReport(tuple(dims), None, derived_dim, center(L).dim)
        dims.append(nxt.dim)
        cur = nxt
    return SeriesReport(tuple(dims), len(dims) - 1, derived_dim, center(L).dim)


def is_ideal(L: LieAlgebra, s: Subspace) -> bool:
    """True iff [L, S] is contained in S."""
    if s.ambient_dim != L.dim:
        raise AmbientMismatch(f"subspace ambient {s.ambient_dim} != dim {L.dim}")
    for r in range(s.dim):
        row = s.basis.row(r)
        for j in range(L.dim):
            v = L._bracket_vec_basis(row, j)
            if any(v) and not contains(s, v):
                return False
    return True


def quotient(L: LieAlgebra, k: Subspace) -> tuple[LieAlgebra, Matrix]:
    """Quotient algebra L/K and the projection matrix onto its basis.

    The complement basis extends K's basis by standard basis vectors,
    chosen greedily in index order, so the output is reproducible.  The
    projection maps old coordinates onto quotient coordinates and
    commutes with brackets.
    """
    if k.ambient_dim != L.dim:
        raise AmbientMismatch(f"subspace ambient {k.ambient_dim} != dim {L.dim}")
    if not is_ideal(L, k):
        raise NotAnIdeal("quotient by a subspace that is not an ideal")
    n, r = L.dim, k.dim
    chosen: list[int] = []
    cur = k
    for i in range(n):
        if cur.dim == n:
            break
        e = unit_vector(n, i)
        if not contains(cur, e):
            chosen.append(i)
            cur = subspace_sum(cur, Subspace.from_vectors(n, [e]))
    full_basis = Matrix.from_rows(
        [list(row) for row in k.basis_rows()]
        + [list(unit_vector(n, i)) for i in chosen],
        cols=n,
    )
    inv = full_basis.inverse()
    # coords of x in the combined basis are x . inv; the projection keeps
    # the complement block
    proj = Matrix.from_rows(
        [[inv.at(m, r + a) for m in range(n)] for a in range(n - r)],
        cols=n,
    )
    mapping: dict[tuple[int, int], Vector] = {}
    for a in range(n - r):
        for b in range(a + 1, n - r):
            w = L.bracket_basis(chosen[a], chosen[b])
            mapping[(a, b)] = proj.mul_vec(w)
    return _make(n - r, mapping, validate=False), proj


def direct_sum(l1: LieAlgebra, l2: LieAlgebra) -> LieAlgebra:
    """Block sum: components commute, constants are copied per block."""
    d1, d2 = l1.dim, l2.dim
    mapping: dict[tuple[int, int], Vector] = {}
    pad2 = _zeros(d2)
    pad1 = _zeros(d1)
    for i, j, c in l1.table:
        mapping[(i, j)] = c + pad2
    for i, j, c in l2.table:
        mapping[(i + d1, j + d1)] = pad1 + c
    labels = None
    if l1.labels is not None and l2.labels is not None:
        labels = l1.labels + l2.labels
    return _make(d1 + d2, mapping, labels, validate=False)


def change_of_basis(L: LieAlgebra, p: Matrix) -> LieAlgebra:
    """Same algebra on the basis f_i = sum_j P[i][j] e_j.

    P must be invertible (SingularMatrix otherwise).  All isomorphism
    invariants are preserved.
    """
    if p.rows != L.dim or p.cols != L.dim:
        raise AmbientMismatch(
            f"basis-change matrix must be {L.dim}x{L.dim}, got {p.rows}x{p.cols}"
        )
    inv = p.inverse()
    mapping: dict[tuple[int, int], Vector] = {}
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            w = L.bracket(p.row(i), p.row(j))
            if any(w):
                mapping[(i, j)] = vec_mat(w, inv)
    return _make(n, mapping, validate=False)
