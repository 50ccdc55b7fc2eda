"""Schur multiplier dimension and the bound checks built on it.

The multiplier dimension is computed as the second homology of the
exterior chain complex Lambda^3 L -> Lambda^2 L -> L with trivial
coefficients: dim M = C(n,2) - rank(d2) - rank(d3).  Both exterior bases
are lexicographically ordered tuples, so the boundary matrices are
bit-reproducible.

Also provided as executable checks with witnesses: additivity of the
multiplier over direct sums (with the abelianization tensor term), the
central-quotient inequality, and the defect bounds t >= 0 / s >= 0 plus
the derived-dimension-parameterized bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .liealg import (
    LieAlgebra,
    NotNilpotent,
    center,
    derived_subalgebra,
    direct_sum,
    lower_central_series,
    quotient,
)
from .linalg import Matrix, Subspace, contains, rank, subspace_intersect

_ZERO = Fraction(0)


class ComplexNotExact(RuntimeError):
    """d2 . d3 != 0: signals an internal bug, not bad input."""


class NotCentral(ValueError):
    """The given ideal is not contained in the center."""


@lru_cache(maxsize=64)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=64)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: t for t, p in enumerate(_pairs(n))}


@lru_cache(maxsize=64)
def _triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(
        (i, j, k)
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def ce_d2(L: LieAlgebra) -> Matrix:
    """Boundary Lambda^2 -> Lambda^1: column (i,j) is [e_i, e_j]."""
    n = L.dim
    pairs = _pairs(n)
    pidx = _pair_index(n)
    grid = [[_ZERO] * len(pairs) for _ in range(n)]
    for i, j, c in L.table:
        col = pidx[(i, j)]
        for t, cv in enumerate(c):
            if cv:
                grid[t][col] = cv
    return Matrix.from_rows(grid, cols=len(pairs))


def ce_d3(L: LieAlgebra) -> Matrix:
    """Boundary Lambda^3 -> Lambda^2.

    Column (i,j,k) is [e_i,e_j]^e_k - [e_i,e_k]^e_j + [e_j,e_k]^e_i on
    the lex-ordered wedge basis.
    """
    n = L.dim
    pairs = _pairs(n)
    pidx = _pair_index(n)
    triples = _triples(n)
    grid = [[_ZERO] * len(triples) for _ in pairs]
    for col, (i, j, k) in enumerate(triples):
        for a, b, t, sign in ((i, j, k, 1), (i, k, j, -1), (j, k, i, 1)):
            c = L.pair_coeffs(a, b)
            if c is None:
                continue
            for m, cv in enumerate(c):
                if not cv or m == t:
                    continue
                if m < t:
                    grid[pidx[(m, t)]][col] += sign * cv
                else:
                    grid[pidx[(t, m)]][col] -= sign * cv
    return Matrix.from_rows(grid, cols=len(triples)) if pairs else Matrix(0, len(triples), ())


def _check_complex(d2: Matrix, d3: Matrix) -> None:
    for col in range(d3.cols):
        acc = [_ZERO] * d2.rows
        touched = False
        for p in range(d3.rows):
            v = d3.at(p, col)
            if v:
                touched = True
                for t in range(d2.rows):
                    w = d2.at(t, p)
                    if w:
                        acc[t] += v * w
        if touched and any(acc):
            raise ComplexNotExact(
                f"boundary composition nonzero on wedge generator {col}"
            )


@dataclass(frozen=True)
class MultiplierReport:
    """Multiplier dimension with the defect invariants t and s.

    t = n(n-1)/2 - dim M measures the gap to the abelian maximum;
    s = (n-1)(n-2)/2 + 1 - dim M is the sharper non-abelian defect.
    """

    n: int
    dim_m: int
    t: int
    s: int
    rank_d2: int
    rank_d3: int


@lru_cache(maxsize=None)
def schur_multiplier_dim(L: LieAlgebra) -> MultiplierReport:
    """dim M(L) = C(n,2) - rank(d2) - rank(d3), with t and s filled in."""
    n = L.dim
    d2 = ce_d2(L)
    d3 = ce_d3(L)
    _check_complex(d2, d3)
    r2 = rank(d2)
    r3 = rank(d3)
    lam2 = n * (n - 1) // 2
    dim_m = lam2 - r2 - r3
    return MultiplierReport(
        n=n,
        dim_m=dim_m,
        t=lam2 - dim_m,
        s=(n - 1) * (n - 2) // 2 + 1 - dim_m,
        rank_d2=r2,
        rank_d3=r3,
    )


def tensor_term_dim(h: LieAlgebra, k_dim: int) -> int:
    """dim of (H / H^2) tensored with an abelian ideal of dimension k_dim."""
    if k_dim < 0:
        raise ValueError("k_dim must be non-negative")
    return (h.dim - derived_subalgebra(h).dim) * k_dim


@dataclass(frozen=True)
class KunnethCheck:
    """Both sides of the direct-sum multiplier formula, computed independently."""

    holds: bool
    lhs: int  # dim M(L1 + L2) by homology on the sum
    rhs: int  # dim M(L1) + dim M(L2) + abelianization tensor term
    dim_m_left: int
    dim_m_right: int
    tensor_dim: int

    def __bool__(self) -> bool:
        return self.holds


def check_kunneth(l1: LieAlgebra, l2: LieAlgebra) -> KunnethCheck:
    lhs = schur_multiplier_dim(direct_sum(l1, l2)).dim_m
    m1 = schur_multiplier_dim(l1).dim_m
    m2 = schur_multiplier_dim(l2).dim_m
    ab1 = l1.dim - derived_subalgebra(l1).dim
    ab2 = l2.dim - derived_subalgebra(l2).dim
    rhs = m1 + m2 + ab1 * ab2
    return KunnethCheck(lhs == rhs, lhs, rhs, m1, m2, ab1 * ab2)


@dataclass(frozen=True)
class QuotientBoundCheck:
    """Terms of dim M(L) + dim(L^2 meet K) <= dim M(L/K) + dim M(K) + tensor."""

    holds: bool
    dim_m_total: int
    derived_meet_ideal: int
    dim_m_quotient: int
    dim_m_ideal: int
    tensor_dim: int

    @property
    def lhs(self) -> int:
        return self.dim_m_total + self.derived_meet_ideal

    @property
    def rhs(self) -> int:
        return self.dim_m_quotient + self.dim_m_ideal + self.tensor_dim

    def __bool__(self) -> bool:
        return self.holds


def check_quotient_bound(L: LieAlgebra, k: Subspace) -> QuotientBoundCheck:
    """Evaluate the central-quotient inequality for a central ideal K.

    K must lie inside the center (NotCentral otherwise); its own
    multiplier is the abelian closed form dim(K)(dim(K)-1)/2.
    """
    z = center(L)
    for r in range(k.dim):
        if not contains(z, k.basis.row(r)):
            raise NotCentral("K is not contained in the center")
    h, _ = quotient(L, k)
    m_total = schur_multiplier_dim(L).dim_m
    meet = subspace_intersect(derived_subalgebra(L), k).dim
    m_quot = schur_multiplier_dim(h).dim_m
    dk = k.dim
    m_ideal = dk * (dk - 1) // 2
    ten = tensor_term_dim(h, dk)
    return QuotientBoundCheck(
        holds=m_total + meet <= m_quot + m_ideal + ten,
        dim_m_total=m_total,
        derived_meet_ideal=meet,
        dim_m_quotient=m_quot,
        dim_m_ideal=m_ideal,
        tensor_dim=ten,
    )


@dataclass(frozen=True)
class DefectBoundsCheck:
    """t >= 0, s >= 0 (non-abelian only) and the derived-dim bound."""

    holds: bool
    n: int
    dim_m: int
    t: int
    t_ok: bool
    abelian: bool
    s: Optional[int]          # None when abelian (claim out of scope there)
    s_ok: Optional[bool]
    derived_dim: int
    derived_bound: Optional[int]  # (n+k-2)(n-k-1)/2 + 1 for k = dim L^2 >= 1
    bound_ok: Optional[bool]

    def __bool__(self) -> bool:
        return self.holds


def check_defect_bounds(L: LieAlgebra) -> DefectBoundsCheck:
    """Verify the defect bounds for a nilpotent algebra (NotNilpotent otherwise)."""
    series = lower_central_series(L)
    if not series.is_nilpotent:
        raise NotNilpotent("defect bounds apply to nilpotent algebras")
    rep = schur_multiplier_dim(L)
    k = series.derived_dim
    abelian = k == 0
    t_ok = rep.t >= 0
    s: Optional[int] = None if abelian else rep.s
    s_ok: Optional[bool] = None if abelian else rep.s >= 0
    derived_bound: Optional[int] = None
    bound_ok: Optional[bool] = None
    if k >= 1:
        derived_bound = (rep.n + k - 2) * (rep.n - k - 1) // 2 + 1
        bound_ok = rep.dim_m <= derived_bound
    holds = t_ok and s_ok is not False and bound_ok is not False
    return DefectBoundsCheck(
        holds=holds,
        n=rep.n,
        dim_m=rep.dim_m,
        t=rep.t,
        t_ok=t_ok,
        abelian=abelian,
        s=s,
        s_ok=s_ok,
        derived_dim=k,
        derived_bound=derived_bound,
        bound_ok=bound_ok,
    )
