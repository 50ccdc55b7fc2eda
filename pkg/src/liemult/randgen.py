"""Deterministic randomization for the verification sweeps.

A fixed 64-bit linear congruential generator keeps every seeded sweep
reproducible byte-for-byte, independent of the host platform or of
Python's own RNG:

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64
    output = top 32 bits of state'
    randint(lo, hi) = lo + output mod (hi - lo + 1)

Random algebras are never drawn by sampling raw structure constants
(independent random tables essentially never satisfy Jacobi); instead
valid algebras are transported by random unimodular base changes and
random central quotients, which stay inside the nilpotent class.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .liealg import LieAlgebra, change_of_basis, center, quotient
from .linalg import Matrix, Subspace

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """The documented linear congruential stream."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u32(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u32() % (hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.randint(0, len(seq) - 1)]


def random_unimodular(n: int, rng: Lcg, steps: Optional[int] = None) -> Matrix:
    """Invertible integer matrix built from shears, swaps and negations.

    Every step preserves |det| = 1, so the result is always invertible
    and its inverse is again integral (keeping transported structure
    constants integral and elimination fast).
    """
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    if n >= 2:
        if steps is None:
            steps = 2 * n + 2
        for _ in range(steps):
            op = rng.randint(0, 3)
            if op <= 1:  # shear twice as often as the other ops
                i = rng.randint(0, n - 1)
                j0 = rng.randint(0, n - 2)
                j = j0 + (1 if j0 >= i else 0)
                lam = rng.choice((-2, -1, 1, 2))
                rows[i] = [a + lam * b for a, b in zip(rows[i], rows[j])]
            elif op == 2:
                i = rng.randint(0, n - 1)
                j = rng.randint(0, n - 1)
                rows[i], rows[j] = rows[j], rows[i]
            else:
                i = rng.randint(0, n - 1)
                rows[i] = [-a for a in rows[i]]
    return Matrix.from_rows(rows, cols=n)


def random_change_of_basis(L: LieAlgebra, rng: Lcg) -> LieAlgebra:
    """The same algebra written on a random unimodular basis."""
    return change_of_basis(L, random_unimodular(L.dim, rng))


def random_central_subspace(L: LieAlgebra, rng: Lcg,
                            min_dim: int = 0) -> Subspace:
    """Span of random integer combinations of central basis vectors.

    The target dimension is drawn from [min_dim, dim Z]; the span may
    come out smaller when combinations collide, which is fine for the
    sweeps.  Always contained in the center, hence always an ideal.
    """
    z = center(L)
    if z.dim == 0 or min_dim > z.dim:
        return Subspace.zero(L.dim)
    d = rng.randint(min_dim, z.dim)
    vecs = []
    for _ in range(d):
        coeffs = [rng.randint(-2, 2) for _ in range(z.dim)]
        v = [0] * L.dim
        for idx, w in enumerate(coeffs):
            if w:
                row = z.basis.row(idx)
                for c in range(L.dim):
                    if row[c]:
                        v[c] += w * row[c]
        vecs.append(v)
    return Subspace.from_vectors(L.dim, vecs)


def random_central_quotient(L: LieAlgebra, rng: Lcg) -> Optional[LieAlgebra]:
    """Quotient by a random nonzero central subspace; None when Z(L) = 0."""
    k = random_central_subspace(L, rng, min_dim=1)
    if k.dim == 0:
        return None
    return quotient(L, k)[0]
