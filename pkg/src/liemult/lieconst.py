"""The "lieconst v1" text format for structure-constant tables.

Line-oriented and hand-writable::

    # optional comments run to end of line
    dim 4
    [e1,e2] = e3
    [e1,e3] = 2 e4 + 1/2 e2

The header ``dim N`` comes first; each bracket line gives [e_i, e_j]
with i < j as a signed sum of terms ``coefficient eK`` (coefficient
optional, default 1; rationals written p/q).  Unlisted brackets are
zero; the antisymmetric completion is implicit.  Rendering is canonical
(brackets sorted by (i, j), coefficients in lowest terms, zero brackets
omitted), and parse(render(L)) reproduces L exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .liealg import LieAlgebra, build

_ZERO = Fraction(0)

_DIM_RE = re.compile(r"dim\s+(\d+)\s*$")
_LHS_RE = re.compile(r"\[\s*e(\d+)\s*,\s*e(\d+)\s*\]\s*=\s*")
_NUM_RE = re.compile(r"(\d+)\s*(?:/\s*(\d+))?")
_BASIS_RE = re.compile(r"e(\d+)")


class LieconstSyntaxError(ValueError):
    """Malformed lieconst text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _fail(message: str, line: int, column: int) -> None:
    raise LieconstSyntaxError(message, line, column)


def _parse_terms(rhs: str, lineno: int, offset: int, dim: int) -> tuple[Fraction, ...]:
    """Parse 'c1 ek1 + c2 ek2 - ...' into a coefficient vector."""
    coeffs = [_ZERO] * dim
    pos = 0
    first = True
    n = len(rhs)
    while True:
        while pos < n and rhs[pos].isspace():
            pos += 1
        if pos == n:
            if first:
                _fail("expected at least one term after '='", lineno, offset + pos + 1)
            break
        sign = 1
        if first:
            if rhs[pos] in "+-":
                if rhs[pos] == "-":
                    sign = -1
                pos += 1
        else:
            if rhs[pos] == "+":
                pos += 1
            elif rhs[pos] == "-":
                sign = -1
                pos += 1
            else:
                _fail("expected '+' or '-' between terms", lineno, offset + pos + 1)
        while pos < n and rhs[pos].isspace():
            pos += 1
        coeff = Fraction(1)
        m = _NUM_RE.match(rhs, pos)
        if m:
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                _fail("zero denominator", lineno, offset + pos + 1)
            coeff = Fraction(num, den)
            pos = m.end()
            while pos < n and rhs[pos].isspace():
                pos += 1
        m = _BASIS_RE.match(rhs, pos)
        if not m:
            _fail("expected basis vector eK", lineno, offset + pos + 1)
        k = int(m.group(1))
        if not (1 <= k <= dim):
            _fail(f"basis index e{k} outside 1..{dim}", lineno, offset + pos + 1)
        pos = m.end()
        coeffs[k - 1] += sign * coeff
        first = False
    return tuple(coeffs)


def parse(text: str) -> LieAlgebra:
    """Parse lieconst v1 text into a validated LieAlgebra.

    Raises LieconstSyntaxError with line/column on malformed text;
    IndexOutOfRange, DuplicateBracket and JacobiViolation propagate from
    validation.
    """
    dim: int | None = None
    brackets: list[tuple[int, int, tuple[Fraction, ...]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        stripped = content.strip()
        if not stripped:
            continue
        col = content.index(stripped[0]) + 1
        if dim is None:
            m = _DIM_RE.match(stripped)
            if not m:
                _fail("expected 'dim N' header", lineno, col)
            dim = int(m.group(1))
            continue
        m = _LHS_RE.match(stripped)
        if not m:
            _fail("expected bracket line '[ei,ej] = ...'", lineno, col)
        i, j = int(m.group(1)), int(m.group(2))
        rhs = stripped[m.end():]
        coeffs = _parse_terms(rhs, lineno, col - 1 + m.end(), dim)
        brackets.append((i, j, coeffs))
    if dim is None:
        _fail("empty input: missing 'dim N' header", 1, 1)
    return build(dim, brackets)


def _render_coeff(c: Fraction, k: int, first: bool) -> str:
    mag = -c if c < 0 else c
    body = f"e{k}" if mag == 1 else f"{mag} e{k}"
    if first:
        return f"-{body}" if c < 0 else body
    return f" - {body}" if c < 0 else f" + {body}"


def render(L: LieAlgebra) -> str:
    """Canonical lieconst v1 text for an algebra."""
    lines = [f"dim {L.dim}"]
    for i, j, coeffs in L.table:
        terms = ""
        first = True
        for k, c in enumerate(coeffs, 1):
            if c:
                terms += _render_coeff(c, k, first)
                first = False
        lines.append(f"[e{i + 1},e{j + 1}] = {terms}")
    return "\n".join(lines) + "\n"


def load(path: str) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def dump(L: LieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(L))
