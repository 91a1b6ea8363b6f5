"""Gray codes, Karnaugh-map rendering, and sum-of-products covering.

The covering routine works at gadget scale (n <= 4) where exhaustive
subcube enumeration is cheap: generate all implicants, keep the primes,
then select an essential-first greedy cover with lexicographic
tie-breaking.  The result is deterministic and exact.

Truth vectors are indexed in canonical Boolean counting order with
variable 0 as the most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .poly import BooleanPoly, Rational


def gray_code(n: int) -> list[str]:
    """The n-bit reflected Gray code as bitstrings.

    Successive entries (cyclically) differ in exactly one bit.
    """
    if not 1 <= n <= 16:
        raise ValueError(f"gray_code supports 1 <= n <= 16, got {n}")
    return [format(i ^ (i >> 1), f"0{n}b") for i in range(1 << n)]


@dataclass(frozen=True)
class Implicant:
    """A subcube: some variables fixed to 0/1, the rest free."""

    fixed: tuple[tuple[int, int], ...]  # sorted (var, value) pairs
    num_vars: int

    @property
    def free(self) -> tuple[int, ...]:
        fixed_vars = {v for v, _ in self.fixed}
        return tuple(i for i in range(self.num_vars) if i not in fixed_vars)

    def covers(self, idx: int) -> bool:
        for v, val in self.fixed:
            if (idx >> (self.num_vars - 1 - v)) & 1 != val:
                return False
        return True

    def cells(self) -> list[int]:
        return [i for i in range(1 << self.num_vars) if self.covers(i)]

    def contains(self, other: "Implicant") -> bool:
        """True when every cell of `other` is a cell of self."""
        mine = dict(self.fixed)
        theirs = dict(other.fixed)
        return all(v in theirs and theirs[v] == val for v, val in mine.items())

    def to_poly(self) -> BooleanPoly:
        """The product of literals as a multilinear polynomial."""
        p = BooleanPoly.constant(self.num_vars, 1)
        for v, val in self.fixed:
            lit = BooleanPoly.variable(self.num_vars, v)
            p = p * (lit if val == 1 else (1 - lit))
        return p

    def literals(self, names: Sequence[str] | None = None) -> str:
        if not self.fixed:
            return "1"
        out = []
        for v, val in self.fixed:
            name = names[v] if names else f"x{v}"
            out.append(name if val == 1 else f"~{name}")
        return "".join(out)


def _all_implicants(n: int):
    for pattern in product((0, 1, None), repeat=n):
        fixed = tuple((v, b) for v, b in enumerate(pattern) if b is not None)
        yield Implicant(fixed, n)


def sop_cover(tv: Sequence[int]) -> list[Implicant]:
    """Cover the 1-cells of a truth vector with prime implicants.

    Returns a deterministic prime cover: essential primes first, then the
    lexicographically first prime covering the most remaining cells.
    """
    size = len(tv)
    n = size.bit_length() - 1
    if size == 0 or size != 1 << n:
        raise ValueError(f"truth vector length {size} is not a power of two")
    if n > 4:
        raise ValueError(f"sop_cover supports n <= 4, got {n}")
    if any(v not in (0, 1) for v in tv):
        raise ValueError("truth vector entries must be 0 or 1")
    ones = {i for i in range(size) if tv[i] == 1}
    if not ones:
        return []
    valid = [imp for imp in _all_implicants(n) if set(imp.cells()) <= ones]
    primes = [imp for imp in valid
              if not any(other is not imp and other.contains(imp) and
                         len(other.fixed) < len(imp.fixed) for other in valid)]
    primes.sort(key=lambda imp: imp.fixed)
    cover: list[Implicant] = []
    covered: set[int] = set()
    # essential primes: sole cover of some 1-cell
    for cell in sorted(ones):
        holders = [p for p in primes if p.covers(cell)]
        if len(holders) == 1 and holders[0] not in cover:
            cover.append(holders[0])
            covered.update(holders[0].cells())
    while covered != ones:
        best = min(primes,
                   key=lambda p: (-len(set(p.cells()) & (ones - covered)), p.fixed))
        if not set(best.cells()) & (ones - covered):
            raise AssertionError("prime cover failed to make progress")
        cover.append(best)
        covered.update(best.cells())
    return cover


def sop_to_poly(cover: Sequence[Implicant], n: int) -> BooleanPoly:
    """Multilinear polynomial of the disjunction of the implicants."""
    # OR via De Morgan: 1 - prod(1 - implicant)
    prod_poly = BooleanPoly.constant(n, 1)
    for imp in cover:
        prod_poly = prod_poly * (1 - imp.to_poly())
    return 1 - prod_poly


def _gray_decode(s: str) -> int:
    v = int(s, 2)
    out = 0
    while v:
        out ^= v
        v >>= 1
    return out


def render_kmap(tv: Sequence[Rational], row_vars: Sequence[int] | None = None,
                names: Sequence[str] | None = None) -> str:
    """Fixed-width text grid of a truth vector in Gray-code layout.

    Rows default to the first floor(n/2) variables (for n=3 that puts
    variable 0 alone on the rows, matching the usual 2x4 layout).  Cells
    holding 0 print "0", cells holding 1 print a dot, other values print
    as rationals.
    """
    size = len(tv)
    n = size.bit_length() - 1
    if size == 0 or size != 1 << n:
        raise ValueError(f"truth vector length {size} is not a power of two")
    if n > 4:
        raise ValueError(f"render_kmap supports n <= 4, got {n}")
    if row_vars is None:
        row_vars = tuple(range(n // 2))
    row_vars = tuple(row_vars)
    col_vars = tuple(i for i in range(n) if i not in row_vars)
    if set(row_vars) | set(col_vars) != set(range(n)):
        raise ValueError("row variable split is not a subset of the variables")
    names = names or [f"x{i}" for i in range(n)]

    def fmt(v) -> str:
        f = Fraction(v)
        if f == 0:
            return "0"
        if f == 1:
            return "."
        return str(f)

    rows = gray_code(len(row_vars)) if row_vars else [""]
    cols = gray_code(len(col_vars)) if col_vars else [""]
    cells = {}
    for r in rows:
        for c in cols:
            bits = [0] * n
            for v, b in zip(row_vars, r):
                bits[v] = int(b)
            for v, b in zip(col_vars, c):
                bits[v] = int(b)
            idx = 0
            for b in bits:
                idx = (idx << 1) | b
            cells[(r, c)] = fmt(tv[idx])
    width = max([len(v) for v in cells.values()] + [len(c) for c in cols] + [1])
    row_label = "".join(names[v] for v in row_vars)
    col_label = "".join(names[v] for v in col_vars)
    header_pad = max(len(r) for r in rows)
    lines = [f"{row_label or '-'} \\ {col_label or '-'}"]
    lines.append(" " * header_pad + "  " + " ".join(c.rjust(width) for c in cols))
    for r in rows:
        lines.append(r.rjust(header_pad) + "  " +
                     " ".join(cells[(r, c)].rjust(width) for c in cols))
    return "\n".join(lines) + "\n"
