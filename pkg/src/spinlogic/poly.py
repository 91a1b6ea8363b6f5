"""Exact multilinear pseudo-Boolean polynomials and spin-variable forms.

A pseudo-Boolean polynomial maps {0,1}^n to the rationals.  We keep it in
multilinear canonical form: a dict from sorted variable-index tuples to
nonzero Fraction coefficients (x_i^2 is folded to x_i on construction).
The zero polynomial has an empty term dict.

Spin polynomials use +/-1 valued variables instead.  Two sign conventions
relate a bit b to its spin value s:

    S_EQ_1_MINUS_2X:  s = 1 - 2b   (bit 0 -> spin +1)
    S_EQ_2X_MINUS_1:  s = 2b - 1   (bit 0 -> spin -1)

Both are supported everywhere; the Boolean form is the convention-free
internal truth.  All coefficients are exact Fractions; floats never enter
the algebra.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Term = tuple[int, ...]
Rational = Fraction | int


class Convention(enum.Enum):
    """How a bit value b maps to a spin value s."""

    S_EQ_1_MINUS_2X = "1-2x"
    S_EQ_2X_MINUS_1 = "2x-1"

    def spin_of_bit(self, b: int) -> int:
        return 1 - 2 * b if self is Convention.S_EQ_1_MINUS_2X else 2 * b - 1

    @classmethod
    def from_string(cls, s: str) -> "Convention":
        for c in cls:
            if c.value == s:
                return c
        raise ValueError(f"unknown convention {s!r}")


class DimensionError(ValueError):
    """Assignment length does not match the polynomial's variable count."""


def _canonical_terms(terms: Mapping[Iterable[int], Rational]) -> dict[Term, Fraction]:
    out: dict[Term, Fraction] = {}
    for vs, coeff in terms.items():
        key = tuple(sorted(set(vs)))
        c = Fraction(coeff)
        if c == 0:
            continue
        acc = out.get(key, Fraction(0)) + c
        if acc == 0:
            out.pop(key, None)
        else:
            out[key] = acc
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class BooleanPoly:
    """Multilinear polynomial over {0,1} variables with rational coefficients."""

    num_vars: int
    terms: dict[Term, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        canon = _canonical_terms(self.terms)
        object.__setattr__(self, "terms", canon)
        for term in canon:
            if term and term[-1] >= self.num_vars:
                raise IndexError(f"term {term} out of range for num_vars={self.num_vars}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "BooleanPoly":
        return cls(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value: Rational) -> "BooleanPoly":
        return cls(num_vars, {(): Fraction(value)})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "BooleanPoly":
        if not 0 <= i < num_vars:
            raise IndexError(f"variable {i} out of range")
        return cls(num_vars, {(i,): Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, vs: Iterable[int], coeff: Rational = 1) -> "BooleanPoly":
        return cls(num_vars, {tuple(vs): Fraction(coeff)})

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "BooleanPoly | Rational") -> "BooleanPoly":
        if isinstance(other, (int, Fraction)):
            other = BooleanPoly.constant(self.num_vars, other)
        n = max(self.num_vars, other.num_vars)
        terms = dict(self.terms)
        merged: dict[Term, Fraction] = dict(terms)
        for t, c in other.terms.items():
            merged[t] = merged.get(t, Fraction(0)) + c
        return BooleanPoly(n, merged)

    def __radd__(self, other: Rational) -> "BooleanPoly":
        return self + other

    def __neg__(self) -> "BooleanPoly":
        return BooleanPoly(self.num_vars, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "BooleanPoly | Rational") -> "BooleanPoly":
        if isinstance(other, (int, Fraction)):
            other = BooleanPoly.constant(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "BooleanPoly":
        return (-self) + other

    def __mul__(self, other: "BooleanPoly | Rational") -> "BooleanPoly":
        if isinstance(other, (int, Fraction)):
            return BooleanPoly(self.num_vars, {t: c * other for t, c in self.terms.items()})
        n = max(self.num_vars, other.num_vars)
        merged: dict[Term, Fraction] = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                # multilinear: x_i * x_i = x_i, so the product term is the set union
                key = tuple(sorted(set(t1) | set(t2)))
                merged[key] = merged.get(key, Fraction(0)) + c1 * c2
        return BooleanPoly(n, merged)

    def __rmul__(self, other: Rational) -> "BooleanPoly":
        return self * other

    def scaled(self, factor: Rational) -> "BooleanPoly":
        return self * Fraction(factor)

    def degree(self) -> int:
        return max((len(t) for t in self.terms), default=0)

    def support(self) -> set[int]:
        """Indices of variables actually appearing in some term."""
        out: set[int] = set()
        for t in self.terms:
            out.update(t)
        return out

    # -- evaluation --------------------------------------------------------

    def evaluate(self, bits: Sequence[int]) -> Fraction:
        if len(bits) != self.num_vars:
            raise DimensionError(f"expected {self.num_vars} bits, got {len(bits)}")
        total = Fraction(0)
        for t, c in self.terms.items():
            if all(bits[i] for i in t):
                total += c
        return total

    # -- transforms --------------------------------------------------------

    def negate_var(self, i: int) -> "BooleanPoly":
        """Substitute x_i -> (1 - x_i); the result evaluates as self with bit i flipped."""
        if not 0 <= i < self.num_vars:
            raise IndexError(f"variable {i} out of range")
        merged: dict[Term, Fraction] = {}
        for t, c in self.terms.items():
            if i not in t:
                merged[t] = merged.get(t, Fraction(0)) + c
            else:
                rest = tuple(v for v in t if v != i)
                merged[rest] = merged.get(rest, Fraction(0)) + c
                merged[t] = merged.get(t, Fraction(0)) - c
        return BooleanPoly(self.num_vars, merged)

    def relabel(self, mapping: Mapping[int, int], num_vars: int | None = None) -> "BooleanPoly":
        """Rename variables through an injective index map."""
        targets = [mapping[i] for i in self.support()]
        if len(set(targets)) != len(targets):
            raise ValueError("relabel map is not injective on the support")
        n = num_vars if num_vars is not None else (max(targets, default=-1) + 1)
        return BooleanPoly(n, {tuple(mapping[v] for v in t): c for t, c in self.terms.items()})

    def to_spin(self, convention: Convention) -> "SpinPoly":
        return bool_to_spin(self, convention)

    def __str__(self) -> str:
        return format_poly(self, "x")


@dataclass(frozen=True)
class SpinPoly:
    """Multilinear polynomial over +/-1 spin variables, any degree."""

    num_vars: int
    terms: dict[Term, Fraction] = field(default_factory=dict)
    convention: Convention = Convention.S_EQ_2X_MINUS_1

    def __post_init__(self):
        object.__setattr__(self, "terms", _canonical_terms(self.terms))

    def degree(self) -> int:
        return max((len(t) for t in self.terms), default=0)

    def evaluate(self, bits: Sequence[int]) -> Fraction:
        if len(bits) != self.num_vars:
            raise DimensionError(f"expected {self.num_vars} bits, got {len(bits)}")
        spins = [self.convention.spin_of_bit(b) for b in bits]
        total = Fraction(0)
        for t, c in self.terms.items():
            prod = 1
            for i in t:
                prod *= spins[i]
            total += c * prod
        return total

    def coefficient(self, vs: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(sorted(vs)), Fraction(0))

    def __str__(self) -> str:
        return format_poly(self, "s")


@dataclass(frozen=True)
class SpinModel:
    """Degree <= 2 spin polynomial: offset, local fields h, couplings J."""

    num_vars: int
    offset: Fraction = Fraction(0)
    linear: dict[int, Fraction] = field(default_factory=dict)
    quadratic: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    convention: Convention = Convention.S_EQ_2X_MINUS_1

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        lin = {i: Fraction(c) for i, c in sorted(self.linear.items()) if c != 0}
        object.__setattr__(self, "linear", lin)
        quad: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.quadratic.items():
            if i == j:
                raise ValueError(f"quadratic key ({i},{j}) is not a pair of distinct indices")
            key = (min(i, j), max(i, j))
            acc = quad.get(key, Fraction(0)) + Fraction(c)
            if acc != 0:
                quad[key] = acc
        object.__setattr__(self, "quadratic", dict(sorted(quad.items())))

    @classmethod
    def from_spin_poly(cls, p: SpinPoly) -> "SpinModel":
        if p.degree() > 2:
            raise ValueError(f"spin polynomial has degree {p.degree()} > 2")
        offset = p.terms.get((), Fraction(0))
        linear = {t[0]: c for t, c in p.terms.items() if len(t) == 1}
        quadratic = {(t[0], t[1]): c for t, c in p.terms.items() if len(t) == 2}
        return cls(p.num_vars, offset, linear, quadratic, p.convention)

    def to_spin_poly(self) -> SpinPoly:
        terms: dict[Term, Fraction] = {(): self.offset}
        terms.update({(i,): c for i, c in self.linear.items()})
        terms.update({pair: c for pair, c in self.quadratic.items()})
        return SpinPoly(self.num_vars, terms, self.convention)

    def evaluate(self, bits: Sequence[int]) -> Fraction:
        return self.to_spin_poly().evaluate(bits)

    def to_bool(self) -> BooleanPoly:
        return spin_to_bool(self)

    def __str__(self) -> str:
        return format_poly(self.to_spin_poly(), "s")


Assignment = Sequence[int]


def eval_bool(p: BooleanPoly, bits: Assignment) -> Fraction:
    """Evaluate p at a 0/1 assignment."""
    return p.evaluate(bits)


def truth_vector_to_poly(values: Sequence[Rational]) -> BooleanPoly:
    """Interpolate the unique multilinear polynomial through a truth vector.

    The vector index is read in canonical Boolean counting order with
    variable 0 as the most significant bit.  This is the Moebius transform
    from point values to multilinear coefficients.
    """
    size = len(values)
    n = size.bit_length() - 1
    if size == 0 or size != 1 << n:
        raise ValueError(f"truth vector length {size} is not a power of two")
    # Moebius / inclusion-exclusion over subsets, one variable at a time.
    coeffs = [Fraction(v) for v in values]
    for i in range(n):
        bit = 1 << (n - 1 - i)  # variable i is the MSB side
        for idx in range(size):
            if idx & bit:
                coeffs[idx] -= coeffs[idx ^ bit]
    terms: dict[Term, Fraction] = {}
    for idx, c in enumerate(coeffs):
        if c != 0:
            term = tuple(i for i in range(n) if idx & (1 << (n - 1 - i)))
            terms[term] = c
    return BooleanPoly(n, terms)


def poly_to_truth_vector(p: BooleanPoly, cap: int = 24) -> list[Fraction]:
    """Evaluate p on all 2^n assignments, variable 0 most significant."""
    n = p.num_vars
    if n > cap:
        raise ValueError(f"num_vars={n} exceeds enumeration cap {cap}")
    size = 1 << n
    values = [Fraction(0)] * size
    for t, c in p.terms.items():
        mask = 0
        for i in t:
            mask |= 1 << (n - 1 - i)
        for idx in range(size):
            if idx & mask == mask:
                values[idx] += c
    return values


def negate_var(p: BooleanPoly, i: int) -> BooleanPoly:
    return p.negate_var(i)


def bool_to_spin(p: BooleanPoly, convention: Convention) -> SpinPoly:
    """Substitute x_i by (1 -/+ s_i)/2 according to the convention.

    The substitution is exact: for every bit assignment the spin polynomial
    evaluated per the convention equals the Boolean value, and the degree is
    preserved.
    """
    sign = -1 if convention is Convention.S_EQ_1_MINUS_2X else 1
    terms: dict[Term, Fraction] = {}
    for t, c in p.terms.items():
        k = len(t)
        base = c / (1 << k)
        # expand prod_{i in t} (1 + sign*s_i)
        for r in range(k + 1):
            for sub in combinations(t, r):
                coeff = base * (sign ** r)
                terms[sub] = terms.get(sub, Fraction(0)) + coeff
    return SpinPoly(p.num_vars, terms, convention)


def spin_poly_to_bool(p: SpinPoly) -> BooleanPoly:
    """Substitute s_i by its bit expression, the inverse of bool_to_spin."""
    sign = Fraction(-2) if p.convention is Convention.S_EQ_1_MINUS_2X else Fraction(2)
    const = Fraction(1) if p.convention is Convention.S_EQ_1_MINUS_2X else Fraction(-1)
    out = BooleanPoly.zero(p.num_vars)
    for t, c in p.terms.items():
        factor = BooleanPoly.constant(p.num_vars, c)
        for i in t:
            s_i = BooleanPoly(p.num_vars, {(): const, (i,): sign})
            factor = factor * s_i
        out = out + factor
    return out


def spin_to_bool(m: SpinModel) -> BooleanPoly:
    return spin_poly_to_bool(m.to_spin_poly())


# -- text format -----------------------------------------------------------
#
# A polynomial prints as terms joined by " + ":  "3*x0*x1 + -2*x0*x2 + 1/2".
# Spin polynomials use "s" tokens.  The parser round-trips printer output
# bit-exactly.

_TOKEN_RE = re.compile(r"^([xs])(\d+)$")


def format_poly(p: BooleanPoly | SpinPoly, letter: str) -> str:
    if not p.terms:
        return "0"
    parts = []
    for t, c in sorted(p.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
        factors = [str(c)] + [f"{letter}{i}" for i in t]
        parts.append("*".join(factors))
    return " + ".join(parts)


def parse_poly(text: str, num_vars: int | None = None,
               convention: Convention | None = None) -> BooleanPoly | SpinPoly:
    """Parse the text form; returns a SpinPoly when 's' tokens appear.

    A convention must be supplied for spin input (defaults to the
    table-matching S_EQ_2X_MINUS_1).
    """
    text = text.strip()
    terms: dict[Term, Fraction] = {}
    letter = None
    max_var = -1
    if text not in ("", "0"):
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError("empty term in polynomial text")
            coeff = Fraction(1)
            vs: list[int] = []
            for factor in chunk.split("*"):
                factor = factor.strip()
                m = _TOKEN_RE.match(factor)
                if m:
                    if letter is None:
                        letter = m.group(1)
                    elif letter != m.group(1):
                        raise ValueError("mixed x and s tokens in polynomial text")
                    v = int(m.group(2))
                    vs.append(v)
                    max_var = max(max_var, v)
                else:
                    coeff *= Fraction(factor)
            key = tuple(sorted(set(vs)))
            terms[key] = terms.get(key, Fraction(0)) + coeff
    n = num_vars if num_vars is not None else max_var + 1
    if letter == "s":
        return SpinPoly(n, terms, convention or Convention.S_EQ_2X_MINUS_1)
    return BooleanPoly(n, terms)
