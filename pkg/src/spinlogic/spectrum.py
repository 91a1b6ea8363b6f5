"""Exhaustive diagonal-spectrum oracle.

Everything in this project is diagonal in one basis, so spectra are computed
by enumerating all 2^n bit assignments.  Internally energies are held as a
numpy integer array scaled by a common denominator, which keeps the
arithmetic exact while staying fast enough for n up to the low twenties.
Assignments are indexed in canonical Boolean counting order with qubit 0 as
the most significant bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .poly import BooleanPoly, SpinModel, SpinPoly

ENUMERATION_CAP = 24


class EnumerationCapError(ValueError):
    """The system is too large for exhaustive enumeration."""


def _scaled_int_terms(terms: dict, num_vars: int) -> tuple[list[tuple[int, int]], int]:
    """Return (bitmask, integer coefficient) pairs and the common denominator."""
    denom = 1
    for c in terms.values():
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    out = []
    for t, c in terms.items():
        mask = 0
        for i in t:
            mask |= 1 << (num_vars - 1 - i)
        out.append((mask, int(c * denom)))
    return out, denom


def index_to_bits(idx: int, n: int) -> tuple[int, ...]:
    return tuple((idx >> (n - 1 - i)) & 1 for i in range(n))


def bits_to_index(bits: Sequence[int]) -> int:
    idx = 0
    for b in bits:
        idx = (idx << 1) | (b & 1)
    return idx


@dataclass(frozen=True)
class SpectrumReport:
    """Full diagonal spectrum of a Hamiltonian over all bit assignments."""

    num_vars: int
    scaled: np.ndarray = field(repr=False)  # object-dtype ints, scaled by denom
    denom: int

    @property
    def size(self) -> int:
        return 1 << self.num_vars

    def energy(self, idx: int) -> Fraction:
        return Fraction(int(self.scaled[idx]), self.denom)

    def energies(self) -> list[Fraction]:
        return [Fraction(int(v), self.denom) for v in self.scaled]

    @property
    def ground_energy(self) -> Fraction:
        return Fraction(int(self.scaled.min()), self.denom)

    @property
    def ground_space(self) -> list[int]:
        """Assignment indices attaining the minimum energy."""
        m = self.scaled.min()
        return [int(i) for i in np.nonzero(self.scaled == m)[0]]

    @property
    def fully_degenerate(self) -> bool:
        return bool(self.scaled.min() == self.scaled.max())

    @property
    def gap(self) -> Fraction | None:
        """First excited energy minus ground energy; None if fully degenerate."""
        if self.fully_degenerate:
            return None
        m = self.scaled.min()
        above = self.scaled[self.scaled > m]
        return Fraction(int(above.min()) - int(m), self.denom)

    def ground_bits(self) -> list[tuple[int, ...]]:
        return [index_to_bits(i, self.num_vars) for i in self.ground_space]


@dataclass(frozen=True)
class RestrictedLandscape:
    """Per-logical-assignment minimum energy over all ancilla completions."""

    logical: tuple[int, ...]
    energies: list[Fraction]
    argmin: list[list[tuple[int, ...]]]  # ancilla bit patterns attaining each minimum
    ancilla: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.energies)


def enumerate_spectrum(h: BooleanPoly | SpinPoly | SpinModel,
                       cap: int = ENUMERATION_CAP) -> SpectrumReport:
    """Exact energies of a diagonal Hamiltonian on all 2^n assignments."""
    if isinstance(h, SpinModel):
        h = h.to_spin_poly()
    n = h.num_vars
    if n > cap:
        raise EnumerationCapError(f"num_vars={n} exceeds enumeration cap {cap}")
    size = 1 << n
    pairs, denom = _scaled_int_terms(h.terms, n)
    # int64 is safe as long as the worst-case absolute sum fits
    bound = sum(abs(c) for _, c in pairs)
    dtype = np.int64 if bound < 2**62 else object
    idx = np.arange(size, dtype=np.int64)
    total = np.zeros(size, dtype=dtype)
    if isinstance(h, SpinPoly):
        # spin value of bit b per the convention: +/-(1 - 2b)
        flip = -1 if h.convention.value == "2x-1" else 1
        for mask, coeff in pairs:
            # product over term of (1-2b_i), i.e. parity of the masked bits
            bitcount = np.zeros(size, dtype=np.int64)
            m = mask
            while m:
                bit = m & -m
                bitcount += (idx & bit) != 0
                m ^= bit
            sign = 1 - 2 * (bitcount & 1)
            if flip == -1 and bin(mask).count("1") % 2 == 1:
                sign = -sign
            total += coeff * sign.astype(dtype)
        return SpectrumReport(n, total, denom)
    for mask, coeff in pairs:
        sel = (idx & mask) == mask
        total += coeff * sel.astype(dtype)
    return SpectrumReport(n, total, denom)


def restrict(report: SpectrumReport, logical: Sequence[int]) -> RestrictedLandscape:
    """Minimum over ancilla completions, per logical assignment."""
    n = report.num_vars
    logical = tuple(logical)
    if any(q < 0 or q >= n for q in logical) or len(set(logical)) != len(logical):
        raise ValueError("logical qubit set must be a subset of distinct qubit indices")
    ancilla = tuple(q for q in range(n) if q not in logical)
    grid = report.scaled.reshape([2] * n)
    grid = np.transpose(grid, logical + ancilla)
    grid = grid.reshape(1 << len(logical), 1 << len(ancilla))
    energies = []
    argmin = []
    for row in grid:
        m = row.min()
        energies.append(Fraction(int(m), report.denom))
        argmin.append([index_to_bits(int(j), len(ancilla))
                       for j in np.nonzero(row == m)[0]])
    return RestrictedLandscape(logical, energies, argmin, ancilla)


def spectral_gap(report: SpectrumReport) -> Fraction:
    g = report.gap
    if g is None:
        raise ValueError("spectrum is fully degenerate; the gap is undefined")
    return g


@dataclass(frozen=True)
class ProjectionLemmaReport:
    """Both sides of the strict-equality projection check, with hypothesis data."""

    lhs: Fraction            # lambda(H1 + H2)
    rhs: Fraction            # min over the protected set of H1
    h1_norm: Fraction        # max |energy| of H1
    delta: Fraction          # min of H2 off the protected set
    margin: Fraction         # delta - 2*norm
    in_hypothesis: bool
    h2_zero_on_set: bool
    equal: bool


def check_projection_lemma(h1: BooleanPoly, h2: BooleanPoly,
                           protected: Sequence[int],
                           cap: int = ENUMERATION_CAP) -> ProjectionLemmaReport:
    """Check lambda(H1+H2) == min_{protected} H1 and the gap hypothesis.

    `protected` is the set of assignment indices spanning the protected
    subspace.  The check is always performed; hypothesis violations are
    reported, not raised.
    """
    n = max(h1.num_vars, h2.num_vars)
    h1 = h1 + BooleanPoly.zero(n)
    h2 = h2 + BooleanPoly.zero(n)
    r1 = enumerate_spectrum(h1, cap)
    r2 = enumerate_spectrum(h2, cap)
    rsum = enumerate_spectrum(h1 + h2, cap)
    pset = set(protected)
    if not pset:
        raise ValueError("protected set is empty")
    h1_norm = max(abs(r1.energy(i)) for i in range(r1.size))
    zero_on = all(r2.energy(i) == 0 for i in pset)
    off = [r2.energy(i) for i in range(r2.size) if i not in pset]
    delta = min(off) if off else Fraction(0)
    rhs = min(r1.energy(i) for i in pset)
    lhs = rsum.ground_energy
    margin = delta - 2 * h1_norm
    return ProjectionLemmaReport(
        lhs=lhs, rhs=rhs, h1_norm=h1_norm, delta=delta, margin=margin,
        in_hypothesis=zero_on and margin > 0,
        h2_zero_on_set=zero_on,
        equal=lhs == rhs,
    )
