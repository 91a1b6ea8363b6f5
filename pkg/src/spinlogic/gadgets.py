"""Catalogue of verified penalty Hamiltonians for ground-state logic.

Each gadget is a pseudo-Boolean penalty over local slots whose zero-energy
ground space spans exactly the satisfying rows of a target relation; any
mediator slots take the minimizing values on their own.  The catalogue holds
all 16 two-input logic functions (XOR and EQV need one mediator each, the
rest none) plus the two 3-local coupling gadgets: the Boolean AND-product
chain link and the 5-qubit sigma-product gadget.

Penalties are stored in Boolean form with the gap normalized to 1; callers
scale at instantiation.  Every entry is re-checked by exhaustive enumeration
in the test suite, which also regenerates the shipped catalogue file.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .poly import BooleanPoly, Convention, Rational, SpinModel, format_poly, parse_poly
from .spectrum import enumerate_spectrum, index_to_bits

ROLE_INPUT = "input"
ROLE_OUTPUT = "output"
ROLE_MEDIATOR = "mediator"


@dataclass(frozen=True)
class Gadget:
    """Penalty polynomial with slot roles and the relation it enforces."""

    name: str
    penalty: BooleanPoly
    roles: tuple[str, ...]
    gap: Fraction
    relation: frozenset[tuple[int, ...]]  # satisfying rows over non-mediator slots

    @property
    def num_slots(self) -> int:
        return len(self.roles)

    @property
    def mediator_slots(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r == ROLE_MEDIATOR)

    @property
    def logical_slots(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r != ROLE_MEDIATOR)

    def negate_input(self, slot: int) -> "Gadget":
        """Polarity variant: the same gadget with one input slot negated."""
        if self.roles[slot] != ROLE_INPUT:
            raise ValueError(f"slot {slot} is not an input slot")
        pos = self.logical_slots.index(slot)
        relation = frozenset(
            tuple(b ^ 1 if k == pos else b for k, b in enumerate(row))
            for row in self.relation)
        return Gadget(f"{self.name}!{slot}", self.penalty.negate_var(slot),
                      self.roles, self.gap, relation)


@dataclass(frozen=True)
class GadgetReport:
    ground_space: tuple[tuple[int, ...], ...]
    achieved_gap: Fraction | None
    ground_energy: Fraction
    passed: bool
    failures: tuple[str, ...]


def verify_gadget(g: Gadget, cap: int = 24) -> GadgetReport:
    """Exhaustively check the three gadget invariants.

    Failures are reported, not raised.  The achieved gap is the minimum
    energy over all assignments whose logical part violates the relation.
    """
    report = enumerate_spectrum(g.penalty + BooleanPoly.zero(g.num_slots), cap)
    failures: list[str] = []
    ground = tuple(index_to_bits(i, g.num_slots) for i in report.ground_space)
    g0 = report.ground_energy
    if g0 != 0:
        failures.append(f"ground energy is {g0}, not 0")
    med = g.mediator_slots
    log = g.logical_slots
    violating_min: Fraction | None = None
    for row in product((0, 1), repeat=len(log)):
        completions = []
        for m in product((0, 1), repeat=len(med)):
            bits = [0] * g.num_slots
            for s, b in zip(log, row):
                bits[s] = b
            for s, b in zip(med, m):
                bits[s] = b
            completions.append(g.penalty.evaluate(bits))
        best = min(completions)
        if row in g.relation:
            if best != 0:
                failures.append(f"satisfying row {row} has minimum energy {best}")
        else:
            if violating_min is None or best < violating_min:
                violating_min = best
            if best < g.gap:
                failures.append(f"violating row {row} reaches energy {best} < gap {g.gap}")
    return GadgetReport(ground_space=ground, achieved_gap=violating_min,
                        ground_energy=g0, passed=not failures,
                        failures=tuple(failures))


def instantiate(g: Gadget, slot_map: Mapping[int, int],
                num_vars: int | None = None,
                scale: Rational = 1) -> BooleanPoly:
    """Relabel the penalty onto global qubit indices, optionally scaled."""
    if sorted(slot_map.keys()) != list(range(g.num_slots)):
        raise ValueError("slot map must cover every slot exactly once")
    if len(set(slot_map.values())) != g.num_slots:
        raise ValueError("slot map aliases distinct slots onto one qubit")
    return g.penalty.relabel(dict(slot_map), num_vars) * Fraction(scale)


# -- the sixteen two-input functions ----------------------------------------

def _poly(text: str, n: int) -> BooleanPoly:
    p = parse_poly(text, num_vars=n)
    assert isinstance(p, BooleanPoly)
    return p

# slots 0,1 are the inputs x1,x2; slot 2 the output z; slot 3 (XOR/EQV) the mediator.
_GATE_ROLES_3 = (ROLE_INPUT, ROLE_INPUT, ROLE_OUTPUT)
_GATE_ROLES_4 = (ROLE_INPUT, ROLE_INPUT, ROLE_OUTPUT, ROLE_MEDIATOR)

# truth tables f(x1, x2) in row order 00, 01, 10, 11
_TRUTH: dict[str, tuple[int, int, int, int]] = {
    "FALSE":   (0, 0, 0, 0),
    "TRUE":    (1, 1, 1, 1),
    "AND":     (0, 0, 0, 1),
    "AND_NX1": (0, 1, 0, 0),   # ~x1 & x2
    "AND_NX2": (0, 0, 1, 0),   # x1 & ~x2
    "NOR":     (1, 0, 0, 0),   # ~x1 & ~x2
    "OR":      (0, 1, 1, 1),
    "OR_NX1":  (1, 1, 0, 1),   # ~x1 | x2
    "OR_NX2":  (1, 0, 1, 1),   # x1 | ~x2
    "NAND":    (1, 1, 1, 0),   # ~x1 | ~x2
    "COPY_X1": (0, 0, 1, 1),
    "COPY_X2": (0, 1, 0, 1),
    "NOT_X1":  (1, 1, 0, 0),
    "NOT_X2":  (1, 0, 1, 0),
    "XOR":     (0, 1, 1, 0),
    "EQV":     (1, 0, 0, 1),
}

TWO_INPUT_FUNCTIONS = tuple(_TRUTH)


def relation_of(name: str) -> frozenset[tuple[int, int, int]]:
    """Satisfying rows (x1, x2, z) with z = f(x1, x2)."""
    tt = _TRUTH[name]
    return frozenset((a, b, tt[2 * a + b]) for a in (0, 1) for b in (0, 1))


def _build_catalogue() -> dict[str, Gadget]:
    one = Fraction(1)
    h_and = _poly("3*x2 + 1*x0*x1 + -2*x0*x2 + -2*x1*x2", 3)
    # OR penalty with the published coefficient set (gap 1)
    h_or = _poly("1*x0 + 1*x1 + 2*x2 + 2*x0*x1 + -3*x0*x2 + -3*x1*x2", 3)
    base: dict[str, BooleanPoly] = {
        "FALSE": _poly("1*x2", 3),
        "TRUE": _poly("1 + -1*x2", 3),
        "AND": h_and,
        "AND_NX1": h_and.negate_var(0),
        "AND_NX2": h_and.negate_var(1),
        "NOR": h_and.negate_var(0).negate_var(1),
        "OR": h_or,
        "OR_NX1": h_or.negate_var(0),
        "OR_NX2": h_or.negate_var(1),
        "NAND": h_or.negate_var(0).negate_var(1),
        # couplers between one input and the output
        "COPY_X1": _poly("1*x0 + 1*x2 + -2*x0*x2", 3),
        "COPY_X2": _poly("1*x1 + 1*x2 + -2*x1*x2", 3),
        "NOT_X1": _poly("1 + -1*x0 + -1*x2 + 2*x0*x2", 3),
        "NOT_X2": _poly("1 + -1*x1 + -1*x2 + 2*x1*x2", 3),
    }
    catalogue = {name: Gadget(name, p, _GATE_ROLES_3, one, relation_of(name))
                 for name, p in base.items()}
    # XOR/EQV need one mediator; coefficients are the canonical exact-LP
    # solutions whose ground spans pin the mediator to x1|x2 and ~(x1&x2)
    xor = _poly("1*x0 + 1*x1 + 1*x2 + 4*x3 + 2*x0*x1 + 2*x0*x2 + -4*x0*x3"
                " + 2*x1*x2 + -4*x1*x3 + -4*x2*x3", 4)
    eqv = _poly("1 + 3*x0 + -1*x1 + 3*x2 + -2*x0*x1 + 2*x0*x2 + -4*x0*x3"
                " + -2*x1*x2 + 4*x1*x3 + -4*x2*x3", 4)
    catalogue["XOR"] = Gadget("XOR", xor, _GATE_ROLES_4, one, relation_of("XOR"))
    catalogue["EQV"] = Gadget("EQV", eqv, _GATE_ROLES_4, one, relation_of("EQV"))
    return catalogue


_CATALOGUE = _build_catalogue()


def lookup(name: str, negate_x1: bool = False, negate_x2: bool = False) -> Gadget:
    """Fetch a catalogued two-input gadget, optionally with negated inputs."""
    try:
        g = _CATALOGUE[name]
    except KeyError:
        raise KeyError(f"unknown gadget {name!r}; choose from {TWO_INPUT_FUNCTIONS}")
    if negate_x1:
        g = g.negate_input(0)
    if negate_x2:
        g = g.negate_input(1)
    return g


def catalogue() -> dict[str, Gadget]:
    return dict(_CATALOGUE)


# -- equality / inequality couplers ------------------------------------------

def equality_coupler(n: int, i: int, j: int) -> BooleanPoly:
    """Penalty 1 when bits i and j differ (the XOR indicator)."""
    return BooleanPoly(n, {(i,): Fraction(1), (j,): Fraction(1),
                           (min(i, j), max(i, j)): Fraction(-2)})


def inequality_coupler(n: int, i: int, j: int) -> BooleanPoly:
    """Penalty 1 when bits i and j agree."""
    return 1 - equality_coupler(n, i, j)


# -- 3-local coupling gadgets --------------------------------------------------

def threelocal_and_gadget() -> Gadget:
    """Chain link for reducing a triple Boolean product to 2-local terms.

    Slots (x1, x2, x3, z) with mediator z held at x1 & x2 by the AND
    penalty; the 2-local coupling z*x3 then reproduces the landscape of
    x1*x2*x3 on the logical slots.
    """
    h_and = lookup("AND").penalty.relabel({0: 0, 1: 1, 2: 3}, 4)
    penalty = h_and + BooleanPoly.monomial(4, (2, 3))
    relation = frozenset(r for r in product((0, 1), repeat=3) if not all(r))
    return Gadget("AND3", penalty,
                  (ROLE_INPUT, ROLE_INPUT, ROLE_INPUT, ROLE_MEDIATOR),
                  Fraction(1), relation)


def threelocal_sigma_gadget(j_coupling: Rational, delta: Rational,
                            check: bool = True) -> SpinModel:
    """5-qubit 2-local model whose logical restriction is J * s1 s2 s3.

    Qubits 0..2 are logical, qubit 3 follows the parity of qubits 1 and 2,
    and qubit 4 is the mediator of that parity penalty.  Restricted to
    minimum-energy ancilla completions the energy equals J times the
    product of the three logical spins (s = 1 - 2x), exactly, provided
    delta > 2|J|.
    """
    j = Fraction(j_coupling)
    d = Fraction(delta)
    if check and not d > 2 * abs(j):
        raise ValueError(f"gap condition violated: delta={d} <= 2|J|={2 * abs(j)}")
    half = d / 2
    return SpinModel(
        num_vars=5,
        offset=2 * d,
        linear={1: -half, 2: -half, 3: -half, 4: d},
        quadratic={(1, 2): half, (1, 3): half, (2, 3): half,
                   (1, 4): -d, (2, 4): -d, (3, 4): -d,
                   (0, 3): j},
        convention=Convention.S_EQ_1_MINUS_2X,
    )


# -- catalogue serialization ---------------------------------------------------

def catalogue_text() -> str:
    """The versioned data-asset form of the two-input gadget catalogue."""
    lines = ["# spinlogic gadget catalogue v1", ""]
    for name in TWO_INPUT_FUNCTIONS:
        g = _CATALOGUE[name]
        lines.append(f"gadget {name}")
        lines.append(f"roles {' '.join(g.roles)}")
        lines.append(f"gap {g.gap}")
        lines.append(f"penalty {format_poly(g.penalty, 'x')}")
        rows = sorted(g.relation)
        lines.append("relation " + " ".join("".join(map(str, r)) for r in rows))
        lines.append("")
    return "\n".join(lines)


def parse_catalogue(text: str) -> dict[str, Gadget]:
    out: dict[str, Gadget] = {}
    fields: dict[str, str] = {}

    def flush():
        if not fields:
            return
        name = fields["gadget"]
        roles = tuple(fields["roles"].split())
        penalty = parse_poly(fields["penalty"], num_vars=len(roles))
        assert isinstance(penalty, BooleanPoly)
        relation = frozenset(tuple(int(c) for c in row)
                             for row in fields["relation"].split())
        out[name] = Gadget(name, penalty, roles, Fraction(fields["gap"]), relation)
        fields.clear()

    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key == "gadget":
            flush()
        fields[key] = rest.strip()
    flush()
    return out
