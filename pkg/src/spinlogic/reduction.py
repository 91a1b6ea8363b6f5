"""k-local to 2-local reductions with mediator qubits.

Three non-perturbative constructions:

* Boolean AND-product chains: a degree-k product term reduces to 2-local
  form with exactly k-2 fresh qubits, each held to the AND of the previous
  pair by a scaled penalty gadget.
* sigma-product parity chains: a k-fold spin coupling J*s_1...s_k reduces
  via XOR gadgets computing the parity bit, plus a 1-local perturbation on
  it (for k=3 the hand-optimized two-mediator gadget is also available).
* multi-level embedding: a target diagonal spectrum, given as disjoint
  level subspaces, is reproduced on the logical qubits by indicator
  circuits with level-energy perturbations on their outputs.

Restricted to minimum-energy ancilla completions, every construction
reproduces its target landscape as exact rationals; the test suite asserts
this by enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import gadgets, kmap
from .circuit import Circuit, Gate, compile_circuit
from .poly import BooleanPoly, Convention, Rational, SpinModel

TWO_MEDIATOR_K3 = "two_mediator_k3"
PARITY_CHAIN = "parity_chain"


@dataclass(frozen=True)
class FreshQubit:
    index: int
    provenance: str
    role: str


@dataclass(frozen=True)
class ReductionTrace:
    original: str
    reduced: BooleanPoly | SpinModel
    fresh: tuple[FreshQubit, ...]
    gap: Fraction
    logical: tuple[int, ...]


class QubitAllocator:
    """Monotone counter handing out fresh qubit indices."""

    def __init__(self, start: int):
        self._next = start

    def take(self) -> int:
        q = self._next
        self._next += 1
        return q

    @property
    def total(self) -> int:
        return self._next


def reduce_and_term(vars_: Sequence[int], coefficient: Rational,
                    alloc: QubitAllocator, delta: Rational = 1) -> ReductionTrace:
    """Reduce J * x_1...x_k (k >= 3) to 2-local form with k-2 fresh qubits.

    Chained AND gadgets (scaled by delta) force each fresh qubit to the
    product of the previous pair; the final 2-local term carries the
    coefficient.  The restricted landscape equals J times the product
    indicator whenever |J| <= delta.
    """
    vs = list(vars_)
    k = len(vs)
    if k < 3:
        raise ValueError(f"reduce_and_term needs k >= 3, got {k}")
    delta = Fraction(delta)
    coeff = Fraction(coefficient)
    and_gadget = gadgets.lookup("AND")
    fresh: list[FreshQubit] = []
    penalty_parts: list[tuple[dict[int, int], int]] = []
    current = vs[0]
    for depth, nxt in enumerate(vs[1:-1]):
        z = alloc.take()
        fresh.append(FreshQubit(z, f"and-chain depth {depth} of {tuple(vs)}",
                                "mediator"))
        penalty_parts.append(({0: current, 1: nxt, 2: z}, z))
        current = z
    n = alloc.total
    reduced = BooleanPoly.zero(n)
    for slot_map, _ in penalty_parts:
        reduced = reduced + gadgets.instantiate(and_gadget, slot_map, n, scale=delta)
    reduced = reduced + BooleanPoly.monomial(n, (current, vs[-1]), coeff)
    return ReductionTrace(original=f"{coeff}*prod{tuple(vs)}", reduced=reduced,
                          fresh=tuple(fresh), gap=delta, logical=tuple(vs))


def reduce_poly(p: BooleanPoly, delta: Rational | None = None) -> ReductionTrace:
    """Reduce every degree >= 3 term of p independently.

    Fresh-qubit count is the sum of (k_i - 2) over the high-degree terms.
    The default delta is 2*sum(|coefficients of reduced terms|) + 1, which
    keeps every wrong-mediator completion above the embedded landscape.
    """
    high = {t: c for t, c in p.terms.items() if len(t) >= 3}
    if delta is None:
        delta = 2 * sum(abs(c) for c in high.values()) + 1
    delta = Fraction(delta)
    alloc = QubitAllocator(p.num_vars)
    reduced = BooleanPoly(p.num_vars,
                          {t: c for t, c in p.terms.items() if len(t) <= 2})
    fresh: list[FreshQubit] = []
    for t, c in high.items():
        trace = reduce_and_term(t, c, alloc, delta)
        reduced = reduced + trace.reduced
        fresh.extend(trace.fresh)
    return ReductionTrace(original=str(p), reduced=reduced, fresh=tuple(fresh),
                          gap=delta, logical=tuple(range(p.num_vars)))


def reduce_sigma_product(k: int, j_coupling: Rational, delta: Rational,
                         variant: str = PARITY_CHAIN) -> ReductionTrace:
    """Embed J * s_1 s_2 ... s_k (spins s = 1-2x) into a 2-local model.

    parity_chain: XOR gadgets build the parity bit of the k logical qubits
    left to right, then the perturbation J*(|0><0| - |1><1|) acts on it,
    which in spin form is just J*sigma on the parity qubit.  Requires
    delta > 2|J|.  two_mediator_k3 emits the hand-optimized 5-qubit gadget
    (k = 3 only).
    """
    j = Fraction(j_coupling)
    delta = Fraction(delta)
    if k < 3:
        raise ValueError(f"sigma-product reduction needs k >= 3, got {k}")
    if not delta > 2 * abs(j):
        raise ValueError(f"gap condition violated: delta={delta} <= 2|J|={2 * abs(j)}")
    if variant == TWO_MEDIATOR_K3:
        if k != 3:
            raise ValueError("two_mediator_k3 applies only to k = 3")
        model = gadgets.threelocal_sigma_gadget(j, delta)
        fresh = (FreshQubit(3, "parity of qubits 1,2", "mediator"),
                 FreshQubit(4, "parity-gadget mediator", "mediator"))
        return ReductionTrace(original=f"{j}*sigma^{k}", reduced=model,
                              fresh=fresh, gap=delta, logical=(0, 1, 2))
    if variant != PARITY_CHAIN:
        raise ValueError(f"unknown variant {variant!r}")
    alloc = QubitAllocator(k)
    xor = gadgets.lookup("XOR")
    fresh: list[FreshQubit] = []
    parts: list[tuple[dict[int, int], None]] = []
    current = 0
    for depth in range(1, k):
        z = alloc.take()
        m = alloc.take()
        fresh.append(FreshQubit(z, f"parity chain output, depth {depth - 1}",
                                "output" if depth == k - 1 else "intermediate"))
        fresh.append(FreshQubit(m, f"xor mediator, depth {depth - 1}", "mediator"))
        parts.append(({0: current, 1: depth, 2: z, 3: m}, None))
        current = z
    n = alloc.total
    reduced = BooleanPoly.zero(n)
    for slot_map, _ in parts:
        reduced = reduced + gadgets.instantiate(xor, slot_map, n, scale=delta)
    # J(|0><0| - |1><1|) on the parity qubit: J*(1 - 2x) = J*sigma under s=1-2x
    reduced = reduced + BooleanPoly(n, {(): j, (current,): -2 * j})
    spin = SpinModel.from_spin_poly(reduced.to_spin(Convention.S_EQ_1_MINUS_2X))
    return ReductionTrace(original=f"{j}*sigma^{k}", reduced=spin,
                          fresh=tuple(fresh), gap=delta,
                          logical=tuple(range(k)))


@dataclass(frozen=True)
class LevelSpec:
    """Strictly increasing energies with disjoint subspaces covering {0,1}^n."""

    num_vars: int
    levels: tuple[tuple[Fraction, frozenset[int]], ...]  # (energy, assignment indices)

    def __post_init__(self):
        energies = [e for e, _ in self.levels]
        if any(a >= b for a, b in zip(energies, energies[1:])):
            raise ValueError("level energies must be strictly increasing")
        seen: set[int] = set()
        for _, cells in self.levels:
            if not cells:
                raise ValueError("empty level subspace")
            if cells & seen:
                raise ValueError("level subspaces overlap")
            seen |= cells
        if seen != set(range(1 << self.num_vars)):
            raise ValueError("level subspaces do not cover the assignment space")

    @classmethod
    def from_energy_vector(cls, energies: Sequence[Rational]) -> "LevelSpec":
        size = len(energies)
        n = size.bit_length() - 1
        if size != 1 << n:
            raise ValueError("energy vector length must be a power of two")
        groups: dict[Fraction, set[int]] = {}
        for idx, e in enumerate(energies):
            groups.setdefault(Fraction(e), set()).add(idx)
        levels = tuple((e, frozenset(cells)) for e, cells in sorted(groups.items()))
        return cls(n, levels)


def embed_levels(spec: LevelSpec, delta: Rational | None = None) -> ReductionTrace:
    """2-local model whose restricted landscape reproduces the level map.

    Per level, an indicator circuit (from the SOP cover of the subspace's
    characteristic vector) computes membership into an output qubit, and
    the level energy rides on that output.  Disjoint cover means exactly
    one indicator fires per logical assignment, so the restriction equals
    the target energy exactly (no global shift needed).
    """
    max_abs = max(abs(e) for e, _ in spec.levels)
    if delta is None:
        delta = 2 * sum(abs(e) for e, _ in spec.levels) + 1
    delta = Fraction(delta)
    if not delta > 2 * max_abs:
        raise ValueError(f"gap condition violated: delta={delta} <= 2*max|E|={2 * max_abs}")
    n = spec.num_vars
    inputs = tuple(f"x{i}" for i in range(n))
    gates: list[Gate] = []
    counter = 0

    def fresh_wire() -> str:
        nonlocal counter
        counter += 1
        return f"w{counter}"

    def implicant_wire(imp: kmap.Implicant) -> str:
        """AND chain over the implicant's fixed literals."""
        literals = [(inputs[v], val == 0) for v, val in imp.fixed]
        if len(literals) == 1:
            w = fresh_wire()
            name, neg = literals[0]
            gates.append(Gate("NOT" if neg else "COPY", (name,), (False,), w))
            return w
        current, cur_neg = literals[0]
        for name, neg in literals[1:]:
            w = fresh_wire()
            gates.append(Gate("AND", (current, name), (cur_neg, neg), w))
            current, cur_neg = w, False
        return current

    level_outputs: list[str] = []
    for level_no, (_, cells) in enumerate(spec.levels):
        tv = [1 if idx in cells else 0 for idx in range(1 << n)]
        cover = kmap.sop_cover(tv)
        if not cover[0].fixed and len(cover) == 1:
            # whole space: constant indicator, no circuit needed
            level_outputs.append("")
            continue
        wires = [implicant_wire(imp) for imp in cover]
        current = wires[0]
        for w in wires[1:]:
            nxt = fresh_wire()
            gates.append(Gate("OR", (current, w), (False, False), nxt))
            current = nxt
        level_outputs.append(current)

    circuit = Circuit(inputs, tuple(gates),
                      outputs=tuple(w for w in level_outputs if w))
    model = compile_circuit(circuit, delta)
    reduced = model.prop
    for (energy, _), wire in zip(spec.levels, level_outputs):
        if wire:
            q = model.wire_map[wire]
            reduced = reduced + BooleanPoly.monomial(model.num_qubits, (q,), energy)
        else:
            reduced = reduced + BooleanPoly.constant(model.num_qubits, energy)
    fresh = tuple(FreshQubit(q, f"indicator wire {w}",
                             model.roles[q])
                  for w, q in model.wire_map.items() if w not in inputs)
    fresh += tuple(FreshQubit(q, "xor mediator", "mediator")
                   for q, r in model.roles.items() if r == "mediator")
    return ReductionTrace(original=f"levels {[str(e) for e, _ in spec.levels]}",
                          reduced=reduced, fresh=fresh, gap=delta,
                          logical=tuple(range(n)))
