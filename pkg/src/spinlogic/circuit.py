"""Lower gate-level netlists onto penalty Hamiltonians.

A circuit is a DAG of named wires.  Compilation sums one instantiated
gadget per gate; the ground space of the sum spans exactly the consistent
executions of the circuit.  Clamps are 1-local perturbations that pin a
wire's value; the projection-lemma hypothesis (penalty gap exceeding twice
the clamp norm) is tracked and checkable.

Qubit indices are allocated deterministically: inputs in netlist order,
then gate outputs in gate order, then mediators in gate order.

Netlist text format, line oriented::

    input a
    input b
    gate AND a b -> c
    gate XOR c !b -> d      # '!' negates that argument
    output d
    clamp d 1
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from . import gadgets
from .poly import BooleanPoly, Convention, Rational, SpinModel, SpinPoly, truth_vector_to_poly

TWO_LOCAL = "2local"
K_LOCAL = "klocal"

ROLE_INPUT = "input"
ROLE_OUTPUT = "output"
ROLE_INTERMEDIATE = "intermediate"
ROLE_MEDIATOR = "mediator"

UNARY_OPS = {"NOT", "COPY"}
BINARY_OPS = {"AND", "OR", "NAND", "NOR", "XOR", "EQV"}

# gate op -> catalogue name for the binary gadgets
_BINARY_GADGET = {op: op for op in BINARY_OPS}


class NetlistError(ValueError):
    """Malformed netlist text or inconsistent circuit structure."""


@dataclass(frozen=True)
class Gate:
    op: str
    args: tuple[str, ...]
    polarities: tuple[bool, ...]  # True = argument negated
    out: str


@dataclass(frozen=True)
class Circuit:
    inputs: tuple[str, ...]
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...] = ()
    clamps: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        defined = list(self.inputs)
        seen = set(defined)
        if len(seen) != len(defined):
            raise NetlistError("duplicate input wire")
        for g in self.gates:
            expected = 1 if g.op in UNARY_OPS else 2
            if g.op not in UNARY_OPS | BINARY_OPS:
                raise NetlistError(f"unknown gate op {g.op!r}")
            if len(g.args) != expected or len(g.polarities) != expected:
                raise NetlistError(f"gate {g.op} expects {expected} argument(s)")
            for a in g.args:
                if a not in seen:
                    raise NetlistError(f"gate {g.op} reads undefined wire {a!r}")
            if len(set(g.args)) != len(g.args):
                raise NetlistError(
                    f"gate {g.op} reads wire {g.args[0]!r} twice; "
                    "route one argument through an explicit COPY gate")
            if g.out in seen:
                raise NetlistError(f"wire {g.out!r} written twice")
            seen.add(g.out)
            defined.append(g.out)
        for w in self.outputs:
            if w not in seen:
                raise NetlistError(f"output wire {w!r} undefined")
        for w, v in self.clamps:
            if w not in seen:
                raise NetlistError(f"clamped wire {w!r} undefined")
            if v not in (0, 1):
                raise NetlistError(f"clamp value must be 0 or 1, got {v}")

    @property
    def wires(self) -> tuple[str, ...]:
        return self.inputs + tuple(g.out for g in self.gates)

    def evaluate(self, input_bits: Sequence[int]) -> dict[str, int]:
        """Execute the circuit on the given input assignment."""
        if len(input_bits) != len(self.inputs):
            raise NetlistError("wrong number of input bits")
        values = dict(zip(self.inputs, (int(b) for b in input_bits)))
        for g in self.gates:
            args = [values[a] ^ int(p) for a, p in zip(g.args, g.polarities)]
            values[g.out] = _apply_op(g.op, args)
        return values


def _apply_op(op: str, args: list[int]) -> int:
    match op:
        case "NOT":
            return args[0] ^ 1
        case "COPY":
            return args[0]
        case "AND":
            return args[0] & args[1]
        case "OR":
            return args[0] | args[1]
        case "NAND":
            return (args[0] & args[1]) ^ 1
        case "NOR":
            return (args[0] | args[1]) ^ 1
        case "XOR":
            return args[0] ^ args[1]
        case "EQV":
            return (args[0] ^ args[1]) ^ 1
    raise NetlistError(f"unknown gate op {op!r}")


@dataclass(frozen=True)
class CompiledModel:
    """Penalty Hamiltonian for a circuit plus any clamp perturbations."""

    prop: BooleanPoly          # H_prop: sum of gadget penalties, clamp-free
    h_in: BooleanPoly          # H_in: sum of clamp projectors
    delta: Fraction            # penalty scale (spectral gap of each gadget)
    wire_map: dict[str, int]
    roles: dict[int, str]
    clamps: tuple[tuple[str, int, Fraction], ...] = ()
    mode: str = TWO_LOCAL

    @property
    def num_qubits(self) -> int:
        return self.prop.num_vars

    @property
    def poly(self) -> BooleanPoly:
        """The full Hamiltonian H_prop + H_in in Boolean form."""
        return self.prop + self.h_in

    def spin(self, convention: Convention = Convention.S_EQ_2X_MINUS_1) -> SpinModel:
        spin_poly = self.poly.to_spin(convention)
        return SpinModel.from_spin_poly(spin_poly)

    @property
    def clamp_norm_bound(self) -> Fraction:
        """Upper bound on ||H_in||: the sum of clamp weights."""
        return sum((w for _, _, w in self.clamps), Fraction(0))


def _klocal_penalty(gate: Gate, circuit_vars: dict[str, int], n: int) -> BooleanPoly:
    """Violation indicator of the gate relation, degree up to arity+1."""
    slots = list(gate.args) + [gate.out]
    k = len(slots)
    tv = []
    for idx in range(1 << k):
        bits = [(idx >> (k - 1 - i)) & 1 for i in range(k)]
        args = [b ^ int(p) for b, p in zip(bits, gate.polarities)]
        tv.append(0 if _apply_op(gate.op, args) == bits[-1] else 1)
    local = truth_vector_to_poly(tv)
    return local.relabel({i: circuit_vars[w] for i, w in enumerate(slots)}, n)


def compile_circuit(circuit: Circuit, delta: Rational | None = None,
                    mode: str = TWO_LOCAL) -> CompiledModel:
    """Lower a circuit to a penalty Hamiltonian with qubit roles.

    With clamps present and no explicit delta, the penalty scale defaults
    to 2*(number of clamps) + 1 so the projection-lemma hypothesis holds
    with margin.
    """
    if mode not in (TWO_LOCAL, K_LOCAL):
        raise ValueError(f"unknown mode {mode!r}")
    if delta is None:
        delta = Fraction(2 * len(circuit.clamps) + 1)
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")

    wire_map: dict[str, int] = {}
    for w in circuit.inputs:
        wire_map[w] = len(wire_map)
    for g in circuit.gates:
        wire_map[g.out] = len(wire_map)
    mediators: list[tuple[int, Gate]] = []
    if mode == TWO_LOCAL:
        for g in circuit.gates:
            if g.op in ("XOR", "EQV"):
                mediators.append((len(wire_map) + len(mediators), g))
    n = len(wire_map) + len(mediators)

    roles = {wire_map[w]: ROLE_INPUT for w in circuit.inputs}
    output_wires = set(circuit.outputs)
    for g in circuit.gates:
        roles[wire_map[g.out]] = ROLE_OUTPUT if g.out in output_wires else ROLE_INTERMEDIATE
    for q, _ in mediators:
        roles[q] = ROLE_MEDIATOR

    prop = BooleanPoly.zero(n)
    mediator_iter = iter(mediators)
    for g in circuit.gates:
        if mode == K_LOCAL:
            prop = prop + _klocal_penalty(g, wire_map, n) * delta
            continue
        if g.op in UNARY_OPS:
            base = gadgets.lookup("COPY_X1" if g.op == "COPY" else "NOT_X1",
                                  negate_x1=g.polarities[0])
            slot_map = {0: wire_map[g.args[0]], 1: _spare_slot(wire_map, g), 2: wire_map[g.out]}
            prop = prop + gadgets.instantiate(base, slot_map, n, scale=delta)
        else:
            base = gadgets.lookup(_BINARY_GADGET[g.op],
                                  negate_x1=g.polarities[0],
                                  negate_x2=g.polarities[1])
            slot_map = {0: wire_map[g.args[0]], 1: wire_map[g.args[1]],
                        2: wire_map[g.out]}
            if g.op in ("XOR", "EQV"):
                q, owner = next(mediator_iter)
                assert owner is g
                slot_map[3] = q
            prop = prop + gadgets.instantiate(base, slot_map, n, scale=delta)

    model = CompiledModel(prop=prop, h_in=BooleanPoly.zero(n), delta=delta,
                          wire_map=wire_map, roles=roles, mode=mode)
    for w, v in circuit.clamps:
        model = clamp(model, w, v)
    return model


def _spare_slot(wire_map: dict[str, int], gate: Gate) -> int:
    """A slot index for the unused x2 of a unary coupler gadget.

    The coupler penalty does not mention x2, so any distinct index works;
    instantiate() just needs an injective map.
    """
    used = {wire_map[gate.args[0]], wire_map[gate.out]}
    return next(i for i in range(len(wire_map) + 2) if i not in used)


def clamp(model: CompiledModel, wire: str, value: int,
          weight: Rational = 1) -> CompiledModel:
    """Add a 1-local projector penalizing wire != value."""
    if wire not in model.wire_map:
        raise NetlistError(f"unknown wire {wire!r}")
    if value not in (0, 1):
        raise NetlistError(f"clamp value must be 0 or 1, got {value}")
    weight = Fraction(weight)
    q = model.wire_map[wire]
    x = BooleanPoly.variable(model.num_qubits, q)
    term = (1 - x) * weight if value == 1 else x * weight
    return replace(model, h_in=model.h_in + term,
                   clamps=model.clamps + ((wire, value, weight),))


@dataclass(frozen=True)
class GapCheckReport:
    delta: Fraction
    norm_bound: Fraction
    norm_exact: Fraction | None  # by enumeration, when within the cap
    hypothesis_ok: bool


def gap_check(model: CompiledModel, cap: int = 20) -> GapCheckReport:
    """Check the Lemma hypothesis delta > 2*||H_in||."""
    from .spectrum import enumerate_spectrum
    bound = model.clamp_norm_bound
    exact = None
    if model.num_qubits <= cap:
        rep = enumerate_spectrum(model.h_in)
        exact = max(abs(rep.energy(i)) for i in range(rep.size))
    norm = exact if exact is not None else bound
    return GapCheckReport(delta=model.delta, norm_bound=bound,
                          norm_exact=exact,
                          hypothesis_ok=model.delta > 2 * norm)


# -- netlist and model file formats -------------------------------------------

def parse_netlist(text: str) -> Circuit:
    inputs: list[str] = []
    gates: list[Gate] = []
    outputs: list[str] = []
    clamps: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            match parts:
                case ["input", name]:
                    inputs.append(name)
                case ["gate", op, *rest]:
                    if len(rest) < 3 or rest[-2] != "->":
                        raise NetlistError("expected 'gate OP args... -> out'")
                    raw_args, out = rest[:-2], rest[-1]
                    pols = tuple(a.startswith("!") for a in raw_args)
                    args = tuple(a.lstrip("!") for a in raw_args)
                    gates.append(Gate(op.upper(), args, pols, out))
                case ["output", name]:
                    outputs.append(name)
                case ["clamp", name, value]:
                    clamps.append((name, int(value)))
                case _:
                    raise NetlistError(f"unrecognized directive {parts[0]!r}")
        except (NetlistError, ValueError) as exc:
            raise NetlistError(f"line {lineno}: {exc}") from None
    if not inputs and not gates:
        raise NetlistError("empty netlist")
    return Circuit(tuple(inputs), tuple(gates), tuple(outputs), tuple(clamps))


def format_netlist(circuit: Circuit) -> str:
    lines = [f"input {w}" for w in circuit.inputs]
    for g in circuit.gates:
        args = " ".join(("!" if p else "") + a for a, p in zip(g.args, g.polarities))
        lines.append(f"gate {g.op} {args} -> {g.out}")
    lines += [f"output {w}" for w in circuit.outputs]
    lines += [f"clamp {w} {v}" for w, v in circuit.clamps]
    return "\n".join(lines) + "\n"


def format_model(model: CompiledModel,
                 convention: Convention = Convention.S_EQ_2X_MINUS_1) -> str:
    """Ising-model file: header, h/J lines, roles, wire names; exact rationals."""
    if model.mode == K_LOCAL:
        lines = [f"num_qubits {model.num_qubits}", "form boolean",
                 f"poly {model.poly}"]
    else:
        spin = model.spin(convention)
        lines = [f"num_qubits {model.num_qubits}",
                 f"convention {convention.value}",
                 f"offset {spin.offset}"]
        lines += [f"h {i} {v}" for i, v in spin.linear.items()]
        lines += [f"J {i} {j} {v}" for (i, j), v in spin.quadratic.items()]
    for q in range(model.num_qubits):
        lines.append(f"role {q} {model.roles[q]}")
    for w, q in model.wire_map.items():
        lines.append(f"wire {w} {q}")
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> tuple[BooleanPoly | SpinModel, dict[str, int], dict[int, str]]:
    """Read a model file back; returns (hamiltonian, wire_map, roles)."""
    num_qubits = None
    convention = None
    offset = Fraction(0)
    linear: dict[int, Fraction] = {}
    quadratic: dict[tuple[int, int], Fraction] = {}
    boolean: BooleanPoly | None = None
    wire_map: dict[str, int] = {}
    roles: dict[int, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        fields = rest.split()
        match key:
            case "num_qubits":
                num_qubits = int(rest)
            case "form":
                pass
            case "convention":
                convention = Convention.from_string(rest.strip())
            case "offset":
                offset = Fraction(rest)
            case "h":
                linear[int(fields[0])] = Fraction(fields[1])
            case "J":
                quadratic[(int(fields[0]), int(fields[1]))] = Fraction(fields[2])
            case "poly":
                from .poly import parse_poly
                p = parse_poly(rest, num_vars=num_qubits)
                assert isinstance(p, BooleanPoly)
                boolean = p
            case "role":
                roles[int(fields[0])] = fields[1]
            case "wire":
                wire_map[fields[0]] = int(fields[1])
            case _:
                raise NetlistError(f"unknown model line {key!r}")
    if num_qubits is None:
        raise NetlistError("model file missing num_qubits")
    if boolean is not None:
        return boolean, wire_map, roles
    model = SpinModel(num_qubits, offset, linear, quadratic,
                      convention or Convention.S_EQ_2X_MINUS_1)
    return model, wire_map, roles
