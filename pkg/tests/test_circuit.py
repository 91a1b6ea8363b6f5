import random
from fractions import Fraction as F
from itertools import product

import pytest

from spinlogic.circuit import (Circuit, Gate, K_LOCAL, NetlistError, clamp,
                               compile_circuit, format_model, format_netlist,
                               gap_check, parse_model, parse_netlist)
from spinlogic.poly import BooleanPoly, Convention, SpinModel
from spinlogic.spectrum import enumerate_spectrum, index_to_bits

EXAMPLE = """\
input a
input b
gate AND a b -> c
gate XOR c !b -> d   # negated second argument
output d
clamp d 1
"""


def consistent_rows(circ, model):
    """Every (assignment extended by execution) as full qubit rows."""
    rows = set()
    for bits in product((0, 1), repeat=len(circ.inputs)):
        values = circ.evaluate(bits)
        row = [0] * model.num_qubits
        for w, q in model.wire_map.items():
            row[q] = values[w]
        rows.add(tuple(row))
    return rows


def ground_rows(model, h=None):
    rep = enumerate_spectrum(h if h is not None else model.poly)
    return {index_to_bits(i, model.num_qubits) for i in rep.ground_space}


def project(rows, qubits):
    return {tuple(r[q] for q in qubits) for r in rows}


def test_parse_format_roundtrip():
    circ = parse_netlist(EXAMPLE)
    assert circ.inputs == ("a", "b")
    assert circ.gates[1] == Gate("XOR", ("c", "b"), (False, True), "d")
    assert circ.clamps == (("d", 1),)
    again = parse_netlist(format_netlist(circ))
    assert again == circ


def test_parse_errors_carry_line_numbers():
    with pytest.raises(NetlistError, match="line 2"):
        parse_netlist("input a\ngate AND a b c\n")
    with pytest.raises(NetlistError, match="line 1"):
        parse_netlist("widget a\n")
    with pytest.raises(NetlistError):
        parse_netlist("")


def test_circuit_structure_validation():
    with pytest.raises(NetlistError, match="undefined wire"):
        Circuit(("a",), (Gate("AND", ("a", "b"), (False, False), "c"),))
    with pytest.raises(NetlistError, match="written twice"):
        Circuit(("a",), (Gate("NOT", ("a",), (False,), "a"),))
    with pytest.raises(NetlistError, match="duplicate input"):
        Circuit(("a", "a"), ())
    with pytest.raises(NetlistError, match="twice"):
        Circuit(("a",), (Gate("AND", ("a", "a"), (False, False), "b"),))


def test_evaluate_executes_all_ops():
    circ = parse_netlist(
        "input a\ninput b\n"
        "gate AND a b -> c1\ngate OR a b -> c2\ngate NAND a b -> c3\n"
        "gate NOR a b -> c4\ngate XOR a b -> c5\ngate EQV a b -> c6\n"
        "gate NOT a -> c7\ngate COPY b -> c8\n")
    for a, b in product((0, 1), repeat=2):
        v = circ.evaluate((a, b))
        assert v["c1"] == (a & b) and v["c2"] == (a | b)
        assert v["c3"] == 1 - (a & b) and v["c4"] == 1 - (a | b)
        assert v["c5"] == a ^ b and v["c6"] == 1 - (a ^ b)
        assert v["c7"] == 1 - a and v["c8"] == b


def test_ground_space_equals_consistent_executions():
    circ = parse_netlist("input a\ninput b\ngate AND a b -> c\n"
                         "gate XOR c !b -> d\noutput d\n")
    model = compile_circuit(circ)
    # projected onto the named wires (the mediator qubit is free to settle),
    # the ground space is exactly the set of consistent executions
    wires = [model.wire_map[w] for w in ("a", "b", "c", "d")]
    assert project(ground_rows(model), wires) == \
        project(consistent_rows(circ, model), wires)
    rep = enumerate_spectrum(model.poly)
    assert rep.ground_energy == 0


def test_klocal_mode_has_no_mediators():
    circ = parse_netlist("input a\ninput b\ngate XOR a b -> c\n")
    model = compile_circuit(circ, mode=K_LOCAL)
    assert model.num_qubits == 3  # no mediator qubit
    assert model.poly.degree() == 3
    assert ground_rows(model) == consistent_rows(circ, model)


def test_two_local_output_degree_bound():
    circ = parse_netlist("input a\ninput b\ninput c\n"
                         "gate OR a b -> d\ngate EQV d c -> e\n")
    model = compile_circuit(circ)
    assert model.poly.degree() <= 2


def test_random_circuits_agree_across_modes():
    rng = random.Random(7)
    ops = ["AND", "OR", "NAND", "NOR", "XOR", "EQV", "NOT", "COPY"]
    for _ in range(15):
        n_in = rng.randint(1, 3)
        inputs = tuple(f"i{k}" for k in range(n_in))
        wires = list(inputs)
        gates = []
        for g in range(rng.randint(1, 4)):
            op = rng.choice(ops)
            arity = 1 if op in ("NOT", "COPY") else 2
            if arity > len(wires):
                op, arity = "NOT", 1
            args = tuple(rng.sample(wires, arity))
            pols = tuple(rng.random() < 0.3 for _ in range(arity))
            out = f"w{g}"
            gates.append(Gate(op, args, pols, out))
            wires.append(out)
        circ = Circuit(inputs, tuple(gates))
        for mode in ("2local", "klocal"):
            model = compile_circuit(circ, mode=mode)
            wire_qubits = [model.wire_map[w] for w in circ.wires]
            assert project(ground_rows(model), wire_qubits) == \
                project(consistent_rows(circ, model), wire_qubits), (mode, circ)


def test_clamps_select_matching_executions():
    circ = parse_netlist("input a\ninput b\ngate OR a b -> c\noutput c\nclamp c 0\n")
    model = compile_circuit(circ)
    assert model.delta == 3  # 2*1 clamp + 1
    rows = ground_rows(model)
    assert rows == {(0, 0, 0)}
    report = gap_check(model)
    assert report.hypothesis_ok
    assert report.norm_exact == 1


def test_clamp_weight_and_errors():
    circ = parse_netlist("input a\ngate NOT a -> b\n")
    model = compile_circuit(circ, delta=5)
    model = clamp(model, "b", 1, weight=F(3, 2))
    assert model.clamp_norm_bound == F(3, 2)
    with pytest.raises(NetlistError):
        clamp(model, "nope", 1)
    with pytest.raises(NetlistError):
        clamp(model, "b", 2)


def test_compile_rejects_bad_arguments():
    circ = parse_netlist("input a\ngate NOT a -> b\n")
    with pytest.raises(ValueError):
        compile_circuit(circ, delta=0)
    with pytest.raises(ValueError):
        compile_circuit(circ, mode="4local")


def test_model_file_roundtrip_two_local():
    circ = parse_netlist("input a\ninput b\ngate XOR a b -> c\noutput c\n")
    model = compile_circuit(circ)
    for conv in Convention:
        text = format_model(model, conv)
        h, wire_map, roles = parse_model(text)
        assert isinstance(h, SpinModel)
        assert wire_map == model.wire_map
        assert roles == model.roles
        rep = enumerate_spectrum(h)
        assert {index_to_bits(i, model.num_qubits) for i in rep.ground_space} \
            == ground_rows(model)


def test_model_file_roundtrip_klocal():
    circ = parse_netlist("input a\ninput b\ngate AND a b -> c\n")
    model = compile_circuit(circ, mode=K_LOCAL)
    h, wire_map, roles = parse_model(format_model(model))
    assert isinstance(h, BooleanPoly)
    assert h == model.poly
