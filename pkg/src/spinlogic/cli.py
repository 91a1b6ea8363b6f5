"""Command-line front end.

Subcommands mirror the library: compile, verify, synthesize, reduce,
spectrum, kmap, solve.  Reports are line-oriented key-value text so they
can gate CI scripts; exit codes are 0 (success), 1 (verification failure),
2 (usage or parse error).  Output is deterministic for fixed input and
flags.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import circuit as circuit_mod
from . import gadgets, kmap, reduction, synthesis
from .poly import BooleanPoly, Convention, SpinModel, parse_poly
from .spectrum import enumerate_spectrum, index_to_bits, restrict

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2

DEFAULT_CAP = 24


def _fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _read_truth_vector(path: str) -> list[int]:
    text = Path(path).read_text()
    tokens = text.replace(",", " ").split()
    return [int(t) for t in tokens]


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compile(args) -> int:
    try:
        netlist = Path(args.netlist).read_text()
        circ = circuit_mod.parse_netlist(netlist)
        model = circuit_mod.compile_circuit(
            circ, Fraction(args.delta) if args.delta else None, args.mode)
    except (OSError, circuit_mod.NetlistError, ValueError) as exc:
        return _fail(str(exc))
    convention = Convention.from_string(args.convention)
    text = circuit_mod.format_model(model, convention)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.verify:
        if model.num_qubits > args.cap:
            return _fail(f"{model.num_qubits} qubits exceeds --cap {args.cap}")
        report = enumerate_spectrum(model.poly, args.cap)
        ok = True
        for idx in report.ground_space:
            bits = index_to_bits(idx, model.num_qubits)
            inputs = [bits[model.wire_map[w]] for w in circ.inputs]
            values = circ.evaluate(inputs)
            ok &= all(bits[model.wire_map[w]] == v for w, v in values.items())
        gc = circuit_mod.gap_check(model)
        print(f"verify ground_states {len(report.ground_space)}")
        print(f"verify execution_consistent {'yes' if ok else 'no'}")
        print(f"verify gap_hypothesis {'ok' if gc.hypothesis_ok else 'violated'}")
        if not ok:
            return EXIT_VERIFY_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = gadgets.lookup(args.gadget)
    except KeyError as exc:
        return _fail(str(exc))
    report = gadgets.verify_gadget(g)
    lines = [f"gadget {g.name}",
             f"pass {'yes' if report.passed else 'no'}",
             f"ground_energy {report.ground_energy}",
             f"gap {report.achieved_gap}"]
    lines += [f"ground {''.join(map(str, bits))}" for bits in report.ground_space]
    lines += [f"failure {f}" for f in report.failures]
    _emit(lines, args.output)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def cmd_synthesize(args) -> int:
    try:
        tv = _read_truth_vector(args.relation)
        result = synthesis.synthesize_function(tv, args.mediators, Fraction(args.gap))
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    lines = [f"feasible {'yes' if result.feasible else 'no'}",
             f"mediators {args.mediators}",
             f"branches {len(result.branches)}"]
    if result.feasible:
        assert result.gadget is not None and result.verification is not None
        if args.format == "spin":
            spin = result.gadget.penalty.to_spin(Convention.S_EQ_2X_MINUS_1)
            lines.append(f"penalty {spin}")
        else:
            lines.append(f"penalty {result.gadget.penalty}")
        lines.append(f"gap {result.verification.achieved_gap}")
    else:
        for br in result.branches:
            pins = ";".join("".join(map(str, c)) for c in br.pinned) or "-"
            lines.append(f"branch {pins} {br.status}")
    _emit(lines, args.output)
    return EXIT_OK if result.feasible or args.expect_infeasible else EXIT_VERIFY_FAIL


def cmd_reduce(args) -> int:
    try:
        if args.sigma:
            if args.delta is None:
                return _fail("--sigma requires --delta")
            trace = reduction.reduce_sigma_product(
                args.sigma, Fraction(args.coupling), Fraction(args.delta),
                args.variant)
        else:
            if not args.poly:
                return _fail("provide a polynomial file or --sigma K")
            p = parse_poly(Path(args.poly).read_text().strip())
            if not isinstance(p, BooleanPoly):
                return _fail("reduce expects a Boolean polynomial (x tokens)")
            trace = reduction.reduce_poly(
                p, Fraction(args.delta) if args.delta else None)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    reduced = trace.reduced
    lines = [f"original {trace.original}",
             f"gap {trace.gap}",
             f"fresh_qubits {len(trace.fresh)}"]
    if isinstance(reduced, SpinModel):
        lines.append(f"num_qubits {reduced.num_vars}")
        lines.append(f"convention {reduced.convention.value}")
        lines.append(f"offset {reduced.offset}")
        lines += [f"h {i} {v}" for i, v in reduced.linear.items()]
        lines += [f"J {i} {j} {v}" for (i, j), v in reduced.quadratic.items()]
    else:
        lines.append(f"num_qubits {reduced.num_vars}")
        lines.append(f"poly {reduced}")
    for f in trace.fresh:
        lines.append(f"fresh {f.index} {f.role} {f.provenance}")
    _emit(lines, args.output)
    return EXIT_OK


def _load_model(path: str):
    text = Path(path).read_text()
    return circuit_mod.parse_model(text)


def cmd_spectrum(args) -> int:
    try:
        h, wire_map, roles = _load_model(args.model)
        report = enumerate_spectrum(h, args.cap)
    except (OSError, ValueError, circuit_mod.NetlistError) as exc:
        return _fail(str(exc))
    n = report.num_vars
    lines = [f"num_qubits {n}",
             f"ground_energy {report.ground_energy}",
             f"gap {report.gap if report.gap is not None else 'degenerate'}"]
    lines += [f"ground {''.join(map(str, index_to_bits(i, n)))}"
              for i in report.ground_space]
    if args.logical:
        logical = [int(t) for t in args.logical.split(",")]
        land = restrict(report, logical)
        for idx, e in enumerate(land.energies):
            bits = "".join(map(str, index_to_bits(idx, len(logical))))
            lines.append(f"restricted {bits} {e}")
    if n <= args.table_cap:
        for idx in range(report.size):
            bits = "".join(map(str, index_to_bits(idx, n)))
            lines.append(f"energy {bits} {report.energy(idx)}")
    if args.csv:
        rows = ["assignment,energy"]
        rows += [f"{''.join(map(str, index_to_bits(i, n)))},{report.energy(i)}"
                 for i in range(report.size)]
        Path(args.csv).write_text("\n".join(rows) + "\n")
    _emit(lines, args.output)
    return EXIT_OK


def cmd_kmap(args) -> int:
    try:
        tv = _read_truth_vector(args.truth_vector)
        grid = kmap.render_kmap(tv)
        cover = kmap.sop_cover(tv)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    sys.stdout.write(grid)
    expr = " | ".join(imp.literals() for imp in cover) if cover else "0"
    print(f"sop {expr}")
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        h, wire_map, roles = _load_model(args.model)
        report = enumerate_spectrum(h, args.cap)
    except (OSError, ValueError, circuit_mod.NetlistError) as exc:
        return _fail(str(exc))
    n = report.num_vars
    lines = [f"ground_energy {report.ground_energy}"]
    inputs = sorted(q for q, r in roles.items() if r == "input")
    names = {q: w for w, q in wire_map.items()}
    for idx in report.ground_space:
        bits = index_to_bits(idx, n)
        lines.append(f"ground {''.join(map(str, bits))}")
        if inputs:
            readout = " ".join(f"{names.get(q, q)}={bits[q]}" for q in inputs)
            lines.append(f"readout {readout}")
    _emit(lines, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlogic",
        description="Compile Boolean logic into 2-local Ising ground spaces "
                    "and verify by exhaustive enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="lower a netlist to an Ising model")
    p.add_argument("netlist")
    p.add_argument("--delta", default=None)
    p.add_argument("--mode", choices=[circuit_mod.TWO_LOCAL, circuit_mod.K_LOCAL],
                   default=circuit_mod.TWO_LOCAL)
    p.add_argument("--convention", choices=["1-2x", "2x-1"], default="2x-1")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("verify", help="verify a catalogued gadget")
    p.add_argument("--gadget", required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("synthesize", help="solve for a penalty gadget")
    p.add_argument("--relation", required=True,
                   help="truth-table file for the output as function of the inputs")
    p.add_argument("--mediators", type=int, default=0)
    p.add_argument("--gap", default="1")
    p.add_argument("--format", choices=["bool", "spin"], default="bool")
    p.add_argument("--expect-infeasible", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("reduce", help="k-local to 2-local reduction")
    p.add_argument("poly", nargs="?", default=None,
                   help="polynomial file in the text format")
    p.add_argument("--sigma", type=int, default=None,
                   help="reduce a k-fold sigma product instead")
    p.add_argument("--coupling", default="1")
    p.add_argument("--delta", default=None)
    p.add_argument("--variant", choices=[reduction.PARITY_CHAIN,
                                         reduction.TWO_MEDIATOR_K3],
                   default=reduction.PARITY_CHAIN)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("spectrum", help="exhaustive spectrum of a model file")
    p.add_argument("model")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--table-cap", type=int, default=12,
                   help="print the full table up to this many qubits")
    p.add_argument("--logical", default=None,
                   help="comma-separated qubit set for the restricted landscape")
    p.add_argument("--csv", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("kmap", help="Karnaugh map and SOP cover of a truth vector")
    p.add_argument("truth_vector")
    p.set_defaults(func=cmd_kmap)

    p = sub.add_parser("solve", help="ground states and logical readout")
    p.add_argument("model")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
