from pathlib import Path

import pytest

from spinlogic.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAIL, main

NETLIST = "input a\ninput b\ngate OR a b -> c\ngate AND c !a -> d\noutput d\n"


@pytest.fixture
def netlist_file(tmp_path):
    p = tmp_path / "net.txt"
    p.write_text(NETLIST)
    return p


@pytest.fixture
def model_file(tmp_path, netlist_file):
    out = tmp_path / "model.txt"
    assert main(["compile", str(netlist_file), "-o", str(out)]) == EXIT_OK
    return out


def test_compile_writes_model(netlist_file, tmp_path, capsys):
    out = tmp_path / "m.txt"
    rc = main(["compile", str(netlist_file), "--verify", "-o", str(out)])
    assert rc == EXIT_OK
    text = out.read_text()
    assert text.startswith("num_qubits 4")
    assert "wire d 3" in text
    captured = capsys.readouterr().out
    assert "verify execution_consistent yes" in captured


def test_compile_klocal_and_convention(netlist_file, capsys):
    assert main(["compile", str(netlist_file), "--mode", "klocal"]) == EXIT_OK
    assert "form boolean" in capsys.readouterr().out
    assert main(["compile", str(netlist_file), "--convention", "1-2x"]) == EXIT_OK
    assert "convention 1-2x" in capsys.readouterr().out


def test_compile_missing_file_is_usage_error(tmp_path, capsys):
    rc = main(["compile", str(tmp_path / "absent.txt")])
    assert rc == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_verify_subcommand(capsys):
    assert main(["verify", "--gadget", "NAND"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "pass yes" in out and "gap 1" in out
    assert main(["verify", "--gadget", "BOGUS"]) == EXIT_USAGE


def test_synthesize_subcommand(tmp_path, capsys):
    rel = tmp_path / "xor.txt"
    rel.write_text("0 1 1 0\n")
    assert main(["synthesize", "--relation", str(rel), "--mediators", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "feasible yes" in out and "penalty" in out
    # infeasible without mediators: exit 1 unless expected
    assert main(["synthesize", "--relation", str(rel)]) == EXIT_VERIFY_FAIL
    capsys.readouterr()
    assert main(["synthesize", "--relation", str(rel),
                 "--expect-infeasible"]) == EXIT_OK
    assert "feasible no" in capsys.readouterr().out


def test_reduce_poly_subcommand(tmp_path, capsys):
    pf = tmp_path / "p.txt"
    pf.write_text("2*x0*x1*x2 + 1*x0\n")
    assert main(["reduce", str(pf)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "fresh_qubits 1" in out


def test_reduce_sigma_subcommand(capsys):
    assert main(["reduce", "--sigma", "3", "--coupling", "1",
                 "--delta", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "convention 1-2x" in out
    assert main(["reduce", "--sigma", "3"]) == EXIT_USAGE


def test_spectrum_subcommand(model_file, capsys):
    assert main(["spectrum", str(model_file), "--logical", "0,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ground_energy 0" in out
    assert out.count("restricted") == 4
    assert "energy 0000" in out


def test_spectrum_csv_export(model_file, tmp_path):
    csv = tmp_path / "e.csv"
    assert main(["spectrum", str(model_file), "--csv", str(csv)]) == EXIT_OK
    lines = csv.read_text().splitlines()
    assert lines[0] == "assignment,energy"
    assert len(lines) == 1 + 16


def test_kmap_subcommand(tmp_path, capsys):
    tv = tmp_path / "tv.txt"
    tv.write_text("0,1,1,0\n")
    assert main(["kmap", str(tv)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "sop " in out and "\\" in out


def test_solve_subcommand(model_file, capsys):
    assert main(["solve", str(model_file)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "readout a=" in out


def test_usage_errors(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
    capsys.readouterr()
    assert main(["--help"]) == EXIT_OK
