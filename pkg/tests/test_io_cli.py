from __future__ import annotations

from pathlib import Path

import pytest

from latdiff.cli import main, table_rows
from latdiff.io import FileFormatError, load_lattice, load_operator, parse_lattice_text, parse_operator_text
from latdiff.lattice import NotALatticeError, build_from_covers, build_quasi_antichain, same_tables

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# ----------------------------------------------------------------- file formats

def test_lattice_file_with_comments_and_labels():
    text = "# header\n\n5   # size\n0 1\n0 2\n0 3\n1 4\n2 4\n3 4\nlabel 1 b1\n"
    spec = parse_lattice_text(text)
    assert spec.size == 5 and len(spec.covers) == 6
    assert spec.labels[1] == "b1" and spec.labels[0] == "0"
    assert same_tables(build_from_covers(spec), build_quasi_antichain(3))


def test_load_lattice_names_after_file():
    l = load_lattice(DATA / "m3.lat")
    assert l.name == "m3" and l.labels[1] == "b1"


@pytest.mark.parametrize("text,lineno", [
    ("x\n", 1),
    ("3\n0 1\n1 two\n", 3),
    ("3\n# ok\n0 5\n", 3),
    ("3\n0 1 2\n", 2),
    ("3\nlabel 7 z\n", 2),
])
def test_lattice_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(FileFormatError) as info:
        parse_lattice_text(text, "f.lat")
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"f.lat:{lineno}:")


def test_empty_lattice_file():
    with pytest.raises(FileFormatError):
        parse_lattice_text("# nothing\n")


def test_operator_file():
    assert parse_operator_text("# phi\n1 0 3 2\n", 4) == (1, 0, 3, 2)
    with pytest.raises(FileFormatError):
        parse_operator_text("1 0 3\n", 4)
    with pytest.raises(FileFormatError):
        parse_operator_text("1 0\n3 2\n")
    with pytest.raises(FileFormatError):
        parse_operator_text("1 x 3 2\n")


def test_operator_out_of_range(tmp_path):
    p = tmp_path / "bad.op"
    p.write_text("0 1 9 2\n")
    with pytest.raises(FileFormatError):
        load_operator(p, load_lattice(DATA / "m2.lat"))


def test_not_a_lattice_names_pair(tmp_path):
    p = tmp_path / "bowtie.lat"
    p.write_text("6\n0 1\n0 2\n1 3\n1 4\n2 3\n2 4\n3 5\n4 5\n")
    with pytest.raises(NotALatticeError) as info:
        load_lattice(p)
    assert info.value.pair is not None


# ----------------------------------------------------------------- lattice-check / op-check

def test_lattice_check_m3(capsys):
    code, out, _ = run(capsys, "lattice-check", DATA / "m3.lat")
    assert code == 0
    assert out.startswith("PASS n=5 bottom=0 top=4 distributive=false")


def test_lattice_check_chain(capsys):
    code, out, _ = run(capsys, "lattice-check", DATA / "l4.lat")
    assert code == 0 and "distributive=true" in out


def test_lattice_check_no_top(capsys):
    code, out, _ = run(capsys, "lattice-check", DATA / "two_tops.lat")
    assert code == 1 and out.startswith("FAIL no-top")


def test_lattice_check_parse_error(capsys, tmp_path):
    p = tmp_path / "broken.lat"
    p.write_text("3\n0 1\nnonsense here\n")
    code, _, err = run(capsys, "lattice-check", p)
    assert code == 2 and ":3:" in err


def test_op_check_theta_rejected(capsys):
    code, out, _ = run(capsys, "op-check", DATA / "m2.lat", DATA / "theta.op")
    assert code == 1 and "NOT a difference operator" in out


def test_op_check_phi_accepted(capsys):
    code, out, _ = run(capsys, "op-check", DATA / "m2.lat", DATA / "phi_a.op")
    assert code == 0 and "weight 1: difference operator" in out
    assert "decreasing=false" in out


def test_op_check_identity_derivation(capsys):
    code, out, _ = run(capsys, "op-check", DATA / "l3.lat", DATA / "identity3.op", "--weight", "0")
    assert code == 0 and "weight 0: derivation" in out and "isotone=true" in out


def test_op_check_size_mismatch(capsys):
    code, _, err = run(capsys, "op-check", DATA / "m3.lat", DATA / "theta.op")
    assert code == 2 and "entries" in err


# ----------------------------------------------------------------- enumerate / classify

@pytest.mark.parametrize("argv,count", [
    (("--family", "chain", "--n", "3"), 17),
    (("--family", "quasi", "--n", "4"), 36),
    (("--family", "chain", "--n", "4", "--fix", "3=3"), 14),
    (("--family", "chain", "--n", "4", "--fix", "3=1", "--at-least", "2=2"), 14),
    (("--family", "quasi", "--n", "4", "--weight", "-1"), 9),
    (("--lattice", DATA / "n5.lat", "--weight", "0"), None),
])
def test_enumerate_counts(capsys, argv, count):
    code, out, _ = run(capsys, "enumerate", *argv)
    assert code == 0
    if count is not None:
        assert out.strip().splitlines()[-1] == str(count)


def test_enumerate_budget_refusal(capsys, monkeypatch):
    monkeypatch.delenv("LATDIFF_BUDGET", raising=False)
    code, _, err = run(capsys, "enumerate", "--family", "chain", "--n", "9")
    assert code == 3 and "8" in err


def test_enumerate_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("LATDIFF_BUDGET", "3")
    code, _, _ = run(capsys, "enumerate", "--family", "chain", "--n", "4")
    assert code == 3
    code, out, _ = run(capsys, "enumerate", "--family", "chain", "--n", "4", "--force")
    assert code == 0 and out.strip() == "73"


@pytest.mark.parametrize("argv", [
    ("--family", "quasi", "--n", "3"),
    ("--family", "chain", "--n", "3", "--fix", "5=0"),
    ("--family", "chain"),
])
def test_enumerate_input_errors(capsys, argv):
    code, _, _ = run(capsys, "enumerate", *argv)
    assert code == 2


def test_bad_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--weight", "3"])
    assert info.value.code == 2


def test_emit_round_trip_through_op_check(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--lattice", DATA / "m3.lat", "--emit")
    lines = out.strip().splitlines()
    ops, total = lines[:-1], int(lines[-1])
    assert code == 0 and len(ops) == total
    assert ops == sorted(ops, key=lambda s: tuple(map(int, s.split())))
    for i, line in enumerate(ops):
        p = tmp_path / f"{i}.op"
        p.write_text(line + "\n")
        code, verdict, _ = run(capsys, "op-check", DATA / "m3.lat", p)
        assert code == 0 and "weight 1: difference operator" in verdict


def test_emit_independent_of_workers(capsys):
    _, serial, _ = run(capsys, "enumerate", "--family", "quasi", "--n", "5", "--emit")
    _, parallel, _ = run(capsys, "enumerate", "--family", "quasi", "--n", "5", "--emit", "--workers", "3")
    assert serial == parallel


def test_classify_m2(capsys):
    code, out, _ = run(capsys, "classify", "--family", "quasi", "--n", "4")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "operator\tfamilies" and rows[-1] == "# total\t36"
    tagged = dict(r.split("\t") for r in rows[1:-1])
    assert "Phi(b1)" in tagged["1 0 3 2"]
    assert all(v != "-" for v in tagged.values())


# ----------------------------------------------------------------- table

def test_chain_table(capsys):
    code, out, _ = run(capsys, "table", "chains", "--max-n", "10")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "n\tformula_count" and lines[-1] == "10\t537877"


def test_quasi_table(capsys):
    code, out, _ = run(capsys, "table", "quasi", "--max-n", "11")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "n\tformula_count\tcubic_term\tbinomial_sum"
    assert lines[-1] == "11\t3791\t976\t2815"


def test_quasi_table_brute_n4_row(capsys):
    code, out, _ = run(capsys, "table", "quasi", "--max-n", "4", "--brute")
    row = out.strip().splitlines()[-1].split("\t")
    assert code == 0 and row[0] == "4" and row[1] == "—" and row[-2] == "36" and row[-1] == "n/a(formula n≥5)"


def test_table_brute_refused_beyond_budget(capsys, monkeypatch):
    monkeypatch.delenv("LATDIFF_BUDGET", raising=False)
    code, _, _ = run(capsys, "table", "chains", "--max-n", "9", "--brute")
    assert code == 3


def test_table_is_byte_stable_across_workers(capsys):
    _, a, _ = run(capsys, "table", "quasi", "--max-n", "7", "--brute")
    _, b, _ = run(capsys, "table", "quasi", "--max-n", "7", "--brute", "--workers", "2")
    _, c, _ = run(capsys, "table", "quasi", "--max-n", "7", "--brute")
    assert a == b == c
    assert all(line.split("\t")[-1] in ("yes", "n/a(formula n≥5)") for line in a.strip().splitlines()[1:])


def test_table_rows_brute_match():
    rows = table_rows("chains", 6, brute=True)
    assert [r["brute"] for r in rows] == [1, 4, 17, 73, 316, 1379]


def test_table_figure(capsys, tmp_path):
    fig = tmp_path / "figs" / "chains.png"
    code, out, _ = run(capsys, "table", "chains", "--max-n", "6", "--brute", "--figure", fig)
    assert code == 0 and fig.exists() and fig.stat().st_size > 1000
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert out.strip().splitlines()[-1].startswith("6\t1379\t1379")


# ----------------------------------------------------------------- verify

@pytest.mark.parametrize("suite", ["counterexamples", "boundary", "quasi-classification", "weight-equivalence"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite)
    lines = out.strip().splitlines()
    assert code == 0
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("# ")


def test_verify_counterexample_tally(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "counterexamples")
    lines = out.strip().splitlines()[:-1]
    assert sum(line.endswith("rejected") for line in lines) == 7
    assert sum(line.endswith("accepted") for line in lines) == 3
