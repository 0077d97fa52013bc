"""Command-line driver.

Exit statuses: 0 success / member / pass, 1 negative verdict, 2 input error,
3 budget refusal.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Iterable, Optional

from . import formulas as F
from . import harness as H
from .enumeration import BudgetExceededError, ConstraintError, CountQuery, enumerate_ops, size_budget
from .io import FileFormatError, load_lattice, load_operator, operator_line
from .lattice import (
    LatticeError, build_chain, build_quasi_antichain, find_forbidden_sublattice, is_distributive,
)
from .operators import PROPERTIES, Weight, property_flags, weight_violation

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CLI_BUDGET = 8
WEIGHT_NAMES = {1: "difference operator", 0: "derivation", -1: "differential operator of weight -1"}


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _err(line: str) -> None:
    sys.stderr.write(line + "\n")


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("=")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'element=value', got {text!r}") from None


def _weight(text: str) -> int:
    if text not in ("0", "1", "-1"):
        raise argparse.ArgumentTypeError("weight must be 0, 1 or -1")
    return int(text)


def _select_lattice(args):
    if args.lattice:
        return load_lattice(args.lattice)
    if args.n is None:
        raise LatticeError("give --n with --family, or --lattice FILE")
    if args.family == "chain":
        return build_chain(args.n)
    if args.n < 4:
        raise LatticeError("quasi-antichains need n >= 4 (n counts all elements)")
    return build_quasi_antichain(args.n - 2)


def _budget(args) -> int:
    return size_budget(CLI_BUDGET)


# ------------------------------------------------------------------ commands

def cmd_lattice_check(args) -> int:
    try:
        l = load_lattice(args.path)
    except FileFormatError as exc:
        _err(f"parse error: {exc}")
        return EXIT_INPUT
    except LatticeError as exc:
        kind = type(exc).__name__.replace("Error", "")
        tag = {"NoTop": "no-top", "NoBottom": "no-bottom", "Cycle": "cycle", "NotALattice": "not-a-lattice"}.get(kind, kind)
        _out(f"FAIL {tag}: {exc}")
        return EXIT_NEGATIVE
    dist = is_distributive(l)
    line = f"PASS n={l.size} bottom={l.bottom} top={l.top} distributive={str(dist).lower()}"
    if not dist:
        hit = find_forbidden_sublattice(l)
        if hit:
            line += f" sublattice={hit[0]}:" + ",".join(map(str, hit[1]))
    _out(line)
    return EXIT_OK


def cmd_op_check(args) -> int:
    try:
        l = load_lattice(args.lattice)
        d = load_operator(args.operator, l)
    except (FileFormatError, LatticeError) as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    weights = [1, 0, -1] if "all" in (args.weight or []) else [int(w) for w in (args.weight or ["1"])]
    member_all = True
    for w in weights:
        bad = weight_violation(l, d, w)
        if bad is None:
            _out(f"weight {w}: {WEIGHT_NAMES[w]}")
        else:
            member_all = False
            _out(f"weight {w}: NOT a {WEIGHT_NAMES[w]} (fails at x={bad[0]}, y={bad[1]})")
    flags = property_flags(l, d)
    _out(" ".join(f"{name}={str(flags[name]).lower()}" for name in PROPERTIES))
    return EXIT_OK if member_all else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    try:
        l = _select_lattice(args)
        q = CountQuery(l, Weight(args.weight), tuple(args.fix or ()), tuple(args.at_least or ()))
    except (FileFormatError, LatticeError, ConstraintError) as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    lines: list[str] = []
    emit = (lambda d: lines.append(operator_line(d))) if args.emit else None
    try:
        rep = enumerate_ops(q, emit, budget=_budget(args), force=args.force, workers=args.workers)
    except BudgetExceededError as exc:
        _err(f"refused: {exc}")
        return EXIT_BUDGET
    for line in lines:
        _out(line)
    _out(str(rep.count))
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        l = _select_lattice(args)
        q = CountQuery(l, Weight(args.weight), tuple(args.fix or ()), tuple(args.at_least or ()))
    except (FileFormatError, LatticeError, ConstraintError) as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    ops: list = []
    try:
        enumerate_ops(q, ops.append, budget=_budget(args), force=args.force, workers=args.workers)
    except BudgetExceededError as exc:
        _err(f"refused: {exc}")
        return EXIT_BUDGET
    _out("operator\tfamilies")
    for d, tags in H.classify(l, ops):
        _out(f"{operator_line(d)}\t{','.join(tags) or '-'}")
    _out(f"# total\t{len(ops)}")
    return EXIT_OK


def table_rows(which: str, max_n: int, brute: bool, force: bool = False, workers: int = 1,
               budget: Optional[int] = None) -> list[dict]:
    """Rows for :func:`cmd_table`; raises :class:`BudgetExceededError` before doing any work."""
    lo = 1 if which == "chains" else 4
    ns = range(lo, max_n + 1)
    limit = size_budget(CLI_BUDGET) if budget is None else budget
    if brute and not force and max_n > limit:
        raise BudgetExceededError(max_n, limit)
    rows = []
    for n in ns:
        row: dict = {"n": n}
        if which == "chains":
            row["formula"] = F.chain_total(n)
        else:
            try:
                row["formula"] = F.quasi_total(n)
                row["cubic"], row["binomial"] = F.cubic_term(n), F.binomial_sum(n)
            except F.FormulaDomainError:
                row["formula"] = row["cubic"] = row["binomial"] = None
        if brute:
            l = build_chain(n) if which == "chains" else build_quasi_antichain(n - 2)
            row["brute"] = enumerate_ops(CountQuery(l), budget=limit, force=force, workers=workers).count
        rows.append(row)
    return rows


def format_table(rows: list[dict], which: str, brute: bool) -> str:
    dash = "—"
    head = ["n", "formula_count"] + (["cubic_term", "binomial_sum"] if which == "quasi" else [])
    if brute:
        head += ["brute_count", "match"]
    out = ["\t".join(head)]
    for r in rows:
        cells = [str(r["n"]), dash if r["formula"] is None else str(r["formula"])]
        if which == "quasi":
            cells += [dash if r["cubic"] is None else str(r["cubic"]),
                      dash if r["binomial"] is None else str(r["binomial"])]
        if brute:
            cells.append(str(r["brute"]))
            if r["formula"] is None:
                cells.append("n/a(formula n≥5)")
            else:
                cells.append("yes" if r["formula"] == r["brute"] else "NO")
        out.append("\t".join(cells))
    return "\n".join(out) + "\n"


def cmd_table(args) -> int:
    lo = 1 if args.which == "chains" else 4
    if args.max_n < lo:
        _err(f"input error: max-n must be >= {lo} for {args.which}")
        return EXIT_INPUT
    try:
        rows = table_rows(args.which, args.max_n, args.brute, args.force, args.workers)
    except BudgetExceededError as exc:
        _err(f"refused: brute columns {exc}")
        return EXIT_BUDGET
    sys.stdout.write(format_table(rows, args.which, args.brute))
    if args.figure:
        from .plotting import render_count_table
        render_count_table(rows, args.which, args.figure)
        _err(f"figure written to {args.figure}")
    mismatch = any(r.get("brute") is not None and r["formula"] is not None and r["brute"] != r["formula"]
                   for r in rows)
    return EXIT_NEGATIVE if mismatch else EXIT_OK


# ------------------------------------------------------------------ verify suites

def _per_lattice(fn, lattices) -> Iterable[H.VerificationReport]:
    for l in lattices:
        yield fn(l)


def _suite_characterizations(slow: bool):
    cat = H.default_catalog(slow)
    chains = [l for l in cat if l.name.startswith("L")]
    yield from _per_lattice(H.verify_decreasing_characterization, cat)
    yield from _per_lattice(H.verify_distributivity_characterization, cat)
    yield from _per_lattice(H.verify_constant_top_characterization, cat)
    yield from _per_lattice(H.verify_tau_characterization, [l for l in chains if l.size >= 2])
    yield from _per_lattice(H.verify_chain_top_fixed_characterization, chains)
    yield from _per_lattice(H.verify_structural_properties, cat)
    yield from _per_lattice(H.verify_chain_constructions, chains)


def _suite_chain_counts(slow: bool):
    for n in range(1, 11):
        yield H.verify_chain_counts(n, brute=n <= (8 if slow else 6), force=True)
    yield H.verify_omega_recurrence(20)


def _suite_quasi(slow: bool):
    for n in range(4, 8 if slow else 7):
        yield H.verify_quasi_classification(n)


def _suite_quasi_counts(slow: bool):
    for n in range(4, 12):
        yield H.verify_quasi_counts(n, brute=n <= (8 if slow else 7), force=True)


def _suite_lemmas(slow: bool):
    for l in H.default_catalog(slow):
        if l.name.startswith(("L", "M")):
            yield H.verify_supporting_lemmas(l)


SUITES: dict[str, Callable[[bool], Iterable[H.VerificationReport]]] = {
    "weight-equivalence": lambda slow: _per_lattice(H.verify_weight_equivalence, H.default_catalog(slow)),
    "characterizations": _suite_characterizations,
    "chain-counts": _suite_chain_counts,
    "quasi-counts": _suite_quasi_counts,
    "quasi-classification": _suite_quasi,
    "lemmas": _suite_lemmas,
    "counterexamples": lambda slow: H.verify_counterexamples(),
    "boundary": lambda slow: _per_lattice(H.verify_trivial_boundary, H.default_catalog(slow)),
}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    total = 0
    for name in names:
        for rep in SUITES[name](args.slow):
            total += 1
            failed += not rep.passed
            _out(rep.line())
            sys.stdout.flush()
    _out(f"# {total - failed}/{total} passed")
    return EXIT_OK if failed == 0 else EXIT_NEGATIVE


# ------------------------------------------------------------------ parser

def _add_selection(p):
    p.add_argument("--family", choices=("chain", "quasi"), default="chain")
    p.add_argument("--n", type=int, help="lattice size; for quasi this is the total element count, "
                                         "so --n 5 means 3 atoms")
    p.add_argument("--lattice", help="lattice file instead of --family/--n")
    p.add_argument("--weight", type=_weight, default=1)
    p.add_argument("--fix", type=_pair, action="append", metavar="J=I", help="require d(J) = I")
    p.add_argument("--at-least", type=_pair, action="append", metavar="X=Y", help="require Y <= d(X)")
    p.add_argument("--force", action="store_true", help="ignore the size budget")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latdiff", description="Difference operators on finite lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice-check", help="validate a lattice file")
    p.add_argument("path")
    p.set_defaults(func=cmd_lattice_check)

    p = sub.add_parser("op-check", help="test an operator against the weight identities")
    p.add_argument("lattice")
    p.add_argument("operator")
    p.add_argument("--weight", action="append", choices=("0", "1", "-1", "all"),
                   help="repeatable; default 1")
    p.set_defaults(func=cmd_op_check)

    p = sub.add_parser("enumerate", help="count (and list) operators")
    _add_selection(p)
    p.add_argument("--emit", action="store_true", help="print each operator, lexicographically")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="list operators with the named families they belong to")
    _add_selection(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="reproduce the count tables as TSV")
    p.add_argument("which", choices=("chains", "quasi"))
    p.add_argument("--max-n", type=int, default=10, help="largest lattice size (quasi: total elements)")
    p.add_argument("--brute", action="store_true", help="add enumeration columns")
    p.add_argument("--force", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--figure", metavar="PATH", help="also render a log-scale plot to PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--slow", action="store_true", help="include the larger catalog entries")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
