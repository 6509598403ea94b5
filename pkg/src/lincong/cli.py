"""Command-line front end: solve, enumerate, check, verify.

Exit codes: 0 success, 2 usage/parse/sizing error, 3 unsolvable instance,
4 oracle disagreement.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass

from .core import (
    LinearCongruence,
    SolveSummary,
    are_dependent,
    build_basis,
    expand,
    iter_basis,
    module_generators,
    normalize,
    satisfies,
    summarize,
)
from .oracle import DEFAULT_CAP, verify as oracle_verify
from .parser import ParsedCongruence, format_congruence, parse

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSOLVABLE = 3
EXIT_MISMATCH = 4

BATCH_SIZE = 200  # instances checked by `verify --seed`


@dataclass
class OutputRecord:
    """What a solve/enumerate invocation reports.

    Counts are rendered as decimal strings because they can exceed any fixed
    integer width; truncated is set iff --limit cut the output short.
    """

    summary: SolveSummary
    basis: list[tuple[int, ...]] | None = None
    solutions: list[tuple[int, ...]] | None = None
    truncated: bool = False

    def as_dict(self) -> dict:
        s = self.summary
        doc: dict = {
            "d": str(s.gcd_all),
            "solvable": s.solvable,
            "p1": str(s.solution_count),
            "p2": str(s.expansion_count),
            "s": str(s.basis_size),
        }
        if self.basis is not None:
            doc["basis"] = [list(v) for v in self.basis]
        if self.solutions is not None:
            doc["solutions"] = [list(v) for v in self.solutions]
        doc["truncated"] = self.truncated
        return doc


def _comma_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _load_instance(args) -> tuple[LinearCongruence, ParsedCongruence]:
    if args.coeffs is not None:
        if args.expr is not None:
            raise ValueError("give either an expression or --coeffs/--rhs/--mod, not both")
        if args.rhs is None or args.mod is None:
            raise ValueError("--coeffs requires --rhs and --mod")
        coeffs = _comma_ints(args.coeffs)
        names = tuple(f"x{i}" for i in range(1, len(coeffs) + 1))
        parsed = ParsedCongruence(names, coeffs, args.rhs, args.mod)
    else:
        if args.expr is None:
            raise ValueError("an expression (or --coeffs/--rhs/--mod) is required")
        text = sys.stdin.read() if args.expr == "-" else args.expr
        parsed = parse(text.strip())
    return normalize(parsed.raw_coeffs, parsed.rhs, parsed.modulus), parsed


def _check_limit(limit):
    if limit is not None and limit < 0:
        raise ValueError("--limit must be nonnegative")


def _print_summary_text(parsed: ParsedCongruence, s: SolveSummary):
    print(f"congruence: {format_congruence(parsed)}")
    print(f"d = {s.gcd_all}")
    print(f"solvable = {'true' if s.solvable else 'false'}")
    print(f"solutions (p1) = {s.solution_count}")
    print(f"per-seed (p2) = {s.expansion_count}")
    print(f"basis size (s) = {s.basis_size}")


def cmd_solve(args) -> int:
    c, parsed = _load_instance(args)
    _check_limit(args.limit)
    s = summarize(c)
    basis = None
    if s.solvable:
        basis = list(build_basis(c, limit=args.limit).solutions)
    record = OutputRecord(
        summary=s,
        basis=basis,
        truncated=s.solvable and args.limit is not None and args.limit < s.basis_size,
    )
    if args.format == "json":
        print(json.dumps(record.as_dict(), ensure_ascii=False))
    else:
        _print_summary_text(parsed, s)
        if basis is not None:
            print("basis:")
            for row in basis:
                print(" ".join(map(str, row)))
            if record.truncated:
                print("# truncated")
    return EXIT_OK if s.solvable else EXIT_UNSOLVABLE


def cmd_enumerate(args) -> int:
    c, parsed = _load_instance(args)
    _check_limit(args.limit)
    s = summarize(c)
    if not s.solvable:
        print(f"error: unsolvable: d = {s.gcd_all} does not divide b = {c.rhs}",
              file=sys.stderr)
        return EXIT_UNSOLVABLE
    truncated = args.limit is not None and args.limit < s.solution_count
    stream = (sol for seed in iter_basis(c) for sol in expand(seed, c))
    if args.limit is not None:
        stream = itertools.islice(stream, args.limit)
    if args.format == "json":
        record = OutputRecord(summary=s, solutions=list(stream), truncated=truncated)
        print(json.dumps(record.as_dict(), ensure_ascii=False))
    else:
        for row in stream:
            print(" ".join(map(str, row)))
        if truncated:
            print("# truncated")
    return EXIT_OK


def cmd_check(args) -> int:
    c, parsed = _load_instance(args)
    vec_a = _comma_ints(args.solution_a)
    vec_b = _comma_ints(args.solution_b)
    if len(vec_a) != c.arity or len(vec_b) != c.arity:
        raise ValueError(f"arity mismatch: the congruence has {c.arity} unknowns, "
                         f"got vectors of length {len(vec_a)} and {len(vec_b)}")
    vec_a = tuple(x % c.modulus for x in vec_a)
    vec_b = tuple(x % c.modulus for x in vec_b)
    for label, vec in (("a", vec_a), ("b", vec_b)):
        if not satisfies(vec, c):
            print(f"warning: {label} = ({', '.join(map(str, vec))}) does not satisfy "
                  f"the congruence", file=sys.stderr)
    lattice = module_generators(c)
    print(f"congruence: {format_congruence(parsed)}")
    print(f"a = {' '.join(map(str, vec_a))}")
    print(f"b = {' '.join(map(str, vec_b))}")
    for i, (xi, yi, g) in enumerate(zip(vec_a, vec_b, lattice.strides), start=1):
        diff = (xi - yi) % g
        verdict = "divisible" if diff == 0 else "not divisible"
        print(f"coordinate {i}: (a - b) ≡ {diff} (mod {g}) -> {verdict}")
    print("dependent" if are_dependent(vec_a, vec_b, lattice) else "independent")
    return EXIT_OK


def _random_instance(rng: random.Random) -> LinearCongruence:
    n = rng.choice((1, 2, 3))
    coeffs = [rng.randint(-20, 20) for _ in range(n)]
    return normalize(coeffs, rng.randint(-20, 20), rng.randint(1, 20))


def cmd_verify(args) -> int:
    if args.seed is not None:
        if args.expr is not None or args.coeffs is not None:
            raise ValueError("--seed runs a random batch; do not pass an instance too")
        rng = random.Random(args.seed)
        disagreements = 0
        for _ in range(BATCH_SIZE):
            c = _random_instance(rng)
            report = oracle_verify(c, cap=args.cap)
            if not (report.agrees_with_summary and report.agrees_with_basis):
                disagreements += 1
                print(f"disagreement: coeffs={c.coeffs} rhs={c.rhs} mod={c.modulus}")
        print(f"verified {BATCH_SIZE} random instances (seed {args.seed}): "
              f"{BATCH_SIZE - disagreements} agree, {disagreements} disagree")
        return EXIT_OK if disagreements == 0 else EXIT_MISMATCH

    c, parsed = _load_instance(args)
    report = oracle_verify(c, cap=args.cap)
    s = summarize(c)
    expected = s.solution_count if s.solvable else 0
    print(f"congruence: {format_congruence(parsed)}")
    print(f"oracle count = {report.solution_count}")
    print(f"expected count = {expected}")
    print(f"count agreement: {'yes' if report.agrees_with_summary else 'no'}")
    print(f"set agreement: {'yes' if report.agrees_with_basis else 'no'}")
    ok = report.agrees_with_summary and report.agrees_with_basis
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_instance_args(p: argparse.ArgumentParser):
    p.add_argument("expr", nargs="?",
                   help="congruence such as '2x - 6y ≡ 2 (mod 12)'; '-' reads stdin")
    p.add_argument("--coeffs", help="comma-separated coefficients, e.g. 2,-6")
    p.add_argument("--rhs", type=int, help="right-hand side, with --coeffs")
    p.add_argument("--mod", type=int, help="modulus, with --coeffs")


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lincong",
        description="Solve linear congruences a1*x1 + ... + an*xn ≡ b (mod m).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="print the counting summary and a basis")
    _add_instance_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--limit", type=int, help="cap the number of basis elements")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="print every distinct solution")
    _add_instance_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--limit", type=int, help="stop after this many solutions")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="dependence verdict for two solutions")
    _add_instance_args(p)
    p.add_argument("solution_a", help="residue vector, e.g. 7,4")
    p.add_argument("solution_b", help="residue vector, e.g. 1,0")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="cross-check against the brute-force oracle")
    _add_instance_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="largest m**n the oracle will scan (default 10**7)")
    p.add_argument("--seed", type=int,
                   help=f"verify a batch of {BATCH_SIZE} random instances instead")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # includes ParseError and CapExceededError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
