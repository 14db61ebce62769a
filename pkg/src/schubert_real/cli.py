"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 retry
budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .certificates import (bezout_certificate, check_certificate, dumps,
                           instance_from_json, instance_to_json, rnc_certificate,
                           subproblem_to_json)
from .errors import NonGenericError, ParseError, RetryBudgetExhausted, SchubertRealError
from .schubert import (Partition, count_syt, pieri_multiply, power_degree_lines,
                       rnc_problem_degree, SchubertClassG1)
from .solver import decompose_and_solve, intersect_unions, solve_four_lines
from .witness import bezout_unions, rnc_witness_instance

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RETRIES = 0, 1, 2, 3

# Found by scanning master seeds 0, 1, 2, ... with this t; every one of the
# 162 solutions of the resulting instance is real.
PINNED_RNC_SEED = 226
PINNED_RNC_T = Fraction(1)
DEFAULT_RETRIES = 10


def solve_rnc_with_retries(n: int, seed: int, retries: int, t=PINNED_RNC_T,
                           require_real: bool = False, identity_first: bool = False):
    """Try master seeds ``seed, seed + 1, ...`` until an instance is generic.

    Returns ``(solution_set, master_seed, retries_used)``.  With
    ``require_real`` an instance that is generic but not fully real also
    counts as a failed attempt.
    """
    last = None
    for attempt in range(retries + 1):
        master = seed + attempt
        w = rnc_witness_instance(n, master, t, identity_first=identity_first)
        try:
            result = decompose_and_solve(w)
        except NonGenericError as exc:
            last = exc
            continue
        if require_real and not (result.transversal and result.real_count == len(result.merged)):
            last = NonGenericError(
                f"master seed {master}: {result.real_count}/{len(result.merged)} real")
            continue
        return result, master, attempt
    raise RetryBudgetExhausted(
        f"no usable instance among master seeds {seed}..{seed + retries}: {last}", last)


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_syt(args):
    print(count_syt(Partition.parse(args.shape)))


def cmd_pieri(args):
    cls = SchubertClassG1(Partition.parse(args.shape), args.n)
    print(pieri_multiply(args.m, cls))


def cmd_degree_lines(args):
    print(power_degree_lines(args.n))


def cmd_degree_rnc(args):
    print(rnc_problem_degree(args.n))


def cmd_bezout(args):
    if args.degrees:
        degrees = [int(x) for x in args.degrees.split(",")]
    else:
        degrees = [args.d1, args.d2]
    if len(degrees) != args.b:
        raise SchubertRealError(f"P^{args.b} needs {args.b} degrees, got {len(degrees)}")
    last = None
    for attempt in range(args.retries + 1):
        seed = args.seed + attempt
        unions = bezout_unions(args.b, degrees, seed)
        try:
            points = intersect_unions(unions)
        except (NonGenericError, SchubertRealError) as exc:
            last = exc
            continue
        cert = bezout_certificate(unions, points, seed)
        cert["retries_used"] = attempt
        _write(dumps(cert), args.out)
        print(f"{len(points)} real points (predicted {cert['predicted_degree']})", file=sys.stderr)
        return EXIT_OK
    raise RetryBudgetExhausted(f"bezout: every seed failed: {last}", last)


def cmd_witness_rnc(args):
    if args.n != 3:
        raise SchubertRealError("geometric witnesses are solved for n = 3 only")
    result, master, used = solve_rnc_with_retries(
        args.n, args.seed, args.retries, Fraction(args.t), args.require_real,
        args.identity_first)
    cert = rnc_certificate(result, master, used)
    _write(dumps(cert), args.out)
    if args.instance_out:
        Path(args.instance_out).write_text(dumps(instance_to_json(result.instance)))
    print(f"{len(result.merged)} solutions, {result.real_count} real, "
          f"distinct={result.all_distinct}, transversal={result.transversal}, "
          f"master seed {master}", file=sys.stderr)
    return EXIT_OK


def cmd_solve_four_lines(args):
    w = instance_from_json(json.loads(Path(args.file).read_text()))
    if w.ambient != 3:
        raise SchubertRealError("four-line solving needs an instance in P^3")
    sel = tuple(int(x) for x in args.select.split(","))
    if len(sel) != len(w.groups) or any(not 0 <= i < len(g) for i, g in zip(sel, w.groups)):
        raise SchubertRealError(f"bad selection {args.select!r}")
    res = solve_four_lines([g.lines[i] for g, i in zip(w.groups, sel)], sel)
    sys.stdout.write(dumps(subproblem_to_json(res)))
    return EXIT_OK


def cmd_verify(args):
    report = check_certificate(Path(args.file).read_text())
    print(report)
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubert-real", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("syt", help="count standard Young tableaux of a shape like 2,2")
    s.add_argument("shape")
    s.set_defaults(func=cmd_syt)

    s = sub.add_parser("pieri", help="expand sigma_M * sigma_SHAPE in G(1,N)")
    s.add_argument("m", type=int)
    s.add_argument("shape")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_pieri)

    s = sub.add_parser("degree-lines", help="lines meeting 2n-2 general (n-2)-planes")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_degree_lines)

    s = sub.add_parser("degree-rnc", help="(n-2)-planes meeting 2n-2 rational normal curves")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_degree_rnc)

    s = sub.add_parser("bezout", help="intersect unions of hyperplanes and certify")
    s.add_argument("--b", type=int, default=2)
    s.add_argument("--d1", type=int, default=2)
    s.add_argument("--d2", type=int, default=2)
    s.add_argument("--degrees", help="comma-separated degrees, one per union (for b > 2)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    s.add_argument("--out", help="certificate path (default: stdout)")
    s.set_defaults(func=cmd_bezout)

    s = sub.add_parser("witness-rnc", help="build and solve a degenerate rational normal curve instance")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--seed", type=int, default=PINNED_RNC_SEED)
    s.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    s.add_argument("--t", default=str(PINNED_RNC_T), help="point on the chain path, in (0, 1]")
    s.add_argument("--require-real", action="store_true",
                   help="also retry instances that are generic but not fully real")
    s.add_argument("--identity-first", action="store_true",
                   help="use the untransformed chain as the first group")
    s.add_argument("--out", help="certificate path (default: stdout)")
    s.add_argument("--instance-out", help="also write the instance file here")
    s.set_defaults(func=cmd_witness_rnc)

    s = sub.add_parser("solve-four-lines", help="solve one subproblem of an instance file")
    s.add_argument("file")
    s.add_argument("--select", default="0,0,0,0", help="line index chosen from each group")
    s.set_defaults(func=cmd_solve_four_lines)

    s = sub.add_parser("verify", help="re-check a certificate (exit 1 on failure)")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or EXIT_OK
    except RetryBudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RETRIES
    except (SchubertRealError, ValueError, OSError) as exc:
        if isinstance(exc, ParseError) and args.command == "verify":
            print(f"verification failed: schema: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
