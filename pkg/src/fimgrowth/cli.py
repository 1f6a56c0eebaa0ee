"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 rank 1 has no exponential growth,
3 enumeration budget exceeded, 4 oracle/formula mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction

import mpmath

from . import counting, growth, munn, oracle
from .words import format_word

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def fixed(x, decimals: int) -> str:
    """``x`` rounded to ``decimals`` places after the point."""
    with mpmath.workdps(decimals + 30):
        if isinstance(x, Fraction):
            x = mpmath.mpf(x.numerator) / x.denominator
        x = mpmath.mpf(x)
        int_digits = len(str(int(abs(x)))) if abs(x) >= 1 else 1
        return mpmath.nstr(x, int_digits + decimals, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


# ---------------------------------------------------------------------------


def cmd_spheres(args, out) -> int:
    table = counting.sphere_table(args.rank, args.max_k)
    out.write(table.to_json() + "\n" if args.format == "json" else table.to_csv())
    return EXIT_OK


def _random_word(rng: random.Random, rank: int, max_len: int) -> list[int]:
    return [rng.randrange(2 * rank) for _ in range(rng.randint(0, max_len))]


def cmd_verify(args, out) -> int:
    rank, K_max = args.rank, args.max_k
    budget = args.budget if args.budget is not None else oracle.default_budget()
    status = EXIT_OK
    try:
        observed = oracle.enumerate_munn_tree_counts(rank, K_max, budget)
        completed = K_max
    except oracle.BudgetExceeded as exc:
        observed = exc.partial or {}
        completed = exc.completed
        out.write(f"# budget exceeded: {exc}\n")
        out.write(f"# partial report up to K={completed}\n")
        status = EXIT_BUDGET

    mismatches = 0
    out.write("K,t,k,oracle,formula,result\n")
    for K in range(completed + 1):
        sphere = 0
        for t in range(K % 2, K + 1, 2):
            k = (K - t) // 2
            got = observed.get((t, k), 0)
            want = counting.count_munn_trees(rank, t, k)
            sphere += got
            ok = got == want
            mismatches += not ok
            out.write(f"{K},{t},{k},{got},{want},{'ok' if ok else 'MISMATCH'}\n")
        want = counting.sphere_size(rank, K)
        ok = sphere == want
        mismatches += not ok
        out.write(f"{K},*,*,{sphere},{want},{'ok' if ok else 'MISMATCH'}\n")

    rng = random.Random(args.seed)
    for _ in range(args.samples):
        u = _random_word(rng, rank, 8)
        v = _random_word(rng, rank, 8)
        lhs = munn.eval_word(u + v, rank)
        rhs = munn.multiply(munn.eval_word(u, rank), munn.eval_word(v, rank))
        if lhs != rhs:
            mismatches += 1
            out.write(f"# homomorphism failure: u={format_word(u)} v={format_word(v)}\n")
    out.write(f"# {args.samples} seeded homomorphism samples (seed={args.seed})\n")

    if mismatches:
        out.write(f"FAIL: {mismatches} mismatches\n")
        return EXIT_MISMATCH
    if status == EXIT_BUDGET:
        out.write("INCOMPLETE\n")
        return status
    out.write("PASS\n")
    return EXIT_OK


def cmd_growth(args, out) -> int:
    try:
        y = growth.growth_rate(args.rank, args.digits + 2)
    except growth.PolynomialGrowth as exc:
        out.write(f"{exc}\n")
        out.write("spherical growth of FIM_1: |S(2R)| = (R+1)^2, |S(2R+1)| = (R+1)(R+2)\n")
        return EXIT_DOMAIN
    idem = growth.idempotent_growth_rate(args.rank, args.digits + 2)
    d = args.digits
    out.write(f"rank={args.rank}\n")
    out.write(f"p={2 * args.rank - 1}\n")
    if args.rank <= 7:
        out.write(f"polynomial={growth.growth_poly(args.rank)}\n")
    else:
        out.write(f"polynomial={2 * args.rank - 1}^{2 * args.rank - 1} y^{2 * args.rank - 3}"
                  f" - ({2 * args.rank - 1}y - 1)^{2 * args.rank - 2}\n")
    out.write(f"growth_rate={fixed(y.value, d)}\n")
    out.write(f"bracket_lo={fixed(y.lo, d + 4)}\n")
    out.write(f"bracket_hi={fixed(y.hi, d + 4)}\n")
    out.write(f"bracket_width={float(y.width()):.3e}\n")
    out.write(f"asymptotic={fixed(growth.asymptotic_growth(args.rank), d)}\n")
    out.write(f"idempotent_rate={fixed(idem.value, d)}\n")
    return EXIT_OK


def table1_rows(digits: int, ranks=range(2, 8)) -> list[dict]:
    rows = []
    for r in ranks:
        y = growth.growth_rate(r, digits + 2)
        rows.append(
            {
                "rank": r,
                "growth_rate": fixed(y.value, digits),
                "asymptotic": fixed(growth.asymptotic_growth(r), digits),
                "idempotent_rate": fixed(growth.idempotent_growth_rate(r, digits + 2).value, digits),
            }
        )
    return rows


def cmd_table1(args, out) -> int:
    rows = table1_rows(args.digits)
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
        return EXIT_OK
    w = csv.DictWriter(out, fieldnames=["rank", "growth_rate", "asymptotic", "idempotent_rate"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return EXIT_OK


def _describe_certificate(cert) -> str:
    if isinstance(cert, growth.Irreducible):
        return f"Irreducible(primes={','.join(map(str, cert.primes))})"
    if isinstance(cert, growth.ReducibleWitness):
        return f"ReducibleWitness({cert.factor_str()})"
    return f"Unknown(primes_tried={len(cert.primes_tried)})"


def cmd_poly(args, out) -> int:
    if args.up_to is not None:
        # long-running sweep: every rank from 2 to --up-to
        failures = 0
        for r in range(2, args.up_to + 1):
            cert = growth.irreducibility_certificate(r, args.prime_budget)
            failures += not isinstance(cert, growth.Irreducible) and r != 5
            out.write(f"{r},{_describe_certificate(cert)}\n")
            out.flush()
        return EXIT_MISMATCH if failures else EXIT_OK
    try:
        poly = growth.growth_poly(args.rank)
    except growth.PolynomialGrowth as exc:
        out.write(f"{exc}\n")
        return EXIT_DOMAIN
    out.write(" ".join(str(c) for c in poly.descending()) + "\n")
    if args.factor_check:
        cert = growth.irreducibility_certificate(args.rank, args.prime_budget)
        out.write(_describe_certificate(cert) + "\n")
        if args.rank == 5:
            out.write(f"rank5_identity={'verified' if growth.check_rank5_factorization() else 'FAILED'}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fimgrowth", description="Growth of free inverse monoids via Munn trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spheres", help="exact sphere, idempotent and ball sizes")
    p.add_argument("--rank", type=_positive_int(1), required=True)
    p.add_argument("--max-k", type=_positive_int(0), required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("verify", help="compare brute-force enumeration with the closed forms")
    p.add_argument("--rank", type=_positive_int(1), required=True)
    p.add_argument("--max-k", type=_positive_int(0), required=True)
    p.add_argument("--budget", type=_positive_int(1), default=None,
                   help=f"word-count ceiling (default ${oracle.BUDGET_ENV} or {oracle.DEFAULT_WORK_BUDGET})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_positive_int(0), default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", help="certified exponential growth rate for one rank")
    p.add_argument("--rank", type=_positive_int(1), required=True)
    p.add_argument("--digits", type=_positive_int(1), default=12)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("table1", help="growth rates for ranks 2-7")
    p.add_argument("--digits", type=_positive_int(1), default=3)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("poly", help="the growth polynomial and irreducibility checks")
    p.add_argument("--rank", type=_positive_int(1))
    p.add_argument("--factor-check", action="store_true")
    p.add_argument("--prime-budget", type=_positive_int(2), default=1000)
    p.add_argument("--up-to", type=_positive_int(2), default=None,
                   help="certify every rank from 2 to this bound (slow for large bounds)")
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "poly" and args.rank is None and args.up_to is None:
        parser.error("poly needs --rank or --up-to")
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
