"""Command-line driver.

Every command prints one JSON report (schema 1) on stdout, or CSV with
``--format csv``.  Exact rationals are written as reduced "a/b" strings.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from typing import Any

from . import __version__
from .distance import (
    ConstructionError,
    delta_closed_form,
    half_ones_in_E,
    in_E,
    sign_vector,
    smallest_odd_prime_divisor,
    xi_vector,
)
from .exact import divisors, is_power_of_two, totient
from .lattice import ideal_basis_oracle, lambda_basis, lambda_generators
from .oracle import delta_oracle
from .witness import DEFAULT_SEED, SearchConfig, TheoremViolation, check_bound, search_witness

SCHEMA = 1
ORACLE_LIMIT = 12
OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def rat(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _n(args) -> int:
    if args.n < 2:
        raise UsageError(f"n must be >= 2, got {args.n}")
    return args.n


def _report(args, **fields) -> dict[str, Any]:
    out: dict[str, Any] = {"schema": SCHEMA, "command": args.command}
    out.update(fields)
    return out


def cmd_delta(args):
    n = _n(args)
    d = delta_closed_form(n)
    rep = _report(args, n=n, delta=rat(d.delta), eps_bound=rat(d.eps_bound))
    if d.smallest_odd_prime is not None:
        rep["p"] = d.smallest_odd_prime
    return OK, rep


def cmd_xi(args):
    n = _n(args)
    if is_power_of_two(n):
        raise UsageError(f"n={n} is a power of 2: delta_n = 0 and the center 1/2 * 1_n "
                         "already lies in E, so there is no extremal vector")
    try:
        v = xi_vector(n)
    except ConstructionError as e:
        return FAILED, _report(args, n=n, failures=[{"check": "xi_construction", "detail": str(e)}])
    return OK, _report(args, n=n, p=v.p, eps=list(v.eps), xi=[rat(a) for a in v.xi],
                       in_E=in_E(v.xi, lambda_generators(n)), distance=rat(v.distance))


def cmd_generators(args):
    n = _n(args)
    gens = lambda_generators(n)
    rows = [{"p": p, "i": i, "vector": list(g)} for (p, i), g in zip(gens.labels, gens.generators)]
    return OK, _report(args, n=n, count=len(gens), rank=lambda_basis(n).rank, generators=rows)


def _verify_checks(n: int) -> list[dict[str, Any]]:
    checks = []

    def add(name, passed, detail=""):
        checks.append({"check": name, "passed": bool(passed), "detail": detail})

    basis = lambda_basis(n)
    add("generators_equal_ideal", basis.basis == ideal_basis_oracle(n).basis)
    add("rank", basis.rank == n - totient(n), f"rank {basis.rank}, n - phi(n) = {n - totient(n)}")
    if is_power_of_two(n):
        add("half_ones_in_E", half_ones_in_E(n))
    else:
        p = smallest_odd_prime_divisor(n)
        try:
            sign_vector(n)
            add("signs_are_units", True)
            v = xi_vector(n)
            add("xi_in_E", in_E(v.xi, basis))
            add("xi_distance", v.distance == Fraction(1, 2 * p), rat(v.distance))
        except ConstructionError as e:
            add("xi_construction", False, str(e))
    dn = delta_closed_form(n).delta
    bad = [m for m in divisors(n) if m >= 2 and delta_closed_form(m).delta > dn]
    add("divisor_monotonicity", not bad, f"violating divisors {bad}" if bad else "")
    return checks


def cmd_verify(args):
    n = _n(args)
    checks = _verify_checks(n)
    failures = [c for c in checks if not c["passed"]]
    rep = _report(args, n=n, passed=not failures, checks=checks)
    if failures:
        rep["failures"] = failures
    return (FAILED if failures else OK), rep


def cmd_witness(args):
    n = _n(args)
    if args.eps is None:
        raise UsageError("witness needs --eps")
    eps = args.eps
    if not 0 < eps < Fraction(1, 2):
        raise UsageError(f"eps must satisfy 0 < eps < 1/2, got {rat(eps)}")
    d = delta_closed_form(n)
    if eps >= d.eps_bound:
        return OK, _report(args, n=n, eps=rat(eps), status="impossible",
                           reason="impossible by the main theorem: eps >= 1/2 - delta_n",
                           bound=rat(d.eps_bound))
    kw: dict[str, Any] = {"seed": args.seed, "threads": args.threads}
    if args.budget is not None:
        kw["scan_length"] = args.budget
    if args.radius is not None:
        kw["radius"] = args.radius
    try:
        cfg = SearchConfig(**kw)
    except ValueError as e:
        raise UsageError(str(e)) from None
    w = search_witness(n, cfg, target=float(eps))
    rep = _report(args, n=n, eps=rat(eps), bound=rat(d.eps_bound), seed=cfg.seed,
                  radius=cfg.radius if cfg.radius is not None else 2.0 * n,
                  scan_length=cfg.scan_length, x=w.x, y=w.y, margin=w.margin,
                  evaluations=w.evaluations)
    try:
        check_bound(w.margin, n)
    except TheoremViolation as e:
        rep.update(status="violation", failures=[{"check": "margin_bound", "detail": str(e)}])
        return FAILED, rep
    found = Fraction(w.margin) > eps
    rep["status"] = "found" if found else "budget_exhausted"
    return (OK if found else FAILED), rep


def _table_row(n: int) -> dict[str, Any]:
    d = delta_closed_form(n)
    return {"n": n, "delta": rat(d.delta), "eps_bound": rat(d.eps_bound),
            "p": d.smallest_odd_prime, "power_of_two": is_power_of_two(n)}


def cmd_table(args):
    if args.start < 2 or args.start > args.stop:
        raise UsageError(f"need 2 <= from <= to, got {args.start} {args.stop}")
    return OK, [_table_row(n) for n in range(args.start, args.stop + 1)]


def cmd_oracle(args):
    n = _n(args)
    if n > ORACLE_LIMIT:
        raise UsageError(f"oracle is limited to n <= {ORACLE_LIMIT}: the number of right-hand "
                         "sides it enumerates grows combinatorially with the lattice rank")
    upper = args.upper if args.upper is not None else Fraction(1, 2)
    if upper < 0:
        raise UsageError("--upper must be nonnegative")
    value = delta_oracle(lambda_basis(n), upper=upper)
    closed = delta_closed_form(n).delta
    rep = _report(args, n=n, delta_oracle=rat(value), delta=rat(closed), agrees=value == closed)
    return (OK if value == closed else FAILED), rep


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal or fraction: {text!r}") from None


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    common.add_argument("--budget", type=int, default=None,
                        help="axis points scanned per pinned value (witness)")
    common.add_argument("--eps", type=_fraction, default=None)
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--radius", type=float, default=None,
                        help="disk radius for random starts (witness; default 2n)")

    parser = argparse.ArgumentParser(prog="pyjama", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [("delta", "closed-form delta_n and the epsilon bound"),
                        ("xi", "the extremal vector xi and its checks"),
                        ("generators", "generators of the vanishing-sums lattice"),
                        ("verify", "run every structural check for n"),
                        ("witness", "search X with all rotations more than eps from Z")]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("n", type=int)
    p = sub.add_parser("table", parents=[common], help="delta_n over a range of n")
    p.add_argument("start", type=int, metavar="from")
    p.add_argument("stop", type=int, metavar="to")
    p = sub.add_parser("oracle", parents=[common], help="delta_n by exact LP enumeration")
    p.add_argument("n", type=int)
    p.add_argument("--upper", type=_fraction, default=None)
    return parser


COMMANDS = {"delta": cmd_delta, "xi": cmd_xi, "generators": cmd_generators, "verify": cmd_verify,
            "witness": cmd_witness, "table": cmd_table, "oracle": cmd_oracle}


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _emit(out, command: str, fmt: str, payload) -> None:
    if command == "table":
        if fmt == "json":
            for row in payload:
                out.write(json.dumps(row) + "\n")
        else:
            w = csv.writer(out, lineterminator="\n")
            for row in payload:
                w.writerow([_csv_cell(v) for v in row.values()])
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for k, v in payload.items():
            w.writerow([k, _csv_cell(v)])
    else:
        out.write(json.dumps(payload) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    fmt = args.format or ("csv" if args.command == "table" else "json")
    t0 = time.perf_counter()
    try:
        code, payload = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"pyjama {args.command}: error: {e}", file=sys.stderr)
        return USAGE
    elapsed = time.perf_counter() - t0
    if isinstance(payload, dict):
        payload["elapsed_s"] = round(elapsed, 6)
    _emit(sys.stdout, args.command, fmt, payload)
    if code != OK:
        print(f"pyjama {args.command}: verification failed", file=sys.stderr)
    else:
        print(f"pyjama {args.command}: done in {elapsed:.3f} s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
