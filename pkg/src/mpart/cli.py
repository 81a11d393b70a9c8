"""Command-line interface: digit display, exact counting, the
partition/sequence maps, correspondence tables, congruence checks, and
bulk verification sweeps.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
resource error.  Counts are always printed in full decimal; verification
failures are emitted as JSON lines with big integers as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import congruence, counting, partitions
from .bijection import BetaSeq, enumerate_members, phi, phi_inv
from .budgets import BudgetExceeded
from .partitions import MaryPartition
from .radix import to_base

B_METHODS = ("nested", "poly", "recurrence", "gf", "enumerate")
C_METHODS = ("nested", "poly", "enumerate")

SUITES = (
    "oracle-b",
    "oracle-c",
    "bijection",
    "afs-b",
    "afs-c",
    "afs-equiv",
    "churchhouse",
    "reduction",
)


def _int_tuple(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _inclusive_range(text: str) -> range:
    try:
        lo_text, hi_text = text.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _fmt(values) -> str:
    return ",".join(str(v) for v in values)


def _count_via(kind: str, method: str, m: int, n: int) -> int:
    if kind == "b":
        if method == "nested":
            return counting.count_b_nested(m, n)
        if method == "poly":
            return counting.count_b_poly(m, n)
        if method == "recurrence":
            return counting.count_b_recurrence(m, n)
        if method == "gf":
            return counting.count_b_gf(m, n)[n]
        if method == "enumerate":
            return partitions.count_b_enum(m, n)
    else:
        if method == "nested":
            return counting.count_c_nested(m, n)
        if method == "poly":
            return counting.count_c_poly(m, n)
        if method == "enumerate":
            return partitions.count_c_enum(m, n)
    raise ValueError(f"method {method!r} does not apply to kind {kind!r}")


def cmd_count(args) -> int:
    methods = B_METHODS if args.kind == "b" else C_METHODS
    if args.check:
        values: dict[str, int] = {}
        for method in methods:
            try:
                values[method] = _count_via(args.kind, method, args.base, args.n)
            except BudgetExceeded:
                continue
        if not values:
            print("error: every applicable method exceeded its budget", file=sys.stderr)
            return 2
        if len(set(values.values())) > 1:
            for method, value in values.items():
                print(f"{method} {value}")
            return 1
        print(next(iter(values.values())))
        return 0
    if args.method not in methods:
        print(
            f"error: method {args.method!r} does not apply to kind {args.kind!r}",
            file=sys.stderr,
        )
        return 2
    try:
        print(_count_via(args.kind, args.method, args.base, args.n))
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("fallback: --method poly", file=sys.stderr)
        return 2
    return 0


def cmd_digits(args) -> int:
    print(_fmt(to_base(args.base, args.n).msb_first()))
    return 0


def cmd_phi(args) -> int:
    mults_msb = list(args.partition)
    while len(mults_msb) > 1 and mults_msb[0] == 0:
        mults_msb.pop(0)
    p = MaryPartition(args.base, tuple(reversed(mults_msb)))
    print(_fmt(phi(p, args.n).msb_first()))
    return 0


def cmd_phi_inv(args) -> int:
    seq = BetaSeq(args.base, args.n, tuple(reversed(args.beta)))
    print(_fmt(phi_inv(seq).msb_first()))
    return 0


def cmd_table(args) -> int:
    j = to_base(args.base, args.n).j
    rows = []
    for p in partitions.enumerate_b(args.base, args.n):
        beta = phi(p, args.n).msb_first()
        rows.append((beta, p.padded_msb_first(j)))
    rows.sort(key=lambda row: row[0])
    for beta, mults in rows:
        print(f"{_fmt(mults)}\t{_fmt(beta)}")
    return 0


def cmd_congruence(args) -> int:
    m, n = args.base, args.n
    if args.property == "churchhouse":
        if m != 2:
            print("error: churchhouse congruences are about base 2", file=sys.stderr)
            return 2
        first, second = congruence.churchhouse_check(args.k, n)
        print(
            f"first={'PASS' if first else 'FAIL'} "
            f"second={'PASS' if second else 'FAIL'}"
        )
        return 0 if first and second else 1
    r = to_base(m, n)
    if args.property == "afs-b":
        predicted = congruence.b_mod_product(r).value
        actual = counting.count_b_poly(m, m * n) % m
    elif args.property == "afs-c":
        predicted = congruence.c_mod_formula(r).value
        actual = counting.count_c_poly(m, m * n) % m
    else:  # afs-c-ell
        predicted = congruence.afs_c_mod(r).value
        actual = counting.count_c_poly(m, m * n) % m
    verdict = "PASS" if predicted == actual else "FAIL"
    print(f"predicted={predicted} actual={actual} {verdict}")
    return 0 if verdict == "PASS" else 1


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)

    def fail(self, m: int, n: int, expected, actual, **extra) -> None:
        record = {"m": m, "n": n, "suite": self.suite,
                  "expected": str(expected), "actual": str(actual)}
        record.update(extra)
        self.failures.append(record)


def _verify_oracle_b(report: VerifyReport, bases: range, ns: range) -> None:
    top = ns.stop - 1
    for m in bases:
        table = counting.recurrence_table(m, top)
        gf = counting.count_b_gf(m, top)
        for n in ns:
            report.cases_run += 1
            expected = table[n]
            if gf[n] != expected:
                report.fail(m, n, expected, gf[n], method="gf")
            poly = counting.count_b_poly(m, n)
            if poly != expected:
                report.fail(m, n, expected, poly, method="poly")
            try:
                nested = counting.count_b_nested(m, n)
            except BudgetExceeded:
                report.skipped += 1
            else:
                if nested != expected:
                    report.fail(m, n, expected, nested, method="nested")


def _verify_oracle_c(report: VerifyReport, bases: range, ns: range) -> None:
    for m in bases:
        for n in ns:
            report.cases_run += 1
            expected = None
            try:
                expected = partitions.count_c_enum(m, n)
            except BudgetExceeded:
                report.skipped += 1
            poly = counting.count_c_poly(m, n)
            if expected is None:
                expected = poly
            elif poly != expected:
                report.fail(m, n, expected, poly, method="poly")
            try:
                nested = counting.count_c_nested(m, n)
            except BudgetExceeded:
                report.skipped += 1
            else:
                if nested != expected:
                    report.fail(m, n, expected, nested, method="nested")


def _verify_bijection(report: VerifyReport, bases: range, ns: range) -> None:
    for m in bases:
        for n in ns:
            report.cases_run += 1
            parts = partitions.enumerate_b(m, n)
            members = enumerate_members(m, n)
            if len(parts) != len(members):
                report.fail(m, n, len(members), len(parts), method="cardinality")
                continue
            images = [phi(p, n) for p in parts]
            # descending partitions map to ascending sequences, so the
            # generation orders must line up element for element
            if images != members:
                report.fail(m, n, "image == member set", "mismatch", method="image")
            bad = sum(1 for p, b in zip(parts, images) if phi_inv(b) != p)
            if bad:
                report.fail(m, n, 0, bad, method="round-trip")


def _verify_afs_b(report: VerifyReport, bases: range, ns: range) -> None:
    for m in bases:
        for n in ns:
            report.cases_run += 1
            predicted = congruence.b_mod_product(to_base(m, n)).value
            actual = counting.count_b_poly(m, m * n) % m
            if predicted != actual:
                report.fail(m, n, predicted, actual)


def _verify_afs_c(report: VerifyReport, bases: range, ns: range) -> None:
    for m in bases:
        for n in ns:
            report.cases_run += 1
            predicted = congruence.c_mod_formula(to_base(m, n)).value
            actual = counting.count_c_poly(m, m * n) % m
            if predicted != actual:
                report.fail(m, n, predicted, actual)


def _verify_afs_equiv(report: VerifyReport, bases: range, ns: range) -> None:
    for m in bases:
        for n in ns:
            report.cases_run += 1
            r = to_base(m, n)
            lhs = congruence.afs_c_mod(r).value
            rhs = congruence.c_mod_formula(r).value
            if lhs != rhs:
                report.fail(m, n, rhs, lhs)


def _verify_reduction(report: VerifyReport, bases: range, ns: range) -> None:
    for m in bases:
        for n in ns:
            report.cases_run += 1
            lhs = counting.count_c_poly(m, m**3 * n) % m
            rhs = counting.count_c_poly(m, m * n) % m
            if lhs != rhs:
                report.fail(m, n, rhs, lhs)


def _verify_churchhouse(report: VerifyReport, ks: range, ns: range) -> None:
    for k in ks:
        for n in ns:
            report.cases_run += 1
            first, second = congruence.churchhouse_check(k, n)
            if not first:
                report.fail(2, n, "0", "nonzero", k=k, form="first")
            if not second:
                report.fail(2, n, "0", "nonzero", k=k, form="second")


def cmd_verify(args) -> int:
    report = VerifyReport(args.suite)
    if args.suite == "churchhouse":
        _verify_churchhouse(report, args.k_range, args.n_range)
    else:
        runner = {
            "oracle-b": _verify_oracle_b,
            "oracle-c": _verify_oracle_c,
            "bijection": _verify_bijection,
            "afs-b": _verify_afs_b,
            "afs-c": _verify_afs_c,
            "afs-equiv": _verify_afs_equiv,
            "reduction": _verify_reduction,
        }[args.suite]
        runner(report, args.base_range, args.n_range)
    for failure in report.failures:
        print(json.dumps(failure))
    print(
        json.dumps(
            {
                "suite": report.suite,
                "cases_run": report.cases_run,
                "failures": len(report.failures),
                "skipped": report.skipped,
            }
        )
    )
    return 1 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpart",
        description="Exact counting and verification for m-ary partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", help="base-m digits of n, most significant first")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("count", help="count partitions of n with parts powers of the base")
    p.add_argument("--kind", choices=("b", "c"), required=True,
                   help="b: all m-ary partitions; c: gap-free only")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=B_METHODS, default="poly",
                   help="gf and recurrence apply to kind b only")
    p.add_argument("--check", action="store_true",
                   help="run every applicable method and fail on disagreement")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("phi", help="map a partition to its bounded sequence")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", type=_int_tuple, required=True,
                   help="multiplicities, largest exponent first, e.g. 1,4,4")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-inv", help="map a bounded sequence back to its partition")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=_int_tuple, required=True,
                   help="sequence entries, highest index first, e.g. 2,9")
    p.set_defaults(func=cmd_phi_inv)

    p = sub.add_parser("table", help="TSV of partition/sequence pairs, ascending by sequence")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("congruence", help="check one residue prediction against the exact count")
    p.add_argument("--property", choices=("afs-b", "afs-c", "afs-c-ell", "churchhouse"),
                   required=True)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1, help="power index for churchhouse")
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("verify", help="sweep a verification suite over a grid")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--base-range", type=_inclusive_range, default=range(2, 6),
                   help="inclusive range A..B of bases (default 2..5)")
    p.add_argument("--n-range", type=_inclusive_range, required=True,
                   help="inclusive range A..B of n values")
    p.add_argument("--k-range", type=_inclusive_range, default=range(1, 3),
                   help="inclusive range A..B of k for churchhouse (default 1..2)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
