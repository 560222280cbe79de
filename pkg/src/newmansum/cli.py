"""Command-line front end.

Subcommands: eval, verify, scan, bounds, eta, bench.  Exit codes follow
the contract {0 ok, 1 verification failure, 2 I/O or cap error, 64 usage
error}.  All output except bench timings is byte-deterministic.
"""

import argparse
import os
import sys
import tempfile
import time

from . import analysis, core, oracle, verify

__all__ = ["main", "run"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    s = text.strip().lower()
    try:
        if s.startswith("0x"):
            value = int(s[2:], 16)
        elif s.startswith("0b"):
            value = int(s[2:], 2)
        else:
            value = int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _exponents(text: str) -> list:
    try:
        exps = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list: {text!r}")
    if not exps or any(e < 0 for e in exps):
        raise argparse.ArgumentTypeError("exponents must be nonnegative integers")
    return exps


def _sum_line(terms, total) -> str:
    if not terms:
        return f"0={total}"
    parts = [str(terms[0])] + [f"{t:+d}" for t in terms[1:]]
    return "".join(parts) + f"={total}"


def _residue_value(evaluate, residue, N):
    if residue == 0:
        return evaluate(N)
    if residue == 1:
        return evaluate(N) - evaluate(2 * N)
    return evaluate(N) + evaluate(2 * N) - evaluate(4 * N)


def _cmd_eval(args) -> int:
    N = args.number
    if args.trace and args.algorithm == "oracle":
        print("error: --trace needs --algorithm decomposition or recursive",
              file=sys.stderr)
        return 64
    if args.trace and args.residue != 0:
        print("error: --trace is only available for residue 0", file=sys.stderr)
        return 64

    try:
        if args.algorithm == "oracle":
            value = oracle.oracle_sum(3, args.residue, N)
        elif args.algorithm == "decomposition":
            value = _residue_value(core.newman_sum_decomposition, args.residue, N)
        else:
            value = _residue_value(core.newman_sum_recursive, args.residue, N)
    except oracle.OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    print(value)
    if args.trace:
        if args.algorithm == "decomposition":
            terms = core.decomposition_terms(N)
            for desc, v in terms:
                print(f"{desc} = {v}")
            print(_sum_line([v for _, v in terms], value))
        else:
            pairs = core.recursion_trace(N)
            for Nk, c in pairs:
                print(f"S({Nk}) = 3*S({Nk // 4}) {'+' if c >= 0 else '-'} {abs(c)}")
            weighted = [3 ** k * c for k, (_, c) in enumerate(pairs)]
            concluding = [w for w in reversed(weighted) if w != 0]
            print(_sum_line(concluding, value))
    return 0


def _cmd_verify(args) -> int:
    try:
        rep = verify.run_core_checks(args.max)
    except oracle.OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"range: 0..{args.max}")
    print(f"{rep.checks} checks, {len(rep.failures)} failures")
    if rep.failures:
        name, witness = rep.failures[0]
        print(f"first failure: {name} at N={witness}")
        return 1
    return 0


_CSV_HEADER = "N,S,delta,lower,upper,in_bounds"


def _csv_row(rec) -> str:
    upper = "" if rec.upper is None else str(rec.upper)
    flag = "true" if rec.in_bounds else "false"
    return (f"{rec.N},{rec.S},{analysis.format_significant(rec.delta, 12)},"
            f"{rec.lower},{upper},{flag}")


def _cmd_scan(args) -> int:
    if not 1 <= args.start < args.stop:
        print("error: need 1 <= --from < --to", file=sys.stderr)
        return 64
    out = os.path.abspath(args.out)
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(out), prefix=".scan-",
                                   suffix=".csv")
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(_CSV_HEADER + "\n")
            for rec in analysis.scan(args.start, args.stop, args.step):
                fh.write(_csv_row(rec) + "\n")
        os.replace(tmp, out)
        tmp = None
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if tmp is not None and os.path.exists(tmp):
            os.unlink(tmp)
    return 0


def _cmd_bounds(args) -> int:
    if args.max < 2:
        print("error: --max must be >= 2", file=sys.stderr)
        return 64
    try:
        rep = verify.bounds_sweep(args.max)
    except oracle.OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"scanned N in [1, {args.max}]")
    print(f"bound violations: {len(rep.bound_violations)}")
    print(f"newman inequality violations: {len(rep.newman_violations)}")
    print("lower bound attained at: "
          + (", ".join(str(n) for n in rep.lower_attained) or "none"))
    print("upper bound attained at: "
          + (", ".join(str(n) for n in rep.upper_attained) or "none"))
    if not rep.ok:
        first = (rep.bound_violations or [(rep.newman_violations[0],)])[0]
        print(f"first violation: N={first[0]}")
        return 1
    return 0


def _cmd_eta(args) -> int:
    memo: dict = {}
    print(f"{'x':>6} {'defined':>8} {'derived':>8} {'half':>6}  status")
    for row in analysis.eta_rows(args.max):
        half = analysis.eta_half(row.x, memo)
        status = "ok" if row.agree else "MISMATCH"
        print(f"{row.x:>6} {row.eta_defined:>+8d} {row.eta_derived:>+8d} "
              f"{half:>+6d}  {status}")
    return 0


def _best_of(fn, repeats: int = 5) -> float:
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def _cmd_bench(args) -> int:
    cap = oracle.oracle_cap()
    print(f"oracle kernel: {oracle.KERNEL_BACKEND}")
    for e in args.exponents:
        N = 2 ** e
        td = _best_of(lambda: core.newman_sum_decomposition(N))
        tr = _best_of(lambda: core.newman_sum_recursive(N))
        if N <= cap:
            t0 = time.perf_counter()
            oracle.oracle_sum(3, 0, N)
            to = f"{(time.perf_counter() - t0) * 1e3:.3f} ms"
        else:
            to = "n/a (over cap)"
        print(f"N=2^{e}: decomposition {td * 1e3:.3f} ms, "
              f"recursive {tr * 1e3:.3f} ms, oracle {to}")
    limit = min(10 ** 6, cap)
    for name, kernel in sorted(oracle.available_kernels().items()):
        t0 = time.perf_counter()
        kernel.prefix_sums(3, 0, limit)
        dt = time.perf_counter() - t0
        print(f"prefix scan to {limit}: {name} kernel {dt * 1e3:.1f} ms")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="newmansum",
                     description="Exact Newman digit sum evaluation and verification")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate S_{3,l}(N)")
    p.add_argument("number", metavar="N", type=_natural,
                   help="decimal, 0x... or 0b..., any length")
    p.add_argument("--algorithm", choices=["decomposition", "recursive", "oracle"],
                   default="recursive")
    p.add_argument("--residue", type=int, choices=[0, 1, 2], default=0)
    p.add_argument("--trace", action="store_true",
                   help="print the term-by-term expansion")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", help="run the core invariant suite")
    p.add_argument("--max", type=_natural, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="write a CSV of N,S,delta,bounds rows")
    p.add_argument("--from", dest="start", type=_positive, required=True)
    p.add_argument("--to", dest="stop", type=_positive, required=True)
    p.add_argument("--step", type=_positive, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("bounds", help="sweep the sharp bounds, report attainment")
    p.add_argument("--max", type=_natural, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("eta", help="correction-term comparison table")
    p.add_argument("--max", type=_positive, required=True)
    p.set_defaults(func=_cmd_eta)

    p = sub.add_parser("bench", help="time both algorithms and both kernels")
    p.add_argument("--exponents", type=_exponents, required=True,
                   help="comma-separated bit sizes, e.g. 20,64,256")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())
