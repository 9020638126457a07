"""Command-line frontend: synthesize, verify, export, sweep, print tables.

Exit codes: 0 success, 1 bound/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds, verify
from .adders import ADDER_MIN_N, build_adder
from .aop import build_aop, build_extended_aop, gate_report
from .export import export
from .report import SynthReport, adder_bounds, aop_bounds

AOP_CONSTRUCTIONS = ("grinchuk",)
ADDER_CONSTRUCTIONS = ("ripple", "lf", "halved", "a1", "a2", "a3", "percarry")


class UsageError(Exception):
    pass


def _parse_verify(spec: str) -> tuple[str, int]:
    if spec == "off":
        return "off", 0
    if spec == "exhaustive":
        return "exhaustive", 0
    if spec.startswith("random"):
        trials = verify.DEFAULT_TRIALS
        if ":" in spec:
            trials = int(spec.split(":", 1)[1])
        return "random", trials
    raise UsageError(f"bad --verify value {spec!r}")


def _run_verification(circuit, oracle, mode: str, trials: int, seed: int) -> dict:
    if mode == "off":
        return {"mode": "skipped", "ok": True}
    verdict = verify.verify_equivalence(circuit, oracle, mode, trials, seed)
    return {
        "mode": verdict.mode,
        "ok": verdict.ok,
        "assignments": verdict.assignments,
        "seed": verdict.seed,
        "counterexample": verdict.counterexample,
    }


def cmd_synth(args: argparse.Namespace) -> int:
    mode, trials = _parse_verify(args.verify)
    if args.kind == "aop":
        if args.construction not in AOP_CONSTRUCTIONS:
            raise UsageError(f"--kind aop supports {AOP_CONSTRUCTIONS}")
        if args.m is None:
            raise UsageError("--kind aop requires --m")
        if args.f is not None:
            raise UsageError("--f only applies to the lf construction")
        n_sym = args.n or 0
        t0 = time.perf_counter()
        if n_sym:
            circuit, ctx = build_extended_aop(n_sym, args.m, mode=args.mode)
        else:
            circuit, ctx = build_aop(args.m, mode=args.mode)
        elapsed = (time.perf_counter() - t0) * 1000
        depth, size, fanout = circuit.depth(), circuit.size(), circuit.fanout()
        info = aop_bounds(args.m, n_sym, args.mode, depth)
        oracle = verify.extended_aop_oracle(n_sym) if n_sym \
            else verify.aop_oracle()
        categories = gate_report(ctx)
        size_param = args.m
        kind = "aop"
    else:
        if args.construction not in ADDER_CONSTRUCTIONS:
            raise UsageError(f"--kind adder supports {ADDER_CONSTRUCTIONS}")
        if args.n is None:
            raise UsageError("--kind adder requires --n")
        if args.f is not None and args.construction != "lf":
            raise UsageError("--f only applies to the lf construction")
        if args.mode != "shared":
            raise UsageError("--mode only applies to AND-OR path synthesis")
        if args.n < ADDER_MIN_N[args.construction]:
            raise UsageError(
                f"{args.construction} needs n >= {ADDER_MIN_N[args.construction]}")
        f = args.f or 0
        if args.construction == "lf":
            cap = (args.n - 1).bit_length() if args.n > 1 else 0
            if not 0 <= f <= cap:
                raise UsageError(f"lf needs 0 <= f <= ceil(log2 n) = {cap}")
        t0 = time.perf_counter()
        circuit, _ = build_adder(args.construction, args.n, f)
        elapsed = (time.perf_counter() - t0) * 1000
        depth, size, fanout = circuit.depth(), circuit.size(), circuit.fanout()
        info = adder_bounds(args.construction, args.n, f)
        oracle = verify.carry_oracle(args.n)
        categories = None
        size_param = args.n
        kind = "adder"

    verified = _run_verification(circuit, oracle, mode, trials, args.seed)
    report = SynthReport(
        construction=args.construction, kind=kind, size_param=size_param,
        depth=depth, size=size, fanout=fanout,
        bound_depth=info.depth, bound_size=info.size,
        bound_depth_formula=info.depth_formula,
        bound_size_formula=info.size_formula,
        verified=verified, wall_time_ms=elapsed,
        gate_categories=categories)

    if args.out:
        out = Path(args.out)
        if out.is_dir():
            # default filename keeps sweep outputs tidy
            out = out / f"{kind}_{args.construction}_{size_param}.{args.format}"
        out.write_text(export(circuit, args.format))
    if args.report:
        Path(args.report).write_text(
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")

    status = "ok" if report.bounds_ok and verified["ok"] else "FAIL"
    print(f"{args.construction} {kind} {size_param}: depth={depth} "
          f"size={size} fanout={fanout} "
          f"bound_depth={info.depth} bound_size={info.size} "
          f"verify={verified['mode']} [{status}]")
    for violation in report.violated():
        print(f"  bound violated: {violation}", file=sys.stderr)
    if not verified["ok"]:
        print(f"  verification failed: {verified['counterexample']}",
              file=sys.stderr)
    return 0 if status == "ok" else 1


def _parse_range(spec: str) -> range:
    parts = spec.split("..")
    if len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
        step = 1
    elif len(parts) == 3:
        lo, hi, step = int(parts[0]), int(parts[1]), int(parts[2])
    else:
        raise UsageError(f"bad range {spec!r}, expected a..b or a..b..step")
    if lo > hi or step < 1:
        raise UsageError(f"empty range {spec!r}")
    return range(lo, hi + 1, step)


def _parse_construction(token: str) -> tuple[str, int]:
    if token.startswith("lf:f="):
        return "lf", int(token[5:])
    if token == "lf":
        return "lf", 0
    if token in ADDER_CONSTRUCTIONS:
        return token, 0
    raise UsageError(f"unknown construction {token!r}")


def cmd_sweep(args: argparse.Namespace) -> int:
    ns = _parse_range(args.n_range)
    constructions = [_parse_construction(t)
                     for t in args.constructions.split(",") if t]
    if not constructions:
        raise UsageError("no constructions given")
    mode, trials = _parse_verify(args.verify)
    rows = []
    all_ok = True
    for n in ns:
        for name, f in constructions:
            if n < ADDER_MIN_N[name]:
                continue
            if name == "lf":
                f = min(f, (n - 1).bit_length() if n > 1 else 0)
            circuit, _ = build_adder(name, n, f)
            info = adder_bounds(name, n, f)
            verified = _run_verification(
                circuit, verify.carry_oracle(n), mode, trials, args.seed)
            label = f"lf:f={f}" if name == "lf" else name
            ok = verified["ok"] and \
                (info.depth is None or circuit.depth() <= info.depth) and \
                (info.size is None or circuit.size() <= info.size + 1e-9)
            all_ok &= ok
            rows.append((n, label, circuit.depth(), circuit.size(),
                         circuit.fanout(), info.depth, info.size, ok))
    rows.sort(key=lambda r: (r[0], r[1]))
    header = ("n", "construction", "depth", "size", "fanout",
              "bound_depth", "bound_size", "pass")
    if args.emit == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(x) for x in row))
    else:
        print("| " + " | ".join(header) + " |")
        print("|" + "---|" * len(header))
        for row in rows:
            print("| " + " | ".join(str(x) for x in row) + " |")
    return 0 if all_ok else 1


def cmd_tables(args: argparse.Namespace) -> int:
    ok = True
    if args.which == "dmin":
        print("d_min(n, m) for m = 1..9, n = 0..12 (computed vs embedded)")
        for m in range(1, 10):
            row = [bounds.d_min(n, m) for n in range(13)]
            expect = list(bounds.DMIN_GRID[m - 1])
            mark = "" if row == expect else "   MISMATCH " + str(expect)
            ok &= row == expect
            print(f"m={m}: " + " ".join(str(v) for v in row) + mark)
    elif args.which == "psi":
        print("d, psi(d), bound, cumulative, cumulative bound")
        total = 0.0
        for i, d in enumerate(range(5, 19)):
            v = bounds.psi(d)
            total += v
            good = v <= bounds.PSI_BOUNDS[i] + 5e-5
            ok &= good
            print(f"{d:2d} {v:.4f} <= {bounds.PSI_BOUNDS[i]:.4f} "
                  f"{'ok' if good else 'MISMATCH'}  cum {total:.4f}")
        ok &= total <= bounds.PSI_CUMSUM_BOUND + 5e-5
        print(f"cumulative {total:.4f} <= {bounds.PSI_CUMSUM_BOUND}: "
              f"{'ok' if ok else 'MISMATCH'}")
    elif args.which == "addgates":
        print("additional gates per (m, n) cell: measured <= budget")
        for m, n in bounds.addgate_cells():
            circuit, ctx = build_extended_aop(n, m)
            measured = gate_report(ctx)["additional"]
            budget = bounds.addgate_bound(m, n)
            good = measured <= budget + 1e-9
            ok &= good
            print(f"m={m:2d} n={n:2d}: {measured:3d} <= {budget:7.3f} "
                  f"{'ok' if good else 'EXCEEDED'}")
    else:
        raise UsageError(f"unknown table {args.which!r}")
    return 0 if ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aopsynth",
        description="Construct and verify AND-OR path and adder circuits "
                    "over {AND2, OR2}.")
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="synthesize one circuit")
    synth.add_argument("--kind", choices=("aop", "adder"), required=True)
    synth.add_argument("--construction", required=True)
    synth.add_argument("--m", type=int, help="alternating input count (aop)")
    synth.add_argument("--n", type=int,
                       help="input pairs (adder) / symmetric inputs (aop)")
    synth.add_argument("--f", type=int, default=None,
                       help="depth-size tradeoff parameter (lf only)")
    synth.add_argument("--mode", choices=("shared", "formula"),
                       default="shared", help="aop gate-sharing mode")
    synth.add_argument("--verify", default="random:10000",
                       help="exhaustive | random[:trials] | off")
    synth.add_argument("--seed", type=lambda v: int(v, 0),
                       default=verify.DEFAULT_SEED)
    synth.add_argument("--out", help="netlist output path")
    synth.add_argument("--format", choices=("dot", "blif", "json"),
                       default="blif")
    synth.add_argument("--report", help="JSON report output path")
    synth.set_defaults(func=cmd_synth)

    sweep = sub.add_parser("sweep", help="tabulate constructions over a range")
    sweep.add_argument("--n-range", required=True, help="a..b[..step]")
    sweep.add_argument("--constructions", required=True,
                       help="comma list, e.g. ripple,lf:f=0,a1")
    sweep.add_argument("--emit", choices=("csv", "md"), default="csv")
    sweep.add_argument("--verify", default="off")
    sweep.add_argument("--seed", type=lambda v: int(v, 0),
                       default=verify.DEFAULT_SEED)
    sweep.set_defaults(func=cmd_sweep)

    tables = sub.add_parser("tables", help="recompute the reference tables")
    tables.add_argument("--which", choices=("dmin", "addgates", "psi"),
                        required=True)
    tables.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
