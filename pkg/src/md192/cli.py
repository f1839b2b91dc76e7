"""Command-line interface: ``md192 {digest,kat,avalanche,expand,bench}``.

Exit codes: 0 success, 1 verification failure or unreadable input, 2 usage
error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import ALGORITHMS, analysis, kat, new

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def cmd_digest(args) -> int:
    inputs = []
    try:
        for path in args.file or []:
            inputs.append((Path(path).read_bytes(), path))
    except OSError as exc:
        print(f"md192: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    for literal in args.string or []:
        inputs.append((literal.encode("utf-8"), f'"{literal}"'))
    if not inputs:
        inputs.append((sys.stdin.buffer.read(), "-"))
    alg = args.alg or "md192"
    out = []
    for data, name in inputs:
        hexd = new(alg, data).hexdigest()
        out.append(f"algorithm={alg}\nname={name}\ndigest={hexd}\n" if args.format == "kv" else f"{hexd}  {name}\n")
    _emit("".join(out))
    return EXIT_OK


def cmd_kat(args) -> int:
    try:
        if args.file:
            entries = [e for path in args.file for e in kat.load_kat_file(path)]
        else:
            entries = [e for name in kat.BUNDLED for e in kat.load_bundled(name)]
    except kat.KatParseError as exc:
        print(f"md192: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"md192: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    if args.alg:
        entries = [e for e in entries if e.algorithm == args.alg]
    report = kat.run_kats(entries)
    _emit(report.to_kv() if args.format == "kv" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_avalanche(args) -> int:
    report = analysis.avalanche_test(args.alg or "md192", args.size, args.trials, args.seed)
    _emit(report.to_kv() if args.format == "kv" else report.to_text())
    return EXIT_OK


def cmd_expand(args) -> int:
    variants = list(analysis.SCHEDULES) if args.variant == "all" else [args.variant]
    reports = [analysis.expansion_weight_study(v, args.sample, args.seed) for v in variants]
    if args.format == "kv":
        _emit("".join(r.to_kv(prefix=f"{r.variant}.") for r in reports))
    else:
        _emit("\n".join(r.to_text() for r in reports))
        if len(reports) > 1:
            mins = " >= ".join(f"{r.variant} {r.min_total_weight}" for r in reports)
            ordered = all(a.min_total_weight >= b.min_total_weight for a, b in zip(reports, reports[1:]))
            _emit(f"\nminimum weights: {mins} ({'holds' if ordered else 'does not hold'})\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    algs = list(ALGORITHMS) if args.alg in (None, "both") else [args.alg]
    reports = {a: analysis.benchmark(a, args.size, args.reps, engine=args.engine, seed=args.seed) for a in algs}
    ratio = analysis.throughput_ratio(reports["md192"], reports["sha1"]) if len(reports) == 2 else None
    if args.format == "kv":
        text = "".join(r.to_kv(prefix=f"{a}.") for a, r in reports.items())
        if ratio is not None:
            text += f"ratio={ratio!r}\n"
    else:
        text = "\n".join(r.to_text() for r in reports.values())
        if ratio is not None:
            verdict = "MD-192 slower" if ratio < 1 else "MD-192 not slower"
            text += f"\nthroughput ratio md192/sha1: {ratio:.4f} ({verdict})\n"
    _emit(text)
    return EXIT_OK


def _sample_spec(text: str) -> str:
    try:
        analysis.parse_sample(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default="text", help="output format")
    common.add_argument("--seed", type=int, default=0, help="PRNG seed")

    parser = argparse.ArgumentParser(prog="md192", description="MD-192 / SHA-1 digests and analyses.")
    sub = parser.add_subparsers(dest="command", required=True)
    algs = tuple(ALGORITHMS)

    p = sub.add_parser("digest", parents=[common], help="hash files, literals or stdin")
    p.add_argument("--alg", choices=algs, help="algorithm (default md192)")
    p.add_argument("--file", action="append", help="file to hash (repeatable)")
    p.add_argument("--string", action="append", help="literal string to hash (repeatable)")
    p.set_defaults(func=cmd_digest)

    p = sub.add_parser("kat", parents=[common], help="run known-answer tests")
    p.add_argument("--alg", choices=algs, help="only run vectors for this algorithm")
    p.add_argument("--file", action="append", help="KAT file (repeatable; default: bundled corpora)")
    p.set_defaults(func=cmd_kat)

    p = sub.add_parser("avalanche", parents=[common], help="single-bit-flip avalanche statistics")
    p.add_argument("--alg", choices=algs, help="algorithm (default md192)")
    p.add_argument("--trials", type=_positive, default=10000)
    p.add_argument("--size", type=_positive, default=64, help="message length in bytes")
    p.set_defaults(func=cmd_avalanche)

    p = sub.add_parser("expand", parents=[common], help="schedule-difference weight study")
    p.add_argument("--variant", choices=(*analysis.SCHEDULES, "all"), default="all")
    p.add_argument("--sample", type=_sample_spec, default="single-bit", help="'single-bit' or 'random:K:N'")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("bench", parents=[common], help="throughput comparison")
    p.add_argument("--alg", choices=(*algs, "both"), default="both")
    p.add_argument("--size", type=_positive, default=1 << 20, help="input size in bytes")
    p.add_argument("--reps", type=int, default=30, help="timed repetitions (>= 10)")
    p.add_argument("--engine", choices=("auto", "kernel", "python"), default="auto")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command == "bench" and args.reps < 10:
        print("md192 bench: error: --reps must be >= 10", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
