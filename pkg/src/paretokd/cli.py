"""Command line front end.

Subcommands: maxima, layers, mlcs, bench, expect.  Points travel as TSV
(one point per line, tab- or space-separated decimals); benchmark results
leave as CSV.  Exit status 0 on success, 1 on usage errors, 2 on input
files that cannot be parsed.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .analytics import EXPECTATION_MODELS, expected_value
from .bench import (
    ALGORITHM_IDS,
    DISTRIBUTION_KINDS,
    Distribution,
    ExperimentSpec,
    run_algorithm,
    run_experiment,
    write_csv,
)
from .layers import deb_layers, peel_layers
from .mlcs import ENGINES, mlcs
from .points import CostCounter, Point

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2


class InputError(Exception):
    """A problem with an input file (missing, malformed, wrong arity)."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this tool reserves 2 for bad
    # input files, so remap.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def read_points(path: str) -> list[Point]:
    """Parse a TSV point file; blank lines are skipped.

    Malformed rows (non-numeric, inconsistent arity, non-finite values)
    raise InputError naming the 1-based line number.
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None
    pts: list[Point] = []
    dim: Optional[int] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        try:
            coords = tuple(float(p) for p in parts)
        except ValueError:
            raise InputError(f"{path}:{lineno}: non-numeric value in row") from None
        if dim is None:
            dim = len(coords)
        elif len(coords) != dim:
            raise InputError(
                f"{path}:{lineno}: expected {dim} coordinates, got {len(coords)}"
            )
        for c in coords:
            if not math.isfinite(c):
                raise InputError(f"{path}:{lineno}: non-finite coordinate {c!r}")
        pts.append(Point(coords, len(pts)))
    return pts


def read_sequences(path: str) -> list[str]:
    """Read one ASCII sequence per line (trailing newline ignored)."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None
    seqs = text.splitlines()
    for lineno, s in enumerate(seqs, start=1):
        if not s.isascii():
            raise InputError(f"{path}:{lineno}: non-ASCII sequence")
    if len(seqs) < 2:
        raise InputError(f"{path}: need at least 2 sequences, got {len(seqs)}")
    return seqs


def _format_point(p: Point) -> str:
    return "\t".join(format(c, ".12g") for c in p.coords)


def _cmd_maxima(args: argparse.Namespace) -> int:
    pts = read_points(args.input)
    counter = CostCounter()
    maxima, _ = run_algorithm(args.algo, pts, counter)
    for p in maxima:
        print(_format_point(p))
    print(
        f"points={len(pts)} maxima={len(maxima)} "
        f"scalar_comparisons={counter.scalar_comparisons} "
        f"dominated_calls={counter.dominated_calls}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_layers(args: argparse.Namespace) -> int:
    pts = read_points(args.input)
    counter = CostCounter()
    if args.method == "deb":
        part = deb_layers(pts, counter)
    else:
        part = peel_layers(pts, engine=args.method, counter=counter)
    by_index = {p.index: p for p in pts}
    for k, layer in enumerate(part.layers, start=1):
        for idx in layer:
            print(f"{k}\t{_format_point(by_index[idx])}")
    print(
        f"points={len(pts)} layers={part.depth} "
        f"scalar_comparisons={counter.scalar_comparisons} "
        f"dominated_calls={counter.dominated_calls}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_mlcs(args: argparse.Namespace) -> int:
    seqs = read_sequences(args.input)
    counter = CostCounter()
    result = mlcs(seqs, engine=args.engine, counter=counter)
    print(f"{result.length}\t{result.witness}")
    print("layer_sizes\t" + ",".join(str(s) for s in result.layer_sizes))
    print(
        f"sequences={len(seqs)} length={result.length} "
        f"scalar_comparisons={counter.scalar_comparisons} "
        f"dominated_calls={counter.dominated_calls}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    dist = Distribution(args.dist, args.dim)
    algos = tuple(args.algos.split(","))
    records = []
    for n in args.n:
        spec = ExperimentSpec(
            distribution=dist,
            n=n,
            trials=args.trials,
            algorithms=algos,
            seed=args.seed,
        )
        records.extend(run_experiment(spec))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    if args.figures:
        from .plotting import render_bench_figures

        for path in render_bench_figures(records, Path(args.figures)):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def _cmd_expect(args: argparse.Namespace) -> int:
    value = expected_value(args.model, args.n, args.dim)
    print(f"{args.model}\t{args.n}\t{args.dim}\t{value!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="paretokd",
        description="Maxima, maximal layers, and common subsequences of point sets.",
    )
    parser.add_argument("--version", action="version", version=f"paretokd {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maxima", help="maxima (Pareto front) of a TSV point file")
    p.add_argument("--input", required=True, help="TSV file, one point per line")
    p.add_argument("--algo", default="2phase", choices=ALGORITHM_IDS)
    p.set_defaults(func=_cmd_maxima)

    p = sub.add_parser("layers", help="maximal layers of a TSV point file")
    p.add_argument("--input", required=True, help="TSV file, one point per line")
    p.add_argument("--method", default="maxima", choices=("maxima", "naive", "deb"))
    p.set_defaults(func=_cmd_layers)

    p = sub.add_parser("mlcs", help="longest common subsequence of 2+ sequences")
    p.add_argument("--input", required=True, help="text file, one sequence per line")
    p.add_argument("--engine", default="hakata-imai", choices=ENGINES)
    p.set_defaults(func=_cmd_mlcs)

    p = sub.add_parser("bench", help="seeded benchmark sweep, CSV out")
    p.add_argument("--dist", required=True, choices=DISTRIBUTION_KINDS)
    p.add_argument("--dim", required=True, type=int)
    p.add_argument(
        "--n", required=True, type=int, action="append", help="repeatable sweep value"
    )
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--algos", default="2phase", help="comma-separated algorithm ids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--figures", help="directory for rendered PNG figures")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("expect", help="closed-form expected counts")
    p.add_argument("--model", required=True, choices=sorted(EXPECTATION_MODELS))
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=_cmd_expect)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
