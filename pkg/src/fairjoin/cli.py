"""Command-line entry point: ``fairjoin bench`` and ``fairjoin intersect``."""

from __future__ import annotations

import argparse
import sys

from fairjoin.bench import ASSOCS, CSV_COLUMNS, MODES, BenchConfig, DataError, format_row, intersect_files, run_bench

EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _choices(allowed):
    def parse(text: str) -> tuple[str, ...]:
        items = tuple(x for x in text.split(",") if x)
        bad = [x for x in items if x not in allowed]
        if bad or not items:
            raise argparse.ArgumentTypeError(f"expected a comma-separated subset of {','.join(allowed)}")
        return items

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fairjoin", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bench", help="time the evens/odds/ends intersections")
    b.add_argument("--n", type=int, default=30_000_000, help="largest key (default 30000000)")
    b.add_argument("--modes", type=_choices(MODES), default=MODES)
    b.add_argument("--assoc", type=_choices(ASSOCS), default=ASSOCS)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--format", choices=("human", "csv"), default="human")
    b.add_argument("--no-pairs", action="store_true", help="skip the two-way cases")

    i = sub.add_parser("intersect", help="print keys common to all files")
    i.add_argument("--mode", choices=MODES, default="fair")
    i.add_argument("--assoc", choices=ASSOCS, default="left")
    i.add_argument("files", nargs="+", metavar="FILE")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "bench":
        try:
            cfg = BenchConfig(args.n, args.modes, args.assoc, args.repeat, args.format, not args.no_pairs)
        except ValueError as e:
            parser.error(str(e))
        if cfg.format == "csv":
            print(",".join(CSV_COLUMNS), flush=True)
        for row in run_bench(cfg):
            print(format_row(row, cfg.format), flush=True)
        return 0

    if len(args.files) < 2:
        parser.error("intersect needs at least two files")
    try:
        lines = list(intersect_files(args.files, args.mode, args.assoc))
    except DataError as e:
        print(f"fairjoin: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"fairjoin: {e}", file=sys.stderr)
        return EXIT_USAGE
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
