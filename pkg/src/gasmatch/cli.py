"""Command-line front end: search, gen, bench, report.

Exit codes: 0 success, 1 usage error, 2 I/O or data error, 3 a search
ran out of gas. Output files are written via a temporary sibling and
renamed, so a failed run never leaves a partial file behind.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .bench import (BenchConfig, config_from_file, fit_gas_time, read_csv,
                    run_matrix, table_gas_fee, table_gas_per_char,
                    table_metric_grid, write_atomic, DegenerateFitError)
from .corpus import CORPUS_KINDS, generate_bytes, load_file
from .gas import GasMeter, GasSchedule, calldata_cost
from .matchers import ALGORITHMS, search

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_OUT_OF_GAS = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit status 2 on bad flags; this suite
    reserves 2 for I/O, so usage problems exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="gasmatch",
                     description="Gas-metered exact pattern matching tools")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    sp = sub.add_parser("search", help="run one or all matchers over a text")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", metavar="FILE", help="file to search (raw bytes)")
    src.add_argument("--corpus", choices=CORPUS_KINDS,
                     help="generate a synthetic text instead of reading a file")
    sp.add_argument("--n", type=int, default=16384,
                    help="synthetic text size in bytes (default 16384)")
    sp.add_argument("--seed", type=int, default=0, help="synthetic text seed")
    pat = sp.add_mutually_exclusive_group(required=True)
    pat.add_argument("--pattern", help="pattern as text (latin-1 bytes)")
    pat.add_argument("--pattern-hex", help="pattern as hex for binary bytes")
    sp.add_argument("--algorithm", default="all",
                    choices=sorted(ALGORITHMS) + ["all"],
                    help="matcher to run (default all)")
    sp.add_argument("--schedule", metavar="FILE",
                    help="gas schedule overrides, key = integer lines")
    sp.add_argument("--gas-limit", type=int, default=None,
                    help="abort any search that would exceed this gas")
    sp.set_defaults(func=cmd_search)

    gp = sub.add_parser("gen", help="write a synthetic corpus to a file")
    gp.add_argument("--corpus", choices=CORPUS_KINDS, required=True)
    gp.add_argument("--n", type=int, required=True, help="size in bytes")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--out", metavar="FILE", required=True)
    gp.set_defaults(func=cmd_gen)

    bp = sub.add_parser("bench", help="run the benchmark matrix, emit CSV")
    bp.add_argument("--config", metavar="FILE",
                    help="key = value lines; bench keys plus schedule keys")
    bp.add_argument("--corpora", help="comma list (default all four kinds)")
    bp.add_argument("--text-sizes", help="comma list of text sizes in bytes")
    bp.add_argument("--pattern-sizes", help="comma list of pattern sizes")
    bp.add_argument("--algorithms", help="comma list (default all seven)")
    bp.add_argument("--patterns", type=int, help="patterns per cell (odd)")
    bp.add_argument("--seed", type=int, help="matrix seed")
    bp.add_argument("--gas-price", type=float, help="Gwei per gas unit")
    bp.add_argument("--eth-usd", type=float, help="USD per ETH")
    bp.add_argument("--gas-limit", type=int, help="per-search gas limit")
    bp.add_argument("--schedule", metavar="FILE", help="gas schedule overrides")
    bp.add_argument("--out", metavar="FILE", help="CSV destination (default stdout)")
    bp.add_argument("--tables", metavar="DIR",
                    help="also write markdown summary tables here")
    bp.set_defaults(func=cmd_bench)

    rp = sub.add_parser("report", help="derive tables and fits from a results CSV")
    rp.add_argument("--csv", metavar="FILE", required=True)
    rp.add_argument("--fees", action="store_true",
                    help="gas and dollar fee table at one (n, m) point")
    rp.add_argument("--gas-per-char", action="store_true",
                    help="per-character gas across text sizes at one m")
    rp.add_argument("--fit", action="store_true",
                    help="least-squares gas-versus-time line")
    rp.add_argument("--m", type=int, help="pattern size for tables")
    rp.add_argument("--n", type=int, help="text size for the fee table")
    rp.add_argument("--gas-price", type=float, default=25.0)
    rp.add_argument("--eth-usd", type=float, default=1250.0)
    rp.set_defaults(func=cmd_report)
    return parser


def _load_schedule(path: str | None) -> GasSchedule:
    if path is None:
        return GasSchedule()
    try:
        return GasSchedule.from_file(path)
    except OSError as exc:
        raise CliError(f"cannot read schedule: {exc}", EXIT_IO) from exc
    except ValueError as exc:
        raise CliError(f"bad schedule file: {exc}", EXIT_USAGE) from exc


def _search_inputs(args) -> tuple[bytes, bytes]:
    if args.text is not None:
        try:
            text = Path(args.text).read_bytes()
        except OSError as exc:
            raise CliError(f"cannot read text: {exc}", EXIT_IO) from exc
    else:
        if args.n < 1:
            raise CliError("--n must be at least 1", EXIT_USAGE)
        text = generate_bytes(args.corpus, args.n, args.seed)
    if args.pattern is not None:
        try:
            pattern = args.pattern.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise CliError("--pattern only carries byte-sized characters; "
                           "use --pattern-hex", EXIT_USAGE) from exc
    else:
        try:
            pattern = bytes.fromhex(args.pattern_hex)
        except ValueError as exc:
            raise CliError(f"bad --pattern-hex: {exc}", EXIT_USAGE) from exc
    if len(pattern) == 0:
        raise CliError("empty patterns are rejected", EXIT_USAGE)
    return text, pattern


def cmd_search(args) -> int:
    schedule = _load_schedule(args.schedule)
    if args.gas_limit is not None and args.gas_limit < 0:
        raise CliError("--gas-limit must be non-negative", EXIT_USAGE)
    text, pattern = _search_inputs(args)
    names = sorted(ALGORITHMS) if args.algorithm == "all" else [args.algorithm]
    print(f"text bytes: {len(text)}  pattern bytes: {len(pattern)}")
    print(f"calldata cost (charged separately): "
          f"{calldata_cost(len(text), len(pattern), schedule)}")
    any_abort = False
    shown_positions = False
    for name in names:
        meter = GasMeter(schedule, args.gas_limit)
        outcome = search(name, text, pattern, meter)
        if outcome.out_of_gas:
            any_abort = True
            print(f"{name}: out of gas after {outcome.gas_used} "
                  f"(limit {args.gas_limit}); no positions reported")
            continue
        if not shown_positions:
            shown = " ".join(map(str, outcome.positions[:20]))
            more = "" if len(outcome.positions) <= 20 else " ..."
            print(f"positions ({len(outcome.positions)}): {shown}{more}")
            shown_positions = True
        print(f"{name}: gas={outcome.gas_used} comparisons={outcome.comparisons} "
              f"alignments={outcome.window_alignments} "
              f"time={outcome.wall_time:.6f}s")
    return EXIT_OUT_OF_GAS if any_abort else EXIT_OK


def cmd_gen(args) -> int:
    if args.n < 1:
        raise CliError("--n must be at least 1", EXIT_USAGE)
    data = generate_bytes(args.corpus, args.n, args.seed)
    try:
        write_atomic(args.out, data)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from exc
    print(f"wrote {len(data)} bytes of {args.corpus} to {args.out}")
    return EXIT_OK


def _bench_config(args) -> BenchConfig:
    config = BenchConfig()
    if args.config:
        try:
            config = config_from_file(args.config, base=config)
        except OSError as exc:
            raise CliError(f"cannot read config: {exc}", EXIT_IO) from exc
        except ValueError as exc:
            raise CliError(f"bad config file: {exc}", EXIT_USAGE) from exc
    updates: dict[str, object] = {}
    if args.schedule:
        updates["schedule"] = _load_schedule(args.schedule)
    if args.corpora:
        updates["corpora"] = tuple(p.strip() for p in args.corpora.split(","))
    if args.algorithms:
        updates["algorithms"] = tuple(p.strip() for p in args.algorithms.split(","))
    if args.text_sizes:
        updates["text_sizes"] = tuple(int(p) for p in args.text_sizes.split(","))
    if args.pattern_sizes:
        updates["pattern_sizes"] = tuple(int(p) for p in args.pattern_sizes.split(","))
    if args.patterns is not None:
        updates["patterns_per_cell"] = args.patterns
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.gas_price is not None:
        updates["gas_price_gwei"] = args.gas_price
    if args.eth_usd is not None:
        updates["usd_per_eth"] = args.eth_usd
    if args.gas_limit is not None:
        updates["gas_limit"] = args.gas_limit
    try:
        from dataclasses import replace
        return replace(config, **updates) if updates else config
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc


def cmd_bench(args) -> int:
    config = _bench_config(args)
    records = run_matrix(config)
    csv_text = bench_mod.format_csv(records)
    if args.out:
        try:
            write_atomic(args.out, csv_text)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from exc
        print(f"wrote {len(records)} rows to {args.out}")
    else:
        sys.stdout.write(csv_text)
    if args.tables:
        table_dir = Path(args.tables)
        try:
            table_dir.mkdir(parents=True, exist_ok=True)
            big_m = max(r.m for r in records)
            big_n = max(r.n for r in records)
            per_char_m = 16 if any(r.m == 16 for r in records) else min(r.m for r in records)
            write_atomic(table_dir / "gas_fee.md",
                         table_gas_fee(records, big_m, big_n,
                                       config.gas_price_gwei, config.usd_per_eth))
            write_atomic(table_dir / "gas_per_char.md",
                         table_gas_per_char(records, per_char_m))
            for n in sorted({r.n for r in records}):
                write_atomic(table_dir / f"gas_grid_n{n}.md",
                             table_metric_grid(records, n, metric="gas"))
        except OSError as exc:
            raise CliError(f"cannot write tables: {exc}", EXIT_IO) from exc
        print(f"wrote tables to {table_dir}")
    if any(r.out_of_gas for r in records):
        print("warning: at least one cell ran out of gas", file=sys.stderr)
        return EXIT_OUT_OF_GAS
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        records = read_csv(args.csv)
    except OSError as exc:
        raise CliError(f"cannot read {args.csv}: {exc}", EXIT_IO) from exc
    except ValueError as exc:
        raise CliError(str(exc), EXIT_IO) from exc
    if not (args.fees or args.gas_per_char or args.fit):
        raise CliError("nothing to report; pass --fees, --gas-per-char or --fit",
                       EXIT_USAGE)
    if args.fees:
        m = args.m if args.m is not None else max(r.m for r in records)
        n = args.n if args.n is not None else max(r.n for r in records)
        print(table_gas_fee(records, m, n, args.gas_price, args.eth_usd))
    if args.gas_per_char:
        if args.m is not None:
            m = args.m
        elif any(r.m == 16 for r in records):
            m = 16
        else:
            m = min(r.m for r in records)
        print(table_gas_per_char(records, m))
    if args.fit:
        try:
            fit = fit_gas_time(records, args.gas_price, args.eth_usd)
        except DegenerateFitError as exc:
            raise CliError(f"cannot fit: {exc}", EXIT_IO) from exc
        print(fit.report())
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"gasmatch: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
