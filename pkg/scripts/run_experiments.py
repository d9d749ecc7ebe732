#!/usr/bin/env python3
"""Run the benchmark matrix at a chosen scale and leave a results
directory behind: results.csv, markdown tables, and the gas/time fit.

    python scripts/run_experiments.py --scale quick --out-dir runs/quick

Scales:
    quick   two corpora, texts to 16 KiB          (half a minute)
    medium  all corpora, texts to 16 KiB          (a few minutes)
    full    all corpora, texts to 128 KiB         (expect 15+ minutes)

Gas columns are exactly reproducible for a given config and seed; the
time column and the fit depend on the machine running this.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gasmatch.bench import (
    BenchConfig,
    DegenerateFitError,
    fit_gas_time,
    format_csv,
    run_cell,
    table_gas_fee,
    table_gas_per_char,
    table_metric_grid,
    write_atomic,
)
from gasmatch.corpus import derive_seed, generate_bytes

SCALES = {
    "quick": dict(
        corpora=("dna", "sources"),
        text_sizes=(1024, 16384),
        pattern_sizes=(4, 16, 64),
        patterns_per_cell=5,
    ),
    "medium": dict(
        corpora=("dna", "proteins", "english", "sources"),
        text_sizes=(1024, 16384),
        pattern_sizes=(4, 8, 16, 32, 64, 128),
        patterns_per_cell=7,
    ),
    "full": dict(
        corpora=("dna", "proteins", "english", "sources"),
        text_sizes=(1024, 16384, 131072),
        pattern_sizes=(4, 8, 12, 16, 24, 32, 64, 128, 256, 512),
        patterns_per_cell=11,
    ),
}


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scale", choices=sorted(SCALES), default="quick")
    parser.add_argument("--out-dir", default="runs/latest",
                        help="directory for results.csv, tables/, fit.txt")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the matrix seed")
    parser.add_argument("--gas-price", type=float, default=None,
                        help="Gwei per gas unit for the fee columns")
    parser.add_argument("--eth-usd", type=float, default=None)
    return parser.parse_args(argv)


def build_config(args) -> BenchConfig:
    overrides = dict(SCALES[args.scale])
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.gas_price is not None:
        overrides["gas_price_gwei"] = args.gas_price
    if args.eth_usd is not None:
        overrides["usd_per_eth"] = args.eth_usd
    return BenchConfig(**overrides)


def run_with_progress(config: BenchConfig):
    # Same traversal as bench.run_matrix, with a progress line per cell
    # so long runs are watchable.
    cells = sum(1 for corpus in config.corpora for n in config.text_sizes
                for m in config.pattern_sizes if m <= n) * len(config.algorithms)
    live = sys.stdout.isatty()
    done = 0
    records = []
    for corpus in config.corpora:
        for n in config.text_sizes:
            text = generate_bytes(corpus, n, derive_seed(config.seed, "text", corpus))
            for m in config.pattern_sizes:
                if m > n:
                    continue
                for algorithm in config.algorithms:
                    records.append(run_cell(algorithm, text, m, config, corpus=corpus))
                    done += 1
                    if live:
                        print(f"\r[{done}/{cells}] {corpus} n={n} m={m} "
                              f"{algorithm:<12}", end="", flush=True)
    if live:
        print()
    records.sort(key=lambda r: (r.corpus, r.n, r.m, r.algorithm))
    return records


def main(argv=None) -> int:
    args = parse_args(argv)
    config = build_config(args)
    out_dir = Path(args.out_dir)
    tables_dir = out_dir / "tables"
    out_dir.mkdir(parents=True, exist_ok=True)
    tables_dir.mkdir(exist_ok=True)

    print(f"scale={args.scale} seed={config.seed:#x} "
          f"corpora={','.join(config.corpora)}")
    started = time.perf_counter()
    records = run_with_progress(config)
    elapsed = time.perf_counter() - started
    print(f"{len(records)} cells in {elapsed:.1f}s")

    write_atomic(out_dir / "results.csv", format_csv(records))

    big_m = max(r.m for r in records)
    big_n = max(r.n for r in records)
    per_char_m = 16 if any(r.m == 16 for r in records) else min(r.m for r in records)
    write_atomic(tables_dir / "gas_fee.md",
                 table_gas_fee(records, big_m, big_n,
                               config.gas_price_gwei, config.usd_per_eth))
    write_atomic(tables_dir / "gas_per_char.md",
                 table_gas_per_char(records, per_char_m))
    for n in sorted({r.n for r in records}):
        write_atomic(tables_dir / f"gas_grid_n{n}.md",
                     table_metric_grid(records, n, metric="gas"))
        write_atomic(tables_dir / f"time_grid_n{n}.md",
                     table_metric_grid(records, n, metric="time"))

    try:
        fit = fit_gas_time(records, config.gas_price_gwei, config.usd_per_eth)
        write_atomic(out_dir / "fit.txt", fit.report())
        print(fit.report(), end="")
    except DegenerateFitError as exc:
        print(f"fit skipped: {exc}")

    print(f"results under {out_dir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
