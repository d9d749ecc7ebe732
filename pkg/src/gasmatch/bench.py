"""Benchmark harness: grids of (corpus, text size, pattern size,
algorithm) cells, medians over a fixed pattern count per cell, fee
conversion, CSV and markdown emission, and a gas-versus-time fit.

Gas numbers are deterministic for a given config and seed. Wall times
are environment-specific and never part of any equality check.
"""
from __future__ import annotations

import statistics
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import CORPUS_KINDS, derive_seed, generate_bytes, sample_patterns
from .gas import GasSchedule, GasMeter, parse_config_lines
from .matchers import ALGORITHMS, SearchOutcome, search

ALGORITHM_NAMES = tuple(ALGORITHMS)
DEFAULT_TEXT_SIZES = (1024, 16384, 131072)
DEFAULT_PATTERN_SIZES = (4, 8, 12, 16, 24, 32, 64, 128, 256, 512)
CSV_HEADER = "corpus,n,m,algorithm,median_gas,median_time_s,fee_usd,gas_per_char"

GWEI_PER_ETH = 1e9


class DegenerateFitError(ValueError):
    """Too few points, or no spread in the time axis."""


@dataclass(frozen=True)
class BenchConfig:
    """Everything a matrix run depends on, gas-wise."""

    algorithms: tuple[str, ...] = ALGORITHM_NAMES
    corpora: tuple[str, ...] = CORPUS_KINDS
    text_sizes: tuple[int, ...] = DEFAULT_TEXT_SIZES
    pattern_sizes: tuple[int, ...] = DEFAULT_PATTERN_SIZES
    patterns_per_cell: int = 11
    seed: int = 0x5EED
    gas_price_gwei: float = 25.0
    usd_per_eth: float = 1250.0
    schedule: GasSchedule = field(default_factory=GasSchedule)
    gas_limit: int | None = None

    def __post_init__(self) -> None:
        if not self.algorithms or not self.corpora:
            raise ValueError("algorithms and corpora must be non-empty")
        for name in self.algorithms:
            if name not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {name!r}")
        for kind in self.corpora:
            if kind not in CORPUS_KINDS:
                raise ValueError(f"unknown corpus kind {kind!r}")
        if not self.text_sizes or not self.pattern_sizes:
            raise ValueError("size grids must be non-empty")
        if any(n < 1 for n in self.text_sizes) or any(m < 1 for m in self.pattern_sizes):
            raise ValueError("sizes must be positive")
        # An odd count keeps the median an actual sample element.
        if self.patterns_per_cell < 1 or self.patterns_per_cell % 2 == 0:
            raise ValueError("patterns_per_cell must be a positive odd number")
        if self.gas_price_gwei < 0 or self.usd_per_eth < 0:
            raise ValueError("prices must be non-negative")


@dataclass(frozen=True)
class BenchRecord:
    """One grid cell: medians over the cell's patterns plus fee math."""

    corpus: str
    n: int
    m: int
    algorithm: str
    median_gas: int
    median_time: float
    fee_usd: float
    gas_per_char: float
    out_of_gas: bool = False
    outcomes: tuple[SearchOutcome, ...] = ()


def exact_median(values: Sequence) -> object:
    """Middle element of the sorted values; the count must be odd."""
    if not values:
        raise ValueError("no values")
    if len(values) % 2 == 0:
        raise ValueError("median over an even count would interpolate")
    return sorted(values)[len(values) // 2]


def fee_usd(gas: float, gas_price_gwei: float, usd_per_eth: float) -> float:
    """Dollar cost of `gas` at a given gas price and ETH price."""
    if gas < 0 or gas_price_gwei < 0 or usd_per_eth < 0:
        raise ValueError("fee inputs must be non-negative")
    return gas * gas_price_gwei / GWEI_PER_ETH * usd_per_eth


def gas_per_char(median_gas: float, n: int) -> float:
    if n < 1:
        raise ValueError("text size must be positive")
    return median_gas / n


def run_cell(algorithm: str, text: bytes, m: int, config: BenchConfig,
             corpus: str = "file") -> BenchRecord:
    """Search every sampled pattern of one cell on a fresh meter each."""
    n = len(text)
    cell_seed = derive_seed(config.seed, corpus, n, m)
    patterns = sample_patterns(text, m, config.patterns_per_cell, cell_seed)
    outcomes = []
    for pat in patterns:
        meter = GasMeter(config.schedule, config.gas_limit)
        outcomes.append(search(algorithm, text, pat, meter))
    median_gas = int(exact_median([o.gas_used for o in outcomes]))
    median_time = float(exact_median([o.wall_time for o in outcomes]))
    return BenchRecord(
        corpus=corpus,
        n=n,
        m=m,
        algorithm=algorithm,
        median_gas=median_gas,
        median_time=median_time,
        fee_usd=fee_usd(median_gas, config.gas_price_gwei, config.usd_per_eth),
        gas_per_char=gas_per_char(median_gas, n),
        out_of_gas=any(o.out_of_gas for o in outcomes),
        outcomes=tuple(outcomes),
    )


def run_matrix(config: BenchConfig) -> list[BenchRecord]:
    """Full grid; cells with m > n are skipped. Sequential on purpose,
    so wall times are not polluted by sibling cells."""
    records: list[BenchRecord] = []
    for corpus in config.corpora:
        for n in config.text_sizes:
            text = generate_bytes(corpus, n, derive_seed(config.seed, "text", corpus))
            for m in config.pattern_sizes:
                if m > n:
                    continue
                for algorithm in config.algorithms:
                    records.append(run_cell(algorithm, text, m, config, corpus=corpus))
    records.sort(key=lambda r: (r.corpus, r.n, r.m, r.algorithm))
    return records


# ---------------------------------------------------------------------------
# CSV

def format_csv(records: Iterable[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(f"{r.corpus},{r.n},{r.m},{r.algorithm},{r.median_gas},"
                     f"{r.median_time:.9f},{r.fee_usd:.6f},{r.gas_per_char:.6f}")
    return "\n".join(lines) + "\n"


def write_csv(records: Iterable[BenchRecord], path: str | Path) -> None:
    write_atomic(path, format_csv(records))


def read_csv(path: str | Path) -> list[BenchRecord]:
    """Records back from a results file (without per-pattern outcomes)."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty results file")
    if lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: unexpected header {lines[0]!r}")
    records = []
    for line in lines[1:]:
        if not line:
            continue
        corpus, n, m, algorithm, gas, seconds, fee, per_char = line.split(",")
        records.append(BenchRecord(
            corpus=corpus, n=int(n), m=int(m), algorithm=algorithm,
            median_gas=int(gas), median_time=float(seconds),
            fee_usd=float(fee), gas_per_char=float(per_char)))
    if not records:
        raise ValueError(f"{path}: no data rows")
    return records


def write_atomic(path: str | Path, payload: str | bytes) -> None:
    """Write-then-rename so failures never leave partial files."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    if isinstance(payload, str):
        tmp.write_text(payload)
    else:
        tmp.write_bytes(payload)
    tmp.replace(path)


# ---------------------------------------------------------------------------
# markdown tables

def _subset(records: Iterable[BenchRecord], **want) -> list[BenchRecord]:
    out = []
    for r in records:
        if all(getattr(r, k) == v for k, v in want.items()):
            out.append(r)
    return out


def table_gas_fee(records: Iterable[BenchRecord], m: int, n: int,
                  gas_price_gwei: float = 25.0, usd_per_eth: float = 1250.0) -> str:
    """Per-algorithm gas (millions) and USD fee, one corpus pair per column."""
    rows = _subset(list(records), m=m, n=n)
    corpora = sorted({r.corpus for r in rows})
    algorithms = sorted({r.algorithm for r in rows})
    by_key = {(r.corpus, r.algorithm): r for r in rows}
    header = "| algorithm |" + "".join(f" {c} Mgas | {c} fee |" for c in corpora)
    rule = "|---|" + "---|---|" * len(corpora)
    lines = [f"gas and fee at n={n}, m={m} "
             f"({gas_price_gwei:g} Gwei, {usd_per_eth:g} USD/ETH)", "", header, rule]
    for algorithm in algorithms:
        cells = []
        for corpus in corpora:
            r = by_key.get((corpus, algorithm))
            if r is None:
                cells.append(" - | - |")
            else:
                fee = fee_usd(r.median_gas, gas_price_gwei, usd_per_eth)
                cells.append(f" {r.median_gas / 1e6:.2f} | ${fee:,.2f} |")
        lines.append(f"| {algorithm} |" + "".join(cells))
    return "\n".join(lines) + "\n"


def table_gas_per_char(records: Iterable[BenchRecord], m: int) -> str:
    """Gas per text character across text sizes, one algorithm per column."""
    rows = _subset(list(records), m=m)
    algorithms = sorted({r.algorithm for r in rows})
    keys = sorted({(r.corpus, r.n) for r in rows})
    by_key = {(r.corpus, r.n, r.algorithm): r for r in rows}
    header = "| corpus | n |" + "".join(f" {a} |" for a in algorithms)
    rule = "|---|---|" + "---|" * len(algorithms)
    lines = [f"gas per character at m={m}", "", header, rule]
    for corpus, n in keys:
        cells = []
        for algorithm in algorithms:
            r = by_key.get((corpus, n, algorithm))
            cells.append(f" {r.gas_per_char:.2f} |" if r else " - |")
        lines.append(f"| {corpus} | {n} |" + "".join(cells))
    return "\n".join(lines) + "\n"


def table_metric_grid(records: Iterable[BenchRecord], n: int,
                      metric: str = "gas") -> str:
    """Pattern-size grid per (corpus, algorithm) row: median gas in
    millions, or median seconds."""
    if metric not in ("gas", "time"):
        raise ValueError("metric must be 'gas' or 'time'")
    rows = _subset(list(records), n=n)
    sizes = sorted({r.m for r in rows})
    keys = sorted({(r.corpus, r.algorithm) for r in rows})
    by_key = {(r.corpus, r.algorithm, r.m): r for r in rows}
    header = "| corpus | algorithm |" + "".join(f" m={m} |" for m in sizes)
    rule = "|---|---|" + "---|" * len(sizes)
    unit = "Mgas" if metric == "gas" else "seconds"
    lines = [f"median {unit} at n={n}", "", header, rule]
    for corpus, algorithm in keys:
        cells = []
        for m in sizes:
            r = by_key.get((corpus, algorithm, m))
            if r is None:
                cells.append(" - |")
            elif metric == "gas":
                cells.append(f" {r.median_gas / 1e6:.3f} |")
            else:
                cells.append(f" {r.median_time:.4f} |")
        lines.append(f"| {corpus} | {algorithm} |" + "".join(cells))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# gas-versus-time fit

@dataclass(frozen=True)
class FitResult:
    """Least-squares line through (seconds, gas) plus its dollar slope."""

    slope_gas_per_second: float
    intercept_gas: float
    usd_per_second: float

    def report(self) -> str:
        return (f"gas = {self.slope_gas_per_second:.6g} * seconds "
                f"+ {self.intercept_gas:.6g}\n"
                f"implied rate: ${self.usd_per_second:,.2f} per second of execution "
                f"(environment-specific; do not compare across machines)\n")


def fit_gas_time(records: Sequence[BenchRecord], gas_price_gwei: float = 25.0,
                 usd_per_eth: float = 1250.0) -> FitResult:
    """Ordinary least squares of median gas against median seconds."""
    if len(records) < 2:
        raise DegenerateFitError("need at least two cells to fit a line")
    times = [r.median_time for r in records]
    gases = [float(r.median_gas) for r in records]
    if max(times) == min(times):
        raise DegenerateFitError("no spread in the time axis")
    try:
        slope, intercept = statistics.linear_regression(times, gases)
    except statistics.StatisticsError as exc:
        raise DegenerateFitError(str(exc)) from exc
    return FitResult(
        slope_gas_per_second=slope,
        intercept_gas=intercept,
        usd_per_second=fee_usd(slope, gas_price_gwei, usd_per_eth),
    )


# ---------------------------------------------------------------------------
# config files

_LIST_KEYS = {"algorithms", "corpora", "text_sizes", "pattern_sizes"}
_INT_KEYS = {"patterns_per_cell", "seed", "gas_limit"}
_FLOAT_KEYS = {"gas_price_gwei", "usd_per_eth"}
_SCHEDULE_KEYS = set(GasSchedule().as_dict())


def config_from_text(text: str, base: BenchConfig | None = None) -> BenchConfig:
    """Benchmark config from `key = value` lines.

    Accepts the bench keys (lists are comma-separated) and, in the same
    file, any gas schedule key; unknown keys are rejected.
    """
    base = base or BenchConfig()
    raw = parse_config_lines(text)
    schedule_overrides: dict[str, int] = {}
    updates: dict[str, object] = {}
    for key, value in raw.items():
        if key in _SCHEDULE_KEYS:
            schedule_overrides[key] = int(value)
        elif key in _LIST_KEYS:
            parts = tuple(p.strip() for p in value.split(",") if p.strip())
            if key in ("text_sizes", "pattern_sizes"):
                updates[key] = tuple(int(p) for p in parts)
            else:
                updates[key] = parts
        elif key in _INT_KEYS:
            updates[key] = int(value)
        elif key in _FLOAT_KEYS:
            updates[key] = float(value)
        else:
            raise ValueError(f"unknown config key: {key}")
    if schedule_overrides:
        updates["schedule"] = GasSchedule(**{**base.schedule.as_dict(),
                                             **schedule_overrides})
    return replace(base, **updates)


def config_from_file(path: str | Path, base: BenchConfig | None = None) -> BenchConfig:
    return config_from_text(Path(path).read_text(), base=base)
