"""Gas-metered exact pattern matching on a 256-bit machine word."""

from .wideword import ONE, ONES, WORD_BITS, WORD_BYTES, WideWord, ZERO
from .gas import (DEFAULT_SCHEDULE, GasMeter, GasSchedule, MeteredText,
                  OutOfGas, calldata_cost, keccak_cost)
from .matchers import (ALGORITHMS, CALL_SETUP_BRANCHES, BitMaskTable, BmhTable,
                       KmpTable, Pattern, SearchOutcome, build_bmh_table,
                       build_bndm_masks, build_kmp_table, build_shift_or_masks,
                       search, search_bmh, search_bndm, search_kmp,
                       search_naive, search_rk, search_shift_or,
                       search_stringutils, verify_occurrence)
from .corpus import (CORPUS_KINDS, CorpusSpec, SplitMix64, derive_seed,
                     generate, generate_bytes, load_file, mix64,
                     sample_patterns)
from .bench import (BenchConfig, BenchRecord, DegenerateFitError, FitResult,
                    config_from_file, config_from_text, exact_median, fee_usd,
                    fit_gas_time, format_csv, gas_per_char, read_csv,
                    run_cell, run_matrix, table_gas_fee, table_gas_per_char,
                    table_metric_grid, write_atomic, write_csv)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS", "BenchConfig", "BenchRecord", "BitMaskTable", "BmhTable",
    "CALL_SETUP_BRANCHES", "CORPUS_KINDS", "CorpusSpec", "DEFAULT_SCHEDULE",
    "DegenerateFitError", "FitResult", "GasMeter", "GasSchedule",
    "KmpTable", "MeteredText", "ONE", "ONES", "OutOfGas", "Pattern",
    "SearchOutcome", "SplitMix64", "WORD_BITS", "WORD_BYTES", "WideWord",
    "ZERO", "build_bmh_table", "build_bndm_masks", "build_kmp_table",
    "build_shift_or_masks", "calldata_cost", "config_from_file",
    "config_from_text", "derive_seed", "exact_median", "fee_usd",
    "fit_gas_time", "format_csv", "gas_per_char", "generate",
    "generate_bytes", "keccak_cost", "load_file", "mix64", "read_csv",
    "run_cell", "run_matrix", "sample_patterns", "search", "search_bmh",
    "search_bndm", "search_kmp", "search_naive", "search_rk",
    "search_shift_or", "search_stringutils", "table_gas_fee",
    "table_gas_per_char", "table_metric_grid", "verify_occurrence",
    "write_atomic", "write_csv",
]
