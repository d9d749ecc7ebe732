"""Matcher behavior: positions against a brute-force oracle, the
published table structures, the instrumentation counters, and the
documented charging conventions."""
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gasmatch.gas import GasMeter, GasSchedule, MeteredText, keccak_cost
from gasmatch.matchers import (
    ALGORITHMS,
    CALL_SETUP_BRANCHES,
    Pattern,
    algorithm_names,
    build_bmh_table,
    build_bndm_masks,
    build_kmp_table,
    build_shift_or_masks,
    search,
    search_stringutils,
    verify_occurrence,
)

from support import collision_pair, find_all, poly_hash, reference_bmh_shift, reference_lps

ALL = sorted(ALGORITHMS)


def oracle_check(text: bytes, pattern: bytes):
    expected = tuple(find_all(text, pattern))
    for name in ALL:
        outcome = search(name, text, pattern)
        assert outcome.positions == expected, (name, text, pattern)
        assert not outcome.out_of_gas
    return expected


# ---------------------------------------------------------------------------
# positions

def test_worked_examples():
    assert oracle_check(b"ababab", b"abab") == (0, 2)       # overlaps count
    assert oracle_check(b"aaaa", b"aa") == (0, 1, 2)
    assert oracle_check(b"cabd", b"ab") == (1,)


def test_edge_lengths():
    oracle_check(b"x", b"x")
    oracle_check(b"xy", b"xy")          # m == n, hit
    oracle_check(b"xy", b"yx")          # m == n, miss
    for name in ALL:
        assert search(name, b"ab", b"abc").positions == ()  # m > n


def test_single_byte_patterns():
    oracle_check(b"mississippi", b"i")
    oracle_check(b"mississippi", b"q")


def test_pattern_rejects_empty():
    with pytest.raises(ValueError):
        Pattern(b"")
    with pytest.raises(ValueError):
        search("naive", b"abc", b"")


def test_pattern_accepts_bytearray():
    assert search("kmp", b"abcabc", bytearray(b"abc")).positions == (0, 3)


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        search("boyer", b"abc", b"a")
    assert set(algorithm_names()) == set(ALL)


def test_binary_bytes_are_fine():
    text = bytes([0, 255, 0, 255, 0])
    oracle_check(text, bytes([255, 0]))
    oracle_check(text, bytes([0]))


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=1 << 48),
       st.sampled_from([b"ab", b"ACGT", bytes(range(256))]),
       st.integers(min_value=1, max_value=160),
       st.integers(min_value=1, max_value=12))
def test_all_algorithms_match_oracle(seed, alphabet, n, m):
    rng = random.Random(seed)
    text = bytes(rng.choice(alphabet) for _ in range(n))
    if rng.random() < 0.5 and m <= n:
        pos = rng.randrange(0, n - m + 1)
        pattern = text[pos:pos + m]
    else:
        pattern = bytes(rng.choice(alphabet) for _ in range(m))
    oracle_check(text, pattern)


# ---------------------------------------------------------------------------
# preprocessing tables

def test_kmp_table_examples():
    assert build_kmp_table(b"abcabd").skips == (0, 0, 0, 1, 2, 0)
    assert build_kmp_table(b"aaaa").skips == (0, 1, 2, 3)
    assert build_kmp_table(b"ababaca").skips == (0, 0, 1, 2, 3, 0, 1)
    assert build_kmp_table(b"x").skips == (0,)


@given(st.binary(min_size=1, max_size=40))
def test_kmp_table_matches_reference(pattern):
    assert list(build_kmp_table(pattern).skips) == reference_lps(pattern)


def test_bmh_table_example():
    shifts = build_bmh_table(b"example").shifts
    assert len(shifts) == 256
    expected = {"e": 6, "x": 5, "a": 4, "m": 3, "p": 2, "l": 1}
    for ch, want in expected.items():
        assert shifts[ord(ch)] == want
    assert shifts[ord("z")] == 7  # absent bytes shift a full window


@given(st.binary(min_size=1, max_size=40), st.integers(min_value=0, max_value=255))
def test_bmh_table_matches_reference(pattern, byte):
    assert build_bmh_table(pattern).shifts[byte] == reference_bmh_shift(pattern, byte)


def test_shift_or_masks_convention():
    table = build_shift_or_masks(b"ab")
    assert table.convention == "zero-at-match"
    assert not table.masks[ord("a")].test_bit(0)
    assert table.masks[ord("a")].test_bit(1)
    assert not table.masks[ord("b")].test_bit(1)
    assert table.masks[ord("b")].test_bit(0)
    assert table.masks[ord("c")].value == (1 << 256) - 1


def test_bndm_masks_convention():
    table = build_bndm_masks(b"ab")
    assert table.convention == "one-at-match"
    # bit j of masks[c] is set when reversed_pattern[j] == c
    assert table.masks[ord("b")].test_bit(0)
    assert table.masks[ord("a")].test_bit(1)
    assert not table.masks[ord("a")].test_bit(0)
    assert table.masks[ord("c")].value == 0


def test_masks_use_prefix_past_word_width():
    # Only the first 256 pattern bytes get mask bits.
    pattern = bytes([1]) * 256 + bytes([2]) * 10
    table = build_shift_or_masks(pattern)
    assert table.masks[2].value == (1 << 256) - 1


# ---------------------------------------------------------------------------
# verification helper

def test_verify_occurrence():
    assert verify_occurrence(b"cabd", b"ab", 1)
    assert not verify_occurrence(b"cabd", b"ab", 0)
    assert not verify_occurrence(b"cabd", b"ab", -1)
    assert not verify_occurrence(b"cabd", b"ab", 3)  # would overrun


def test_verify_occurrence_charges():
    meter = GasMeter()
    verify_occurrence(b"cabd", b"ab", 1, meter)
    # bounds probe + per byte: branch, text read, pattern read, probe
    assert meter.consumed == 3 + 2 * (10 + 3 + 3 + 3)
    assert meter.comparisons == 2


# ---------------------------------------------------------------------------
# instrumentation counters

def test_kmp_comparisons_when_text_equals_pattern():
    outcome = search("kmp", b"hello world", b"hello world")
    assert outcome.positions == (0,)
    assert outcome.comparisons == 11  # best case: exactly n probes


def test_kmp_comparisons_bound_on_periodic_input():
    n = 500
    outcome = search("kmp", b"a" * n, b"a" * 50)
    assert outcome.comparisons <= 2 * n - 1
    assert outcome.comparisons == n  # every probe succeeds here


@given(st.integers(min_value=0, max_value=1 << 32),
       st.integers(min_value=1, max_value=300),
       st.integers(min_value=1, max_value=20))
def test_kmp_comparison_bound(seed, n, m):
    rng = random.Random(seed)
    text = bytes(rng.choice(b"ab") for _ in range(n))
    pattern = bytes(rng.choice(b"ab") for _ in range(min(m, n)))
    assert search("kmp", text, pattern).comparisons <= 2 * n - 1


def test_shift_or_updates_once_per_text_byte():
    text = b"abracadabra" * 71  # n = 781
    outcome = search("so", text, b"abra")
    assert outcome.state_updates == len(text)
    # Miss or hit, the scan never varies.
    outcome = search("so", text, b"zzzz")
    assert outcome.state_updates == len(text)


def test_shift_or_gas_ignores_alphabet():
    # Same n, same m, no occurrences: the scan costs the same gas on
    # DNA as on program text, only match bookkeeping depends on data.
    from gasmatch.corpus import generate_bytes
    a = generate_bytes("dna", 2048, 1)
    b = generate_bytes("sources", 2048, 1)
    pattern = bytes([0]) * 8  # NUL never appears in either corpus
    ga = search("so", a, pattern)
    gb = search("so", b, pattern)
    assert ga.positions == gb.positions == ()
    assert ga.gas_used == gb.gas_used


def test_best_case_alignments_absent_pattern():
    n, m = 1000, 9
    text = b"A" * n
    pattern = b"B" * m
    bound = math.ceil((n - m + 1) / m) + 1
    for name in ("bmh", "bndm"):
        outcome = search(name, text, pattern)
        assert outcome.positions == ()
        assert outcome.window_alignments <= bound


def test_naive_alignments_cover_every_window():
    outcome = search("naive", b"abcdef", b"cd")
    assert outcome.window_alignments == 5


# ---------------------------------------------------------------------------
# long patterns: prefix search plus verification

def test_long_pattern_prefix_decoy():
    # The 256-byte prefix occurs once on its own; the full pattern
    # occurs once elsewhere. Prefix hits must be verified away.
    rng = random.Random(99)
    base = bytes(rng.choice(b"ab") for _ in range(2000))
    pattern = bytes(rng.choice(b"ab") for _ in range(300))
    decoy = pattern[:256] + bytes(255 - c for c in pattern[256:])
    text = base[:400] + decoy + base[400:900] + pattern + base[900:]
    expected = tuple(find_all(text, pattern))
    assert len(expected) == 1
    for name in ALL:
        outcome = search(name, text, pattern)
        assert outcome.positions == expected, name
    assert search("so", text, pattern).state_updates == len(text)


def test_planted_long_pattern():
    rng = random.Random(3)
    pattern = bytes(rng.randrange(256) for _ in range(300))
    text = bytes(rng.randrange(256) for _ in range(300)) + pattern + bytes(100)
    for name in ALL:
        assert search(name, text, pattern).positions == (300,), name


# ---------------------------------------------------------------------------
# hash collisions are verified away

def test_rolling_hash_collision_is_rejected():
    a, b = collision_pair()
    m = len(a)
    # The pair really collides in both hash widths used here.
    assert poly_hash(a, 1 << 256) == poly_hash(b, 1 << 256)
    assert poly_hash(a, 1 << 64) == poly_hash(b, 1 << 64)
    text = b"xx" + b + b"yy" + a + b"zz"
    expected = (2 + m + 2,)
    assert find_all(text, a) == list(expected)
    for name in ("rk", "stringutils"):
        outcome = search(name, text, a)
        assert outcome.positions == expected, name
        # Verification ran on the colliding window too, so there are
        # more probes than the true occurrence alone needs.
        assert outcome.comparisons > m


# ---------------------------------------------------------------------------
# charging conventions

def test_gas_is_dot_product_of_counters():
    schedule = GasSchedule()
    costs = schedule.as_dict()
    text = b"the quick brown fox jumps over the lazy dog"
    for name in ALL:
        outcome = search(name, text, b"the")
        total = sum(costs[k] * v for k, v in outcome.counters.items())
        assert outcome.gas_used == total, name
        assert outcome.wall_time >= 0.0


def test_entry_cost_is_charged_even_without_scan():
    # m > n: only the prologue runs.
    schedule = GasSchedule()
    want = CALL_SETUP_BRANCHES * schedule.branch_overhead + 2 * schedule.arith
    for name in ALL:
        outcome = search(name, b"ab", b"abc")
        assert outcome.gas_used == want, name


def test_schedule_override_scales_gas():
    cheap = GasSchedule(branch_overhead=0)
    base = search("naive", b"abcabc", b"abc", GasMeter()).gas_used
    reduced = search("naive", b"abcabc", b"abc", GasMeter(cheap)).gas_used
    assert reduced < base


def test_stringutils_word_compare_per_window_cost():
    # Below 33 bytes a window costs one branch, one word load and two
    # arith charges; no keccak is involved.
    def per_window(m):
        pattern = bytes([1]) * m
        g100 = search_stringutils(bytes([2]) * (m + 99), pattern).gas_used
        g200 = search_stringutils(bytes([2]) * (m + 199), pattern).gas_used
        assert (g200 - g100) % 100 == 0
        return (g200 - g100) // 100

    s = GasSchedule()
    assert per_window(32) == s.branch_overhead + s.word_load + 2 * s.arith  # 19
    assert per_window(8) == per_window(32)


def test_stringutils_digest_cliff():
    # Past the single-word limit every window pays a length-dependent
    # hash price; at m=64 the per-window cost exceeds the m=32 cost by
    # at least keccak_cost(64).
    def per_window(m):
        pattern = bytes([1]) * m
        g100 = search_stringutils(bytes([2]) * (m + 99), pattern).gas_used
        g200 = search_stringutils(bytes([2]) * (m + 199), pattern).gas_used
        return (g200 - g100) // 100

    gap = per_window(64) - per_window(32)
    assert gap >= keccak_cost(64)
    assert per_window(64) == 61 and per_window(32) == 19
    # Longer patterns hash more 32-byte blocks per window.
    assert per_window(96) > per_window(64)


def test_stringutils_digest_path_finds_overlaps():
    text = b"ab" * 40
    pattern = b"ab" * 17  # m = 34, digest path
    assert search_stringutils(text, pattern).positions == tuple(find_all(text, pattern))


def test_metered_text_input_reuses_meter():
    meter = GasMeter()
    view = MeteredText(b"abcabc", meter)
    outcome = search("naive", view, b"abc")
    assert outcome.positions == (0, 3)
    assert meter.consumed == outcome.gas_used


# ---------------------------------------------------------------------------
# out-of-gas semantics

def test_out_of_gas_aborts_cleanly():
    text = b"abcabcabc" * 50
    pattern = b"abc"
    for name in ALL:
        full = search(name, text, pattern, GasMeter()).gas_used
        for limit in (0, 1, full // 10, full // 2, full - 1):
            meter = GasMeter(limit=limit)
            outcome = search(name, text, pattern, meter)
            assert outcome.out_of_gas, (name, limit)
            assert outcome.positions == (), (name, limit)
            assert outcome.gas_used <= limit, (name, limit)
            assert meter.consumed == outcome.gas_used


def test_exact_limit_is_enough():
    for name in ALL:
        full = search(name, b"abcabcabc", b"abc", GasMeter()).gas_used
        outcome = search(name, b"abcabcabc", b"abc", GasMeter(limit=full))
        assert not outcome.out_of_gas
        assert outcome.positions == (0, 3, 6)
