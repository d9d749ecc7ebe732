"""Seven gas-metered exact matchers over byte text.

Every searcher reports the full, sorted set of occurrence start
positions, and a gas total produced by one shared charging model:

* text access goes through MeteredText (word_load / byte_read);
* pattern bytes are priced like text bytes (byte_read);
* a character-vs-character probe charges arith and bumps the
  outcome's comparison tally; preprocessing self-comparisons charge
  arith only, so the tally covers text work alone;
* skip tables and bit-mask tables charge table_read / table_write;
* word shifts charge shift, multiplies charge mul_div, remaining
  arithmetic and bitwise steps charge arith;
* every loop iteration, scanning or preprocessing, charges one
  branch_overhead for the jump and bookkeeping of compiled code;
* every search opens with CALL_SETUP_BRANCHES branch charges standing
  in for dispatch and argument setup; the fixed entry cost is what
  makes short texts cost more per character than long ones;
* long stringutils windows are priced as a length-dependent hash
  (keccak_base + keccak_per_word per started 32-byte block); the
  digest value itself is a 64-bit base-257 polynomial, since the cost
  model needs the hash price, not a cryptographic hash;
* each reported occurrence charges one table_write (result storage).

Running out of gas aborts a search cleanly: the outcome keeps the gas
consumed and the abort flag, and reports no positions.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .gas import DEFAULT_SCHEDULE, GasMeter, MeteredText, OutOfGas
from .wideword import ONES, WORD_BITS, WORD_BYTES, WideWord, ZERO

# Fixed per-search entry charge (in branch_overhead units).
CALL_SETUP_BRANCHES = 64

_RK_BASE = WideWord(257)
_DIGEST_BASE = 257
_DIGEST_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class Pattern:
    """A non-empty byte string to search for."""

    data: bytes

    def __post_init__(self) -> None:
        object.__setattr__(self, "data", bytes(self.data))
        if len(self.data) == 0:
            raise ValueError("empty patterns are rejected")

    @property
    def m(self) -> int:
        return len(self.data)


def _as_pattern(pattern: Pattern | bytes | bytearray) -> Pattern:
    return pattern if isinstance(pattern, Pattern) else Pattern(bytes(pattern))


@dataclass(frozen=True)
class KmpTable:
    """Longest proper prefix-suffix length for each pattern prefix."""

    skips: tuple[int, ...]


@dataclass(frozen=True)
class BmhTable:
    """Byte-indexed window shifts, 256 entries, each in 1..m."""

    shifts: tuple[int, ...]


@dataclass(frozen=True)
class BitMaskTable:
    """Byte-indexed word masks for the bit-parallel matchers.

    convention 'zero-at-match': bit j of masks[P[j]] is clear.
    convention 'one-at-match': bit j of masks[P[m-1-j]] is set.
    """

    masks: tuple[WideWord, ...]
    convention: str


@dataclass(frozen=True)
class SearchOutcome:
    """Positions plus the meter's verdict for one search."""

    positions: tuple[int, ...]
    gas_used: int
    comparisons: int
    window_alignments: int
    state_updates: int
    wall_time: float
    out_of_gas: bool = False
    counters: Mapping[str, int] = field(default_factory=dict)


@dataclass
class _Instrumentation:
    alignments: int = 0
    state_updates: int = 0


# ---------------------------------------------------------------------------
# shared pieces

def _verify_core(view: MeteredText, pat: Pattern, pos: int, meter: GasMeter) -> bool:
    meter.charge("arith")  # bounds probe
    if pos < 0 or pos + pat.m > view.n:
        return False
    data = pat.data
    read = view.read_byte
    charge = meter.charge
    probe = meter.charge_comparison
    for j in range(pat.m):
        charge("branch_overhead")
        t = read(pos + j)
        charge("byte_read")
        probe()
        if t != data[j]:
            return False
    return True


def verify_occurrence(text: bytes | MeteredText, pattern: Pattern | bytes,
                      pos: int, meter: GasMeter | None = None) -> bool:
    """Charged character-by-character check that pattern sits at pos."""
    pat = _as_pattern(pattern)
    if isinstance(text, MeteredText):
        view = text
    else:
        view = MeteredText(text, meter or GasMeter())
    return _verify_core(view, pat, pos, view.meter)


# ---------------------------------------------------------------------------
# naive

def _naive_core(view: MeteredText, pat: Pattern, meter: GasMeter,
                instr: _Instrumentation) -> list[int]:
    data = pat.data
    m = pat.m
    out: list[int] = []
    read = view.read_byte
    charge = meter.charge
    probe = meter.charge_comparison
    for pos in range(view.n - m + 1):
        instr.alignments += 1
        charge("branch_overhead")
        j = 0
        while j < m:
            charge("branch_overhead")
            t = read(pos + j)
            charge("byte_read")
            probe()
            if t != data[j]:
                break
            j += 1
        if j == m:
            charge("table_write")
            out.append(pos)
    return out


# ---------------------------------------------------------------------------
# Knuth-Morris-Pratt

def _kmp_table_core(pat: Pattern, meter: GasMeter) -> list[int]:
    data = pat.data
    m = pat.m
    skips = [0] * m
    meter.charge("table_write")  # skips[0]
    length = 0
    j = 1
    while j < m:
        meter.charge("branch_overhead")
        meter.charge("byte_read", 2)
        meter.charge("arith")  # pattern self-comparison, not tallied
        if data[j] == data[length]:
            meter.charge("arith")
            length += 1
            meter.charge("table_write")
            skips[j] = length
            j += 1
        elif length:
            meter.charge("table_read")
            length = skips[length - 1]
        else:
            meter.charge("table_write")
            j += 1
    return skips


def build_kmp_table(pattern: Pattern | bytes, meter: GasMeter | None = None) -> KmpTable:
    return KmpTable(tuple(_kmp_table_core(_as_pattern(pattern), meter or GasMeter())))


def _kmp_core(view: MeteredText, pat: Pattern, meter: GasMeter,
              instr: _Instrumentation) -> list[int]:
    skips = _kmp_table_core(pat, meter)
    data = pat.data
    m = pat.m
    n = view.n
    out: list[int] = []
    read = view.read_byte
    charge = meter.charge
    probe = meter.charge_comparison
    instr.alignments += 1
    i = 0
    j = 0
    while i < n:
        charge("branch_overhead")
        t = read(i)
        charge("byte_read")
        probe()
        if t == data[j]:
            i += 1
            j += 1
            if j == m:
                charge("arith")
                charge("table_write")
                out.append(i - m)
                charge("table_read")
                j = skips[m - 1]
                instr.alignments += 1
        elif j:
            charge("table_read")
            j = skips[j - 1]
            instr.alignments += 1
        else:
            i += 1
            instr.alignments += 1
    return out


# ---------------------------------------------------------------------------
# Boyer-Moore-Horspool

def _bmh_table_core(pat: Pattern, meter: GasMeter) -> list[int]:
    m = pat.m
    data = pat.data
    shifts = [m] * 256
    meter.charge("table_write", 256)
    meter.charge("branch_overhead", 256)
    for j in range(m - 1):
        meter.charge("branch_overhead")
        meter.charge("byte_read")
        meter.charge("arith")
        meter.charge("table_write")
        shifts[data[j]] = m - 1 - j
    return shifts


def build_bmh_table(pattern: Pattern | bytes, meter: GasMeter | None = None) -> BmhTable:
    return BmhTable(tuple(_bmh_table_core(_as_pattern(pattern), meter or GasMeter())))


def _bmh_core(view: MeteredText, pat: Pattern, meter: GasMeter,
              instr: _Instrumentation) -> list[int]:
    shifts = _bmh_table_core(pat, meter)
    data = pat.data
    m = pat.m
    last = view.n - m
    out: list[int] = []
    read = view.read_byte
    charge = meter.charge
    probe = meter.charge_comparison
    pos = 0
    while pos <= last:
        instr.alignments += 1
        charge("branch_overhead")
        end_byte = read(pos + m - 1)
        j = m - 1
        while j >= 0:
            charge("branch_overhead")
            t = end_byte if j == m - 1 else read(pos + j)
            charge("byte_read")
            probe()
            if t != data[j]:
                break
            j -= 1
        if j < 0:
            charge("table_write")
            out.append(pos)
        charge("table_read")
        charge("arith")
        pos += shifts[end_byte]
    return out


# ---------------------------------------------------------------------------
# Rabin-Karp, base 257 rolling hash mod 2**256, every hit verified

def _rk_core(view: MeteredText, pat: Pattern, meter: GasMeter,
             instr: _Instrumentation) -> list[int]:
    data = pat.data
    m = pat.m
    n = view.n
    charge = meter.charge
    read = view.read_byte
    out: list[int] = []

    top_power = WideWord(1)
    for _ in range(m - 1):
        charge("branch_overhead")
        charge("mul_div")
        charge("arith")
        top_power = top_power.mul_add(_RK_BASE, ZERO)
    charge("arith", 2)  # wrapping negation of the slide-out weight
    neg_top_power = WideWord(-top_power.value)

    pattern_hash = ZERO
    for j in range(m):
        charge("branch_overhead")
        charge("byte_read")
        charge("mul_div")
        charge("arith")
        pattern_hash = pattern_hash.mul_add(_RK_BASE, WideWord(data[j]))

    window_hash = ZERO
    for j in range(m):
        charge("branch_overhead")
        t = read(j)
        charge("mul_div")
        charge("arith")
        window_hash = window_hash.mul_add(_RK_BASE, WideWord(t))

    last = n - m
    for pos in range(last + 1):
        instr.alignments += 1
        charge("branch_overhead")
        charge("arith")  # hash equality probe
        if window_hash == pattern_hash and _verify_core(view, pat, pos, meter):
            charge("table_write")
            out.append(pos)
        if pos < last:
            out_byte = read(pos)
            in_byte = read(pos + m)
            charge("mul_div")
            charge("arith")
            slid = WideWord(out_byte).mul_add(neg_top_power, window_hash)
            charge("mul_div")
            charge("arith")
            window_hash = slid.mul_add(_RK_BASE, WideWord(in_byte))
    return out


# ---------------------------------------------------------------------------
# Shift-Or: one word update per text byte; patterns past the word width
# fall back to prefix search plus verification

def _shift_or_masks_core(pat: Pattern, meter: GasMeter) -> list[WideWord]:
    m_eff = min(pat.m, WORD_BITS)
    masks = [ONES] * 256
    meter.charge("table_write", 256)
    meter.charge("branch_overhead", 256)
    data = pat.data
    bit = WideWord(1)
    for j in range(m_eff):
        meter.charge("branch_overhead")
        meter.charge("byte_read")
        meter.charge("table_read")
        meter.charge("arith", 2)  # invert bit, clear the cell's bit
        masks[data[j]] = masks[data[j]] & ~bit
        meter.charge("table_write")
        meter.charge("shift")
        bit = bit.shift_left(1)
    return masks


def build_shift_or_masks(pattern: Pattern | bytes,
                         meter: GasMeter | None = None) -> BitMaskTable:
    masks = _shift_or_masks_core(_as_pattern(pattern), meter or GasMeter())
    return BitMaskTable(tuple(masks), convention="zero-at-match")


def _shift_or_core(view: MeteredText, pat: Pattern, meter: GasMeter,
                   instr: _Instrumentation) -> list[int]:
    m = pat.m
    m_eff = min(m, WORD_BITS)
    needs_verify = m > WORD_BITS
    masks = _shift_or_masks_core(pat, meter)
    match_bit = m_eff - 1
    out: list[int] = []
    read = view.read_byte
    charge = meter.charge
    state = ONES
    for i in range(view.n):
        charge("branch_overhead")
        c = read(i)
        charge("table_read")
        charge("shift")
        charge("arith")
        state = state.shift_left(1) | masks[c]
        instr.state_updates += 1
        charge("arith")  # match-bit probe
        if not state.test_bit(match_bit):
            charge("arith")
            start = i - m_eff + 1
            if needs_verify:
                if _verify_core(view, pat, start, meter):
                    charge("table_write")
                    out.append(start)
            else:
                charge("table_write")
                out.append(start)
    return out


# ---------------------------------------------------------------------------
# BNDM: backward window scan over the reversed-pattern masks; patterns
# past the word width use the same prefix-plus-verify strategy

def _bndm_masks_core(pat: Pattern, meter: GasMeter) -> list[WideWord]:
    m_eff = min(pat.m, WORD_BITS)
    masks = [ZERO] * 256
    meter.charge("table_write", 256)
    meter.charge("branch_overhead", 256)
    data = pat.data
    bit = WideWord(1)
    for j in range(m_eff):
        meter.charge("branch_overhead")
        meter.charge("byte_read")
        meter.charge("table_read")
        meter.charge("arith")
        masks[data[m_eff - 1 - j]] = masks[data[m_eff - 1 - j]] | bit
        meter.charge("table_write")
        meter.charge("shift")
        bit = bit.shift_left(1)
    return masks


def build_bndm_masks(pattern: Pattern | bytes,
                     meter: GasMeter | None = None) -> BitMaskTable:
    masks = _bndm_masks_core(_as_pattern(pattern), meter or GasMeter())
    return BitMaskTable(tuple(masks), convention="one-at-match")


def _bndm_core(view: MeteredText, pat: Pattern, meter: GasMeter,
               instr: _Instrumentation) -> list[int]:
    m = pat.m
    m_eff = min(m, WORD_BITS)
    needs_verify = m > WORD_BITS
    masks = _bndm_masks_core(pat, meter)
    high_bit = m_eff - 1
    charge = meter.charge
    read = view.read_byte
    charge("shift")
    full = ONES.shift_right(WORD_BITS - m_eff)
    out: list[int] = []
    last = view.n - m_eff
    pos = 0
    while pos <= last:
        instr.alignments += 1
        charge("branch_overhead")
        charge("arith")  # automaton reset
        state = full
        j = m_eff
        shift = m_eff
        while True:
            charge("branch_overhead")
            c = read(pos + j - 1)
            charge("table_read")
            charge("arith")
            state = state & masks[c]
            instr.state_updates += 1
            j -= 1
            charge("arith")  # prefix-bit probe
            if state.test_bit(high_bit):
                if j > 0:
                    charge("arith")
                    shift = j
                else:
                    if needs_verify:
                        if _verify_core(view, pat, pos, meter):
                            charge("table_write")
                            out.append(pos)
                    else:
                        charge("table_write")
                        out.append(pos)
                    break
            charge("arith")  # dead-state probe
            if j == 0 or not state:
                break
            charge("shift")
            state = state.shift_left(1)
        charge("arith")
        pos += shift
    return out


# ---------------------------------------------------------------------------
# stringutils: masked single-word compare up to 32 bytes, per-window
# digests priced as keccak past that; digest hits verified byte by byte

def _window_digest(data: bytes, start: int, m: int) -> int:
    d = 0
    for j in range(start, start + m):
        d = (d * _DIGEST_BASE + data[j]) & _DIGEST_MASK
    return d


def _stringutils_core(view: MeteredText, pat: Pattern, meter: GasMeter,
                      instr: _Instrumentation) -> list[int]:
    m = pat.m
    n = view.n
    charge = meter.charge
    out: list[int] = []

    if m <= WORD_BYTES:
        charge("word_load")  # pattern packed into a single word
        packed = WideWord.from_bytes_be(pat.data)
        charge("shift")
        charge("arith", 2)  # build the high-byte mask
        mask = ONES.shift_left(8 * (WORD_BYTES - m))
        for pos in range(n - m + 1):
            instr.alignments += 1
            charge("branch_overhead")
            word = view.load_word(pos)
            charge("arith", 2)  # mask, compare
            if (word & mask) == packed:
                charge("table_write")
                out.append(pos)
        return out

    blocks = (m + 31) // 32
    charge("arith", 2)  # digest arguments (offset, length)
    charge("keccak_base")
    charge("keccak_per_word", blocks)
    target = _window_digest(pat.data, 0, m)
    raw = view.raw
    slide_out_weight = pow(_DIGEST_BASE, m - 1, _DIGEST_MASK + 1)
    digest = -1
    for pos in range(n - m + 1):
        instr.alignments += 1
        charge("branch_overhead")
        charge("arith", 2)
        charge("keccak_base")
        charge("keccak_per_word", blocks)
        if digest < 0:
            digest = _window_digest(raw, 0, m)
        else:
            # Rolling recomputation of the same per-window digest; the
            # charge above already priced the window as one hash call.
            digest = ((digest - raw[pos - 1] * slide_out_weight) * _DIGEST_BASE
                      + raw[pos + m - 1]) & _DIGEST_MASK
        charge("arith")  # digest compare
        if digest == target and _verify_core(view, pat, pos, meter):
            charge("table_write")
            out.append(pos)
    return out


# ---------------------------------------------------------------------------
# search wrapper: prologue, bounds, abort handling, outcome assembly

_Core = Callable[[MeteredText, Pattern, GasMeter, _Instrumentation], list[int]]


def _run_search(core: _Core, text: bytes | MeteredText,
                pattern: Pattern | bytes, meter: GasMeter | None) -> SearchOutcome:
    pat = _as_pattern(pattern)
    if isinstance(text, MeteredText):
        view = text
        meter = view.meter
    else:
        meter = meter or GasMeter(DEFAULT_SCHEDULE)
        view = MeteredText(text, meter)
    instr = _Instrumentation()
    gas_before = meter.consumed
    comparisons_before = meter.comparisons
    counters_before = dict(meter.counters)
    aborted = False
    positions: tuple[int, ...] = ()
    started = time.perf_counter()
    try:
        meter.charge("branch_overhead", CALL_SETUP_BRANCHES)
        meter.charge("arith", 2)  # length checks on entry
        if pat.m <= view.n:
            positions = tuple(core(view, pat, meter, instr))
    except OutOfGas:
        aborted = True
        positions = ()
    elapsed = time.perf_counter() - started
    deltas = {k: v - counters_before.get(k, 0) for k, v in meter.counters.items()}
    return SearchOutcome(
        positions=positions,
        gas_used=meter.consumed - gas_before,
        comparisons=meter.comparisons - comparisons_before,
        window_alignments=instr.alignments,
        state_updates=instr.state_updates,
        wall_time=elapsed,
        out_of_gas=aborted,
        counters={k: v for k, v in deltas.items() if v},
    )


def search_naive(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_naive_core, text, pattern, meter)


def search_kmp(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_kmp_core, text, pattern, meter)


def search_bmh(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_bmh_core, text, pattern, meter)


def search_rk(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_rk_core, text, pattern, meter)


def search_shift_or(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_shift_or_core, text, pattern, meter)


def search_bndm(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_bndm_core, text, pattern, meter)


def search_stringutils(text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    return _run_search(_stringutils_core, text, pattern, meter)


ALGORITHMS: dict[str, Callable[..., SearchOutcome]] = {
    "naive": search_naive,
    "kmp": search_kmp,
    "bmh": search_bmh,
    "rk": search_rk,
    "so": search_shift_or,
    "bndm": search_bndm,
    "stringutils": search_stringutils,
}


def search(algorithm: str, text, pattern, meter: GasMeter | None = None) -> SearchOutcome:
    """Dispatch by registry name; see ALGORITHMS for the valid names."""
    try:
        fn = ALGORITHMS[algorithm]
    except KeyError:
        names = ", ".join(sorted(ALGORITHMS))
        raise ValueError(f"unknown algorithm {algorithm!r}; pick one of: {names}") from None
    return fn(text, pattern, meter)


def algorithm_names() -> Iterable[str]:
    return tuple(ALGORITHMS)
