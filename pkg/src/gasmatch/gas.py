"""EVM-style cost accounting: a schedule of per-primitive prices, a
metered counter with an optional limit, and a byte buffer whose reads
are charged to the meter.

The schedule is a model, not a fork-accurate opcode table. Two anchors
are taken from public EVM pricing (3 gas for a 256-bit add/compare,
5 gas per byte of transaction data); the rest price the primitive
operations the matchers are built from, so that relative costs between
algorithms are meaningful.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from pathlib import Path


class OutOfGas(Exception):
    """A charge would have pushed consumption past the meter's limit."""

    def __init__(self, kind: str, needed: int, limit: int):
        self.kind = kind
        self.needed = needed
        self.limit = limit
        super().__init__(f"out of gas charging {kind}: need {needed}, limit {limit}")


@dataclass(frozen=True)
class GasSchedule:
    """Gas price of each primitive operation kind.

    branch_overhead is charged once per loop iteration and stands in
    for the jump and bookkeeping cost of compiled control flow.
    keccak pricing is length-dependent: base plus per started 32-byte
    word. calldata_per_byte prices transaction input and is accounted
    separately from execution gas.
    """

    word_load: int = 3
    byte_read: int = 3
    arith: int = 3
    mul_div: int = 5
    shift: int = 3
    table_read: int = 3
    table_write: int = 6
    branch_overhead: int = 10
    keccak_base: int = 30
    keccak_per_word: int = 6
    calldata_per_byte: int = 5

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            cost = getattr(self, field.name)
            if not isinstance(cost, int) or isinstance(cost, bool) or cost < 0:
                raise ValueError(f"{field.name} must be a non-negative integer, got {cost!r}")

    def as_dict(self) -> dict[str, int]:
        return dataclasses.asdict(self)

    @classmethod
    def from_text(cls, text: str) -> "GasSchedule":
        """Parse `key = integer` lines; '#' starts a comment, every key optional."""
        overrides = parse_config_lines(text)
        known = {f.name for f in dataclasses.fields(cls)}
        for key, raw in overrides.items():
            if key not in known:
                raise ValueError(f"unknown schedule key: {key}")
            if not _is_plain_int(raw):
                raise ValueError(f"schedule key {key} needs an integer, got {raw!r}")
        return cls(**{k: int(v) for k, v in overrides.items()})

    @classmethod
    def from_file(cls, path: str | Path) -> "GasSchedule":
        return cls.from_text(Path(path).read_text())


DEFAULT_SCHEDULE = GasSchedule()
KINDS = tuple(f.name for f in dataclasses.fields(GasSchedule))


def _is_plain_int(raw: str) -> bool:
    try:
        int(raw)
    except ValueError:
        return False
    return True


def parse_config_lines(text: str) -> dict[str, str]:
    """Split `key = value` assignments out of structured text.

    Shared line format for schedule files and benchmark config files.
    Values are returned verbatim; callers coerce them.
    """
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = body.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        if key in out:
            raise ValueError(f"line {lineno}: duplicate key {key}")
        out[key] = value
    return out


def keccak_cost(length: int, schedule: GasSchedule = DEFAULT_SCHEDULE) -> int:
    """Price of hashing `length` bytes: base plus per started 32-byte word."""
    if length < 0:
        raise ValueError("length must be non-negative")
    return schedule.keccak_base + schedule.keccak_per_word * ((length + 31) // 32)


def calldata_cost(text_len: int, pattern_len: int, schedule: GasSchedule = DEFAULT_SCHEDULE) -> int:
    """Price of shipping text and pattern as transaction input.

    Reported separately by the tools; never folded into search gas.
    """
    if text_len < 0 or pattern_len < 0:
        raise ValueError("lengths must be non-negative")
    return (text_len + pattern_len) * schedule.calldata_per_byte


class GasMeter:
    """Monotone gas counter with per-kind tallies and an optional limit.

    consumed always equals the dot product of the tallies with the
    schedule costs. A charge that would exceed the limit raises
    OutOfGas and leaves the meter unchanged. One meter serves one
    search at a time.
    """

    __slots__ = ("schedule", "limit", "consumed", "comparisons", "counters", "_costs")

    def __init__(self, schedule: GasSchedule | None = None, limit: int | None = None):
        if limit is not None and limit < 0:
            raise ValueError("limit must be non-negative")
        self.schedule = schedule or DEFAULT_SCHEDULE
        self.limit = limit
        self.consumed = 0
        self.comparisons = 0
        self.counters: dict[str, int] = {}
        self._costs = self.schedule.as_dict()

    def charge(self, kind: str, count: int = 1) -> None:
        if count < 0:
            raise ValueError("count must be non-negative")
        total = self.consumed + self._costs[kind] * count
        if self.limit is not None and total > self.limit:
            raise OutOfGas(kind, total, self.limit)
        self.consumed = total
        self.counters[kind] = self.counters.get(kind, 0) + count

    def charge_comparison(self, count: int = 1) -> None:
        """A character-vs-character probe: arith price plus the tally
        the linearity bounds are stated over."""
        self.charge("arith", count)
        self.comparisons += count

    def charge_keccak(self, length: int) -> None:
        """Length-dependent hash charge, split across both keccak kinds."""
        if length < 0:
            raise ValueError("length must be non-negative")
        self.charge("keccak_base")
        self.charge("keccak_per_word", (length + 31) // 32)

    @property
    def remaining(self) -> int | None:
        return None if self.limit is None else self.limit - self.consumed


class MeteredText:
    """Byte buffer whose reads charge an attached meter.

    Reads past the end yield zero bytes, the way EVM memory reads
    zero-extend, so matchers never need tail guards for word loads.
    """

    __slots__ = ("_data", "_meter", "_n")

    def __init__(self, data: bytes, meter: GasMeter):
        self._data = bytes(data)
        self._meter = meter
        self._n = len(self._data)

    @property
    def n(self) -> int:
        return self._n

    @property
    def meter(self) -> GasMeter:
        return self._meter

    @property
    def raw(self) -> bytes:
        """Unmetered view for primitives that carry their own composite
        charge (the window digest); everything else must read through
        read_byte or load_word."""
        return self._data

    def read_byte(self, index: int) -> int:
        if index < 0:
            raise ValueError("index must be non-negative")
        self._meter.charge("byte_read")
        return self._data[index] if index < self._n else 0

    def load_word(self, offset: int):
        """32 bytes starting at offset as one WideWord, zero-padded past the end."""
        from .wideword import WideWord

        if offset < 0:
            raise ValueError("offset must be non-negative")
        self._meter.charge("word_load")
        return WideWord.from_bytes_be(self._data[offset:offset + 32])
