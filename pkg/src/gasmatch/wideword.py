"""Fixed-width 256-bit unsigned words.

The bit-parallel matchers and the rolling-hash arithmetic run on a
256-bit machine word. Values wrap modulo 2**256. Byte serialization is
big-endian, and inputs shorter than 32 bytes are left-aligned (packed
toward the most significant byte), matching how string data is packed
into EVM words.
"""
from __future__ import annotations

from dataclasses import dataclass

WORD_BITS = 256
WORD_BYTES = 32
_MASK = (1 << WORD_BITS) - 1


@dataclass(frozen=True, slots=True)
class WideWord:
    """An unsigned integer reduced modulo 2**256."""

    value: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value & _MASK)

    @classmethod
    def from_bytes_be(cls, data: bytes) -> "WideWord":
        """Pack up to 32 bytes, left-aligned; missing low bytes are zero."""
        data = bytes(data)
        if len(data) > WORD_BYTES:
            raise ValueError(f"at most {WORD_BYTES} bytes fit in a word, got {len(data)}")
        return cls(int.from_bytes(data, "big") << (8 * (WORD_BYTES - len(data))))

    def to_bytes_be(self) -> bytes:
        return self.value.to_bytes(WORD_BYTES, "big")

    def shift_left(self, count: int) -> "WideWord":
        # Shift counts 0..256 are all legal; 256 clears the word.
        if not 0 <= count <= WORD_BITS:
            raise ValueError(f"shift count must be in 0..{WORD_BITS}, got {count}")
        return WideWord((self.value << count) & _MASK)

    def shift_right(self, count: int) -> "WideWord":
        if not 0 <= count <= WORD_BITS:
            raise ValueError(f"shift count must be in 0..{WORD_BITS}, got {count}")
        return WideWord(self.value >> count)

    def test_bit(self, index: int) -> bool:
        """True when bit `index` is set; bit 0 is least significant."""
        if not 0 <= index < WORD_BITS:
            raise ValueError(f"bit index must be in 0..{WORD_BITS - 1}, got {index}")
        return (self.value >> index) & 1 == 1

    def mul_add(self, factor: "WideWord", addend: "WideWord") -> "WideWord":
        """self * factor + addend, wrapped modulo 2**256."""
        return WideWord(self.value * factor.value + addend.value)

    def __and__(self, other: "WideWord") -> "WideWord":
        return WideWord(self.value & other.value)

    def __or__(self, other: "WideWord") -> "WideWord":
        return WideWord(self.value | other.value)

    def __invert__(self) -> "WideWord":
        return WideWord(~self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"WideWord(0x{self.value:064x})"


ZERO = WideWord(0)
ONE = WideWord(1)
ONES = WideWord(_MASK)
