#!/usr/bin/env python3
"""Show why hash hits must be verified: build two distinct 33-byte
strings whose base-257 polynomial hashes collide both modulo 2**256
(the rolling-hash width) and modulo 2**64 (the window-digest width),
plant them in one text, and watch every matcher agree anyway.

The construction writes 2**256 in balanced base 257, digits in
[-128, 128]. Splitting the digits by sign gives strings A and B with
hash(A) - hash(B) = 2**256, which both moduli divide.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gasmatch.matchers import ALGORITHMS, search


def collision_pair():
    digits = []
    value = 1 << 256
    while value:
        d = value % 257
        if d > 128:
            d -= 257
        digits.append(d)
        value = (value - d) // 257
    m = len(digits)
    a = bytes(max(digits[m - 1 - j], 0) for j in range(m))
    b = bytes(max(-digits[m - 1 - j], 0) for j in range(m))
    return a, b


def poly_hash(data, modulus):
    h = 0
    for c in data:
        h = (h * 257 + c) % modulus
    return h


def main() -> int:
    a, b = collision_pair()
    print(f"A = {a.hex()}")
    print(f"B = {b.hex()}")
    print(f"equal strings: {a == b}")
    for width in (256, 64):
        mod = 1 << width
        print(f"hash mod 2**{width}: A={poly_hash(a, mod):#x} "
              f"collides={poly_hash(a, mod) == poly_hash(b, mod)}")
    text = b"xx" + b + b"yy" + a + b"zz"
    print(f"\ntext = xx B yy A zz ({len(text)} bytes); searching for A:")
    for name in sorted(ALGORITHMS):
        outcome = search(name, text, a)
        print(f"  {name:<12} positions={list(outcome.positions)} "
              f"gas={outcome.gas_used} comparisons={outcome.comparisons}")
    print("\nrk and stringutils hash-match the B window too; byte-by-byte")
    print("verification is what keeps the false position out of the output.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
