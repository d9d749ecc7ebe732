"""Shared oracles and case generators.

Everything here is deliberately written against the dumbest possible
reference implementations, independent of the package internals, so a
bug in the library cannot hide in its own test harness.
"""
import random

# ---------------------------------------------------------------------------
# reference implementations

def find_all(text: bytes, pattern: bytes) -> list[int]:
    """Every occurrence start, overlaps included, by slicing."""
    m = len(pattern)
    return [i for i in range(len(text) - m + 1) if text[i:i + m] == pattern]


def reference_lps(pattern: bytes) -> list[int]:
    """Longest proper prefix of pattern[:i+1] that is also its suffix,
    found by trying every candidate length, longest first."""
    out = []
    for i in range(len(pattern)):
        chunk = pattern[:i + 1]
        best = 0
        for k in range(i, 0, -1):
            if chunk[:k] == chunk[-k:]:
                best = k
                break
        out.append(best)
    return out


def reference_bmh_shift(pattern: bytes, byte: int) -> int:
    """Window advance for the byte under the window's last cell."""
    m = len(pattern)
    head = pattern[:-1]
    if byte in head:
        return m - 1 - max(i for i, c in enumerate(head) if c == byte)
    return m


def poly_hash(data: bytes, modulus: int) -> int:
    """Base-257 polynomial hash, most significant byte first."""
    h = 0
    for c in data:
        h = (h * 257 + c) % modulus
    return h


def collision_pair() -> tuple[bytes, bytes]:
    """Two distinct equal-length strings whose base-257 polynomial
    hashes agree both mod 2**256 and mod 2**64.

    Write 2**256 in balanced base 257 (digits in [-128, 128]).  The
    positive digits become bytes of one string, the negated negative
    digits bytes of the other; zeros go to both.  The hash difference
    is then exactly 2**256, which either modulus divides.
    """
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
    assert a != b and len(a) == len(b)
    return a, b


# ---------------------------------------------------------------------------
# randomized case stream for the cross-algorithm suites

ALPHABETS = {
    2: b"ab",
    4: b"ACGT",
    20: b"ACDEFGHIKLMNPQRSTVWY",
    96: bytes(range(32, 128)),
    256: bytes(range(256)),
}


def _one_case(rng: random.Random, alphabet: bytes, idx: int, per_sigma: int):
    frac = idx / per_sigma
    if frac < 0.75:
        n = rng.randint(32, 1024)
    elif frac < 0.95:
        n = rng.randint(1025, 8192)
    elif frac < 0.99:
        n = 16384
    else:
        n = 65536

    # The first three indices pin the corners of the m range; the rest
    # draw from a mix weighted toward short patterns.
    if idx == 0:
        m = 1
    elif idx == 1:
        m = 512
        n = max(n, 600)
    elif idx == 2:
        m = rng.randint(257, 512)
        n = max(n, m + rng.randint(0, 256))
    else:
        r = rng.random()
        if r < 0.40:
            m = rng.randint(1, 16)
        elif r < 0.70:
            m = rng.randint(17, 64)
        elif r < 0.90:
            m = rng.randint(65, 256)
        else:
            m = rng.randint(257, 512)
        m = min(m, n)

    periodic = rng.random() < 0.08
    if periodic:
        # Repetitive text is the worst case for the quadratic matchers;
        # keep these cases small so the suite stays fast.
        n = min(n, 2048)
        m = min(m, 64, n)
        unit = bytes(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
        text = (unit * (n // len(unit) + 1))[:n]
    else:
        text = bytes(rng.choice(alphabet) for _ in range(n))

    q = rng.random()
    if q < 0.55:
        pos = rng.randrange(0, n - m + 1)
        pattern = text[pos:pos + m]
    elif q < 0.92:
        pattern = bytes(rng.choice(alphabet) for _ in range(m))
    else:
        # near miss: one corrupted byte in an otherwise planted window
        pos = rng.randrange(0, n - m + 1)
        window = bytearray(text[pos:pos + m])
        flip = rng.randrange(m)
        window[flip] = (window[flip] + 1) % 256
        pattern = bytes(window)
    return text, pattern


def iter_cases(per_sigma: int = 200, seed: int = 1796):
    """Deterministic stream of (sigma, text, pattern) triples covering
    alphabet sizes 2..256, n up to 65536 and m from 1 to 512."""
    for sigma in sorted(ALPHABETS):
        alphabet = ALPHABETS[sigma]
        rng = random.Random(seed * 1009 + sigma)
        for idx in range(per_sigma):
            text, pattern = _one_case(rng, alphabet, idx, per_sigma)
            yield sigma, text, pattern
