"""Seeded synthetic corpora and pattern sampling.

Four generator families mimic the alphabet size and repetition
structure of classic text-search datasets:

* dna      - uniform over ACGT (sigma 4)
* proteins - uniform over the 20 amino-acid letters (sigma 20)
* english  - skewed letter frequencies, space-separated words (sigma 27)
* sources  - printable-ASCII program text with indentation and keyword
             repetition (sigma around 96)

A loader for real corpus files takes byte-exact prefixes. All
generation is driven by a splitmix64 stream, so a (kind, n, seed)
triple reproduces the same bytes on any platform. Only self-consistency
is promised; no byte equality with any other implementation.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

_U64 = (1 << 64) - 1


def mix64(state: int) -> int:
    """One splitmix64 output step for `state` (finalizer only)."""
    z = (state + 0x9E3779B97F4A7C15) & _U64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
    return z ^ (z >> 31)


def derive_seed(*parts: int | str) -> int:
    """Fold strings and integers into one 64-bit sub-stream seed."""
    h = 0x8C2F_1D1E_6A09_E667
    for part in parts:
        if isinstance(part, str):
            for b in part.encode():
                h = mix64(h ^ b)
        else:
            h = mix64(h ^ (part & _U64))
    return h


class SplitMix64:
    """Deterministic 64-bit stream; the only randomness source here."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _U64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _U64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound). Plain modulo; the bias at
        corpus-sized bounds is far below anything the suite measures."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def choice_weighted(self, cumulative: list[int], total: int) -> int:
        """Index into a cumulative integer weight table."""
        r = self.below(total)
        lo, hi = 0, len(cumulative) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if r < cumulative[mid]:
                hi = mid
            else:
                lo = mid + 1
        return lo


DNA_ALPHABET = b"ACGT"
PROTEIN_ALPHABET = b"ACDEFGHIKLMNPQRSTVWY"

# Per-mille letter weights, roughly standard English unigram frequencies.
_ENGLISH_LETTERS = b"etaoinshrdlcumwfgypbvkjxqz"
_ENGLISH_WEIGHTS = [127, 91, 82, 75, 70, 67, 63, 61, 60, 43, 40, 28, 24,
                    24, 24, 22, 20, 20, 19, 15, 10, 8, 2, 2, 1, 1]
_ENGLISH_CUM: list[int] = []
_acc = 0
for _w in _ENGLISH_WEIGHTS:
    _acc += _w
    _ENGLISH_CUM.append(_acc)
_ENGLISH_TOTAL = _acc

# Word length distribution for english text, weights out of 100.
_WORD_LEN = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]
_WORD_LEN_WEIGHTS = [3, 8, 14, 16, 14, 11, 9, 7, 5, 3, 3, 7]
_WORD_LEN_CUM: list[int] = []
_acc = 0
for _w in _WORD_LEN_WEIGHTS:
    _acc += _w
    _WORD_LEN_CUM.append(_acc)
_WORD_LEN_TOTAL = _acc

_SOURCE_KEYWORDS = (b"if", b"else", b"for", b"while", b"return", b"break",
                    b"switch", b"case", b"static", b"const", b"struct",
                    b"int", b"char", b"void", b"double", b"size_t",
                    b"unsigned", b"typedef", b"sizeof", b"continue")
_SOURCE_TYPES = (b"Buffer", b"Node", b"Table", b"State", b"Cursor", b"Span")
_SOURCE_OPS = (b" = ", b" += ", b" == ", b" != ", b" < ", b" > ", b" + ",
               b" - ", b" * ", b" / ", b" && ", b" || ", b" << ", b" >> ")
_SOURCE_PUNCT = (b";", b");", b") {", b"};", b",", b"));")
_IDENT_HEAD = b"abcdefghijklmnopqrstuvwxyz"
_IDENT_TAIL = b"abcdefghijklmnopqrstuvwxyz_0123456789"
_STRING_CHARS = bytes(c for c in range(0x20, 0x7F) if c not in b'"\\')

CORPUS_KINDS = ("dna", "proteins", "english", "sources")


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate or load: kind, size in bytes, stream seed."""

    kind: str
    n: int
    seed: int = 0
    path: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in CORPUS_KINDS and self.kind != "file":
            raise ValueError(f"unknown corpus kind: {self.kind!r}")
        if self.n < 1:
            raise ValueError("corpus size must be at least 1 byte")
        if self.kind == "file" and not self.path:
            raise ValueError("file corpus needs a path")


def _uniform(alphabet: bytes, n: int, rng: SplitMix64) -> bytes:
    sigma = len(alphabet)
    return bytes(alphabet[rng.below(sigma)] for _ in range(n))


def _english(n: int, rng: SplitMix64) -> bytes:
    chunks: list[bytes] = []
    size = 0
    while size < n:
        length = _WORD_LEN[rng.choice_weighted(_WORD_LEN_CUM, _WORD_LEN_TOTAL)]
        word = bytes(_ENGLISH_LETTERS[rng.choice_weighted(_ENGLISH_CUM, _ENGLISH_TOTAL)]
                     for _ in range(length))
        chunks.append(word)
        chunks.append(b" ")
        size += length + 1
    return b"".join(chunks)[:n]


def _identifier(rng: SplitMix64) -> bytes:
    length = 2 + rng.below(7)
    head = _IDENT_HEAD[rng.below(len(_IDENT_HEAD))]
    tail = bytes(_IDENT_TAIL[rng.below(len(_IDENT_TAIL))] for _ in range(length))
    return bytes([head]) + tail


def _source_line(rng: SplitMix64, depth: int) -> bytes:
    pieces: list[bytes] = [b"    " * depth]
    roll = rng.below(10)
    if roll < 3:
        kw = _SOURCE_KEYWORDS[rng.below(len(_SOURCE_KEYWORDS))]
        pieces += [kw, b" (", _identifier(rng),
                   _SOURCE_OPS[rng.below(len(_SOURCE_OPS))],
                   str(rng.below(10000)).encode(), b") {"]
    elif roll < 6:
        pieces += [_identifier(rng), _SOURCE_OPS[rng.below(len(_SOURCE_OPS))],
                   _identifier(rng),
                   _SOURCE_PUNCT[rng.below(len(_SOURCE_PUNCT))]]
    elif roll < 8:
        pieces += [_SOURCE_TYPES[rng.below(len(_SOURCE_TYPES))], b" *",
                   _identifier(rng), b" = ", _identifier(rng), b"(",
                   str(rng.below(256)).encode(), b");"]
    elif roll == 8:
        literal = bytes(_STRING_CHARS[rng.below(len(_STRING_CHARS))]
                        for _ in range(3 + rng.below(12)))
        pieces += [_identifier(rng), b'("', literal, b'");']
    else:
        pieces += [b"}" if depth else b"/* " + _identifier(rng) + b" */"]
    pieces.append(b"\n")
    return b"".join(pieces)


def _sources(n: int, rng: SplitMix64) -> bytes:
    chunks: list[bytes] = []
    size = 0
    depth = 0
    while size < n:
        line = _source_line(rng, depth)
        roll = rng.below(8)
        if roll == 0 and depth < 3:
            depth += 1
        elif roll == 1 and depth > 0:
            depth -= 1
        chunks.append(line)
        size += len(line)
    return b"".join(chunks)[:n]


def generate_bytes(kind: str, n: int, seed: int) -> bytes:
    """Exactly n synthetic bytes of the requested kind."""
    if n < 1:
        raise ValueError("corpus size must be at least 1 byte")
    rng = SplitMix64(derive_seed(kind, n, seed))
    if kind == "dna":
        return _uniform(DNA_ALPHABET, n, rng)
    if kind == "proteins":
        return _uniform(PROTEIN_ALPHABET, n, rng)
    if kind == "english":
        return _english(n, rng)
    if kind == "sources":
        return _sources(n, rng)
    raise ValueError(f"unknown corpus kind: {kind!r}")


def generate(spec: CorpusSpec) -> bytes:
    if spec.kind == "file":
        assert spec.path is not None
        return load_file(spec.path, spec.n)
    return generate_bytes(spec.kind, spec.n, spec.seed)


def load_file(path: str | Path, n: int) -> bytes:
    """First n raw bytes of a corpus file (no decoding, no headers)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    with open(path, "rb") as fh:
        data = fh.read(n)
    if len(data) < n:
        raise ValueError(f"{path}: wanted {n} bytes, file holds {len(data)}")
    return data


def sample_patterns(text: bytes, m: int, count: int, seed: int) -> list[bytes]:
    """`count` verbatim substrings of length m at seeded uniform offsets.

    Sampling from the text itself guarantees every pattern occurs at
    least once. Duplicates are allowed, as with any uniform draw.
    """
    n = len(text)
    if m < 1:
        raise ValueError("pattern length must be at least 1")
    if count < 1:
        raise ValueError("count must be at least 1")
    if m > n:
        raise ValueError(f"pattern length {m} exceeds text length {n}")
    rng = SplitMix64(derive_seed("patterns", m, count, seed))
    return [bytes(text[off:off + m])
            for off in (rng.below(n - m + 1) for _ in range(count))]
