"""Binary words of length 1..63 stored as bitmasks.

Position convention: the leftmost character b1 of the string rendering is
bit 0 of the mask, b_i is bit i-1.  So ``Word.parse("100").bits == 1``.

Besides the immutable :class:`Word` type, the module exposes a few helpers
working on raw ``int`` masks and on numpy ``uint64`` arrays; the sweeps in
the other modules use those directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

MAX_LENGTH = 63


class WordParseError(ValueError):
    """Raised when a string is not a valid binary word."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DimensionError(ValueError):
    """Raised when words of different lengths are combined."""


def _check_length(n: int) -> None:
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"word length must be in 1..{MAX_LENGTH}, got {n}")


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, order=True)
class Word:
    """A binary word, compared and ordered by ``(length, bits)``."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        _check_length(self.length)
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        return word_from_string(text)

    @classmethod
    def zeros(cls, n: int) -> "Word":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "Word":
        return cls(n, full_mask(n))

    def __str__(self) -> str:
        return render(self.bits, self.length)

    def __repr__(self) -> str:
        return f"Word('{self}')"

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        """0-based coordinate access: ``w[0]`` is b1."""
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return (self.bits >> (i % self.length)) & 1

    def __add__(self, other: "Word") -> "Word":
        return xor_add(self, other)

    def __or__(self, other: "Word") -> "Word":
        # a | b is concatenation, matching the x||y notation
        return concat(self, other)

    def __invert__(self) -> "Word":
        return complement(self)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()


def render(bits: int, n: int) -> str:
    """String rendering of a raw mask, b1 first."""
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(n))


def parse_bits(text: str) -> int:
    """Raw mask of a '0'/'1' string (no length checks beyond characters)."""
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise WordParseError(f"invalid character {ch!r} at index {i}", i)
    return bits


def word_from_string(text: str) -> Word:
    if not text:
        raise WordParseError("empty word", 0)
    if len(text) > MAX_LENGTH:
        raise WordParseError(
            f"word of length {len(text)} exceeds {MAX_LENGTH}", MAX_LENGTH
        )
    return Word(len(text), parse_bits(text))


def _same_length(a: Word, b: Word) -> None:
    if a.length != b.length:
        raise DimensionError(f"length mismatch: {a.length} vs {b.length}")


def xor_add(a: Word, b: Word) -> Word:
    _same_length(a, b)
    return Word(a.length, a.bits ^ b.bits)


def hamming_distance(a: Word, b: Word) -> int:
    _same_length(a, b)
    return (a.bits ^ b.bits).bit_count()


def parity(a: Word) -> int:
    return a.bits.bit_count() & 1


def concat(*parts: Word) -> Word:
    total = sum(p.length for p in parts)
    if total > MAX_LENGTH:
        raise DimensionError(f"concatenation of length {total} exceeds {MAX_LENGTH}")
    bits = 0
    shift = 0
    for p in parts:
        bits |= p.bits << shift
        shift += p.length
    return Word(total, bits)


def complement(a: Word) -> Word:
    return Word(a.length, a.bits ^ full_mask(a.length))


def contains_substring(s: Word, f: Word) -> bool:
    """True iff ``f`` occurs as a contiguous window of ``s``."""
    return contains_pattern_bits(s.bits, s.length, f.bits, f.length)


def contains_pattern_bits(bits: int, n: int, pattern: int, k: int) -> bool:
    if k < 1:
        raise ValueError("empty pattern")
    if k > n:
        return False
    window = full_mask(k)
    for shift in range(n - k + 1):
        if (bits >> shift) & window == pattern:
            return True
    return False


def max_run_bits(bits: int) -> int:
    run = 0
    while bits:
        bits &= bits >> 1
        run += 1
    return run


def max_run_ones(a: Word) -> int:
    """Length of the longest block of consecutive 1s."""
    return max_run_bits(a.bits)


def enumerate_words(n: int) -> Iterator[Word]:
    """All 2**n words of length n in ascending bitmask order."""
    _check_length(n)
    for bits in range(1 << n):
        yield Word(n, bits)


# -- vectorised helpers on uint64 arrays ------------------------------------

def popcount_array(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a.astype(np.uint64, copy=False))


def parity_array(a: np.ndarray) -> np.ndarray:
    return (popcount_array(a) & 1).astype(np.uint64)


def max_run_array(a: np.ndarray) -> np.ndarray:
    """Elementwise longest run of 1s."""
    cur = np.array(a, dtype=np.uint64)
    run = np.zeros(cur.shape, dtype=np.int64)
    one = np.uint64(1)
    while True:
        nz = cur != 0
        if not nz.any():
            return run
        run += nz
        cur &= cur >> one


def avoids_array(a: np.ndarray, n: int, pattern: int, k: int) -> np.ndarray:
    """Elementwise: word does not contain the k-bit ``pattern``."""
    a = np.asarray(a, dtype=np.uint64)
    if k < 1:
        raise ValueError("empty pattern")
    if k > n:
        return np.ones(a.shape, dtype=bool)
    if pattern == full_mask(k):
        # runs of ones: k-1 shift-and steps leave a set bit iff some run >= k
        cur = a.copy()
        one = np.uint64(1)
        for _ in range(k - 1):
            cur &= cur >> one
        return cur == 0
    window = np.uint64(full_mask(k))
    pat = np.uint64(pattern)
    hit = np.zeros(a.shape, dtype=bool)
    for shift in range(n - k + 1):
        hit |= ((a >> np.uint64(shift)) & window) == pat
    return ~hit
