"""Subgraphs of the hypercube induced by words avoiding a forbidden pattern.

``gamma(n, s)`` is the generalized Fibonacci cube on words of length n with
no run of s consecutive ones; ``gamma(n, 2)`` is the ordinary Fibonacci cube.
Adjacency is computed on the fly from single bit flips.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterator

import numpy as np

from .bitword import (
    MAX_LENGTH,
    Word,
    avoids_array,
    contains_pattern_bits,
    full_mask,
    render,
)

#: largest n for which the vertex set is enumerated in full
ENUMERATION_CAP = 30
#: largest n for which a 2**n membership table is built
TABLE_CAP = 25


class CapacityError(RuntimeError):
    """The requested sweep exceeds the configured size budget."""


class MembershipError(ValueError):
    """A word is not a vertex of the graph."""

    def __init__(self, message: str, word: Word | None = None):
        super().__init__(message)
        self.word = word


def vertex_count(n: int, s: int) -> int:
    """Number of words of length n without a run of s ones.

    Uses a(k) = 2**k for k < s and a(k) = a(k-1) + ... + a(k-s) otherwise.
    """
    if n < 1 or s < 1:
        raise ValueError("n and s must be positive")
    a = [1 << k for k in range(min(s, n + 1))]
    for k in range(len(a), n + 1):
        a.append(sum(a[k - s:k]))
    return a[n]


class AvoidanceGraph:
    """Induced subgraph of Q_n on the words that avoid ``pattern``."""

    def __init__(self, n: int, pattern: Word):
        if not 1 <= n <= MAX_LENGTH:
            raise ValueError(f"n must be in 1..{MAX_LENGTH}")
        self.n = n
        self.pattern = pattern
        self.run_length = (
            pattern.length if pattern.bits == full_mask(pattern.length) else None
        )

    @property
    def is_cube(self) -> bool:
        return self.pattern.length > self.n

    @property
    def descriptor(self) -> str:
        if self.is_cube:
            return f"Q_{self.n}"
        if self.run_length is not None:
            return f"Gamma_{self.n}(1^{self.run_length})"
        return f"Gamma_{self.n}({self.pattern})"

    def __repr__(self) -> str:
        return f"AvoidanceGraph({self.descriptor})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AvoidanceGraph):
            return NotImplemented
        return self.n == other.n and self.pattern == other.pattern

    def __hash__(self) -> int:
        return hash((self.n, self.pattern))

    def contains_bits(self, bits: int) -> bool:
        return not contains_pattern_bits(
            bits, self.n, self.pattern.bits, self.pattern.length
        )

    def __contains__(self, v: Word) -> bool:
        return v.length == self.n and self.contains_bits(v.bits)

    @cached_property
    def vertex_count(self) -> int:
        if self.run_length is not None:
            return vertex_count(self.n, self.run_length)
        return int(self.member_table().sum())

    def avoids(self, masks: np.ndarray) -> np.ndarray:
        return avoids_array(masks, self.n, self.pattern.bits, self.pattern.length)

    def member_table(self) -> np.ndarray:
        """Boolean table over all 2**n masks (n <= 25)."""
        if self.n > TABLE_CAP:
            raise CapacityError(f"membership table needs n <= {TABLE_CAP}")
        return self.avoids(np.arange(1 << self.n, dtype=np.uint64))

    def vertex_masks(self) -> np.ndarray:
        """Ascending uint64 array of vertex masks."""
        if self.n > ENUMERATION_CAP:
            raise CapacityError(f"vertex enumeration needs n <= {ENUMERATION_CAP}")
        out = []
        step = 1 << 22
        for lo in range(0, 1 << self.n, step):
            block = np.arange(lo, min(lo + step, 1 << self.n), dtype=np.uint64)
            out.append(block[self.avoids(block)])
        return np.concatenate(out)

    def vertices(self) -> Iterator[Word]:
        if self.n > ENUMERATION_CAP:
            raise CapacityError(f"vertex enumeration needs n <= {ENUMERATION_CAP}")
        n = self.n
        for bits in range(1 << n):
            if self.contains_bits(bits):
                yield Word(n, bits)

    def neighbor_bits(self, bits: int) -> list[int]:
        return [
            bits ^ (1 << i)
            for i in range(self.n)
            if self.contains_bits(bits ^ (1 << i))
        ]

    def neighbors(self, v: Word) -> list[Word]:
        """Avoiding single-bit flips of ``v`` in ascending mask order."""
        if v not in self:
            raise MembershipError(f"{v} is not a vertex of {self.descriptor}", v)
        return [Word(self.n, b) for b in sorted(self.neighbor_bits(v.bits))]

    def degree(self, v: Word) -> int:
        return len(self.neighbors(v))

    def render(self, bits: int) -> str:
        return render(bits, self.n)


def gamma(n: int, s: int) -> AvoidanceGraph:
    """Gamma_n(1^s); any s > n gives the full cube Q_n."""
    if s < 1:
        raise ValueError("s must be >= 1")
    s = min(s, n + 1, MAX_LENGTH)
    return AvoidanceGraph(n, Word.ones(s))


def cube(n: int) -> AvoidanceGraph:
    return gamma(n, n + 1)


def verify_perfect_in_gamma(code, g: AvoidanceGraph):
    """Perfect-code check inside ``g`` using its own closed neighbourhoods."""
    from .codes import verify_in_graph

    return verify_in_graph(code, g)
