"""Perfect codes in Q_n: constructions and verification.

Codes are held as sorted ``uint64`` mask arrays.  The central construction
is the Vasilev doubling step

    C' = { x || (parity(x) + f(c)) || (x + c) : x in B_r, c in C }

which turns a perfect code of Q_r into one of Q_{2r+1} for any 0/1 bias
function f.  With f == 0 starting from {0} it gives the Hamming codes;
:func:`run_avoiding_bias` picks f so that no codeword has a long run of ones.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .avoidance import TABLE_CAP, AvoidanceGraph, CapacityError, MembershipError, cube
from .bitword import (
    MAX_LENGTH,
    DimensionError,
    Word,
    full_mask,
    max_run_array,
    parity_array,
    parse_bits,
    render,
)

#: largest code materialised in memory by :func:`vasilev_extend`
MATERIALIZE_CAP = 1 << 24


class Code:
    """A set of equal-length words, kept sorted and deduplicated."""

    __slots__ = ("n", "masks")

    def __init__(self, n: int, masks: np.ndarray):
        if not 1 <= n <= MAX_LENGTH:
            raise ValueError(f"n must be in 1..{MAX_LENGTH}")
        masks = np.unique(np.asarray(masks, dtype=np.uint64))
        if masks.size and int(masks[-1]) >> n:
            raise DimensionError(f"mask {int(masks[-1]):#x} does not fit length {n}")
        masks.setflags(write=False)
        self.n = n
        self.masks = masks

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Code":
        return cls(n, np.fromiter(masks, dtype=np.uint64))

    @classmethod
    def from_words(cls, words: Iterable[Word], n: int | None = None) -> "Code":
        words = list(words)
        if n is None:
            if not words:
                raise ValueError("cannot infer n from an empty word list")
            n = words[0].length
        for w in words:
            if w.length != n:
                raise DimensionError(f"word {w} has length {w.length}, expected {n}")
        return cls.from_masks(n, (w.bits for w in words))

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Code":
        return cls.from_words(Word.parse(t) for t in strings)

    @property
    def words(self) -> list[Word]:
        return [Word(self.n, int(b)) for b in self.masks]

    def strings(self) -> list[str]:
        return [render(int(b), self.n) for b in self.masks]

    def __len__(self) -> int:
        return int(self.masks.size)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w: Word) -> bool:
        if w.length != self.n:
            return False
        i = np.searchsorted(self.masks, np.uint64(w.bits))
        return bool(i < self.masks.size and self.masks[i] == w.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.masks, other.masks)

    def __hash__(self) -> int:
        return hash((self.n, self.masks.tobytes()))

    def __repr__(self) -> str:
        if len(self) <= 8:
            return f"Code(n={self.n}, {{{', '.join(self.strings())}}})"
        return f"Code(n={self.n}, size={len(self)})"

    def max_run(self) -> int:
        return int(max_run_array(self.masks).max()) if len(self) else 0


class BiasFunction:
    """A total map from words of length r to {0, 1}.

    ``rule`` receives a raw bit mask (b1 at bit 0) and returns 0 or 1.
    """

    def __init__(self, r: int, rule: Callable[[int], int], name: str = "custom"):
        self.r = r
        self.rule = rule
        self.name = name

    @classmethod
    def zero(cls, r: int) -> "BiasFunction":
        return cls(r, lambda bits: 0, "zero")

    @classmethod
    def from_table(cls, r: int, table: Mapping, default: int | None = None) -> "BiasFunction":
        """Keys may be Words, strings or masks.  Without ``default`` the
        table must cover all of B_r."""
        norm: dict[int, int] = {}
        for k, v in table.items():
            if isinstance(k, Word):
                bits = k.bits
            elif isinstance(k, str):
                if len(k) != r:
                    raise DimensionError(f"table key {k!r} is not of length {r}")
                bits = parse_bits(k)
            else:
                bits = int(k)
            norm[bits] = int(v) & 1
        if default is None:
            if len(norm) != 1 << r:
                raise ValueError("bias table must be total on B_r (or give a default)")
            return cls(r, norm.__getitem__, "table")
        return cls(r, lambda bits: norm.get(bits, default), "table")

    def __call__(self, w) -> int:
        if isinstance(w, Word):
            if w.length != self.r:
                raise DimensionError(f"bias expects length {self.r}, got {w.length}")
            w = w.bits
        return int(self.rule(int(w))) & 1

    def values(self, masks: np.ndarray) -> np.ndarray:
        return np.fromiter((self(int(b)) for b in masks), dtype=np.uint64, count=len(masks))

    def __repr__(self) -> str:
        return f"BiasFunction(r={self.r}, {self.name})"


class Status(str, enum.Enum):
    PERFECT = "PerfectCode"
    NOT_CODE = "NotCode"
    NOT_DOMINATED = "NotDominated"
    MULTIPLY_DOMINATED = "MultiplyDominated"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class VerificationReport:
    status: Status
    n: int
    code_size: int
    max_run: int
    graph: str
    witness: tuple[Word, ...] | None = None
    sphere_packing: bool = False

    @property
    def perfect(self) -> bool:
        return self.status is Status.PERFECT

    def to_kv(self) -> str:
        witness = "-" if self.witness is None else ",".join(str(w) for w in self.witness)
        return (
            f"status: {self.status}\n"
            f"graph: {self.graph}\n"
            f"n: {self.n}\n"
            f"code_size: {self.code_size}\n"
            f"max_run: {self.max_run}\n"
            f"sphere_packing: {str(self.sphere_packing).lower()}\n"
            f"witness: {witness}\n"
        )

    @classmethod
    def from_kv(cls, text: str) -> "VerificationReport":
        fields = {}
        for line in text.splitlines():
            if line.strip():
                key, _, value = line.partition(":")
                fields[key.strip()] = value.strip()
        witness = None
        if fields["witness"] != "-":
            witness = tuple(Word.parse(t) for t in fields["witness"].split(","))
        return cls(
            status=Status(fields["status"]),
            n=int(fields["n"]),
            code_size=int(fields["code_size"]),
            max_run=int(fields["max_run"]),
            graph=fields["graph"],
            witness=witness,
            sphere_packing=fields["sphere_packing"] == "true",
        )


def _contains_sorted(sorted_masks: np.ndarray, probe: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(sorted_masks, probe)
    idx[idx == sorted_masks.size] = 0
    return sorted_masks[idx] == probe


def _violating_pair(code: Code, member: np.ndarray | None) -> tuple[int, int] | None:
    """Smallest pair (a, b), a < b, at distance <= 2 in the graph."""
    n, C = code.n, code.masks
    if C.size < 2:
        return None
    best = None

    def consider(hit, probe):
        nonlocal best
        if hit.any():
            a = C[hit]
            b = probe[hit]
            lo, hi = np.minimum(a, b), np.maximum(a, b)
            order = np.lexsort((hi, lo))
            cand = (int(lo[order[0]]), int(hi[order[0]]))
            if best is None or cand < best:
                best = cand

    for i in range(n):
        probe = C ^ np.uint64(1 << i)
        consider(_contains_sorted(C, probe), probe)
    for i in range(n):
        for j in range(i + 1, n):
            probe = C ^ np.uint64((1 << i) | (1 << j))
            hit = _contains_sorted(C, probe)
            if member is not None and hit.any():
                # a common neighbour must itself be a vertex of the subgraph
                via_i = member[(C ^ np.uint64(1 << i)).astype(np.int64)]
                via_j = member[(C ^ np.uint64(1 << j)).astype(np.int64)]
                hit &= via_i | via_j
            consider(hit, probe)
    return best


def is_code(code: Code, graph: AvoidanceGraph | None = None) -> tuple[bool, tuple[Word, Word] | None]:
    """Whether distinct codewords are pairwise at graph distance >= 3.

    Returns ``(ok, witness)``; the witness is the smallest offending pair.
    """
    member = None
    if graph is not None and not graph.is_cube:
        member = graph.member_table()
    pair = _violating_pair(code, member)
    if pair is None:
        return True, None
    return False, (Word(code.n, pair[0]), Word(code.n, pair[1]))


def verify_in_graph(code: Code, g: AvoidanceGraph) -> VerificationReport:
    if code.n != g.n:
        raise DimensionError(f"code length {code.n} vs graph {g.descriptor}")
    n = g.n
    if n > TABLE_CAP:
        raise CapacityError(f"full domination sweep needs n <= {TABLE_CAP}")
    C = code.masks
    member = None if g.is_cube else g.member_table()
    if member is not None and C.size:
        outside = ~member[C.astype(np.int64)]
        if outside.any():
            w = Word(n, int(C[outside][0]))
            raise MembershipError(f"codeword {w} is not a vertex of {g.descriptor}", w)

    common = dict(
        n=n,
        code_size=len(code),
        max_run=code.max_run(),
        graph=g.descriptor,
        sphere_packing=len(code) * (n + 1) == 1 << n,
    )
    pair = _violating_pair(code, member)
    if pair is not None:
        return VerificationReport(
            Status.NOT_CODE, witness=(Word(n, pair[0]), Word(n, pair[1])), **common
        )

    covered = np.zeros(1 << n, dtype=np.uint8)
    np.add.at(covered, C.astype(np.int64), 1)
    for i in range(n):
        nb = C ^ np.uint64(1 << i)
        if member is not None:
            nb = nb[member[nb.astype(np.int64)]]
        np.add.at(covered, nb.astype(np.int64), 1)
    vertex = np.ones(1 << n, dtype=bool) if member is None else member
    multi = np.flatnonzero(vertex & (covered > 1))
    if multi.size:
        # unreachable once the pairwise check passed; kept as an integrity alarm
        return VerificationReport(
            Status.MULTIPLY_DOMINATED, witness=(Word(n, int(multi[0])),), **common
        )
    missing = np.flatnonzero(vertex & (covered == 0))
    if missing.size:
        return VerificationReport(
            Status.NOT_DOMINATED, witness=(Word(n, int(missing[0])),), **common
        )
    return VerificationReport(Status.PERFECT, **common)


def verify_perfect_qn(code: Code) -> VerificationReport:
    """Full 2**n sweep of Q_n (n <= 25)."""
    if code.n > TABLE_CAP:
        raise CapacityError(f"full domination sweep needs n <= {TABLE_CAP}")
    return verify_in_graph(code, cube(code.n))


# -- constructions ----------------------------------------------------------

def _check_vasilev(base: Code, bias: BiasFunction, verify_base: bool) -> None:
    if bias.r != base.n:
        raise DimensionError(f"bias on length {bias.r}, base code on length {base.n}")
    if 2 * base.n + 1 > MAX_LENGTH:
        raise DimensionError(f"extension length {2 * base.n + 1} exceeds {MAX_LENGTH}")
    if verify_base and base.n <= TABLE_CAP:
        report = verify_perfect_qn(base)
        if not report.perfect:
            raise ValueError(f"base code is not perfect in Q_{base.n}: {report.status}")


def vasilev_chunks(
    base: Code, bias: BiasFunction, chunk_words: int = 1 << 20
) -> Iterator[np.ndarray]:
    """Codewords of the Vasilev extension as ascending uint64 chunks.

    The mask of x || p || u is ``x | p << r | u << (r+1)`` with u = x + c, so
    grouping by u and sorting the low part x | p << r inside each group
    yields global order.
    Memory stays at O(chunk_words + |base|).
    """
    _check_vasilev(base, bias, verify_base=False)
    r = base.n
    C = base.masks
    fc = bias.values(C)
    per_u = max(1, chunk_words // max(1, C.size))
    r_sh, hi_sh = np.uint64(r), np.uint64(r + 1)
    for u0 in range(0, 1 << r, per_u):
        u = np.arange(u0, min(u0 + per_u, 1 << r), dtype=np.uint64)
        x = u[:, None] ^ C[None, :]
        low = x | ((parity_array(x) ^ fc[None, :]) << r_sh)
        low.sort(axis=1)
        yield (low | (u[:, None] << hi_sh)).ravel()


def vasilev_extend(base: Code, bias: BiasFunction, verify_base: bool = False) -> Code:
    """Materialised Vasilev extension; 2**r * |base| words of length 2r+1."""
    _check_vasilev(base, bias, verify_base)
    size = (1 << base.n) * len(base)
    if size > MATERIALIZE_CAP:
        raise CapacityError(
            f"{size} codewords exceed the materialisation cap; use vasilev_chunks"
        )
    masks = np.concatenate(list(vasilev_chunks(base, bias))) if size else []
    return Code(2 * base.n + 1, masks)


def hamming_code(p: int) -> Code:
    """Hamming code of length 2**p - 1 by zero-bias doubling from {0}."""
    if not 1 <= p <= 5:
        raise ValueError("p must be in 1..5")
    code = Code(1, [0])
    for _ in range(p - 1):
        code = vasilev_extend(code, BiasFunction.zero(code.n))
    return code


class NotInDomain(ValueError):
    """The word has no block of m+1 zeros."""


@dataclass(frozen=True)
class LemmaPart:
    """``w = 0^{m+1} y`` (i == 0) or ``w = z 1 0^{m+1} y`` (1 <= i <= m)."""

    i: int
    z: str
    y: str
    m: int

    def reassemble(self) -> str:
        zeros = "0" * (self.m + 1)
        if self.i == 0:
            return zeros + self.y
        return self.z + "1" + zeros + self.y


def lemma_partition_index(w: Word, m: int) -> LemmaPart:
    """Locate ``w`` in the partition A_0, ..., A_m by its leftmost 0^{m+1}."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if w.length != 2 * m + 1:
        raise DimensionError(f"expected length {2 * m + 1}, got {w.length}")
    text = str(w)
    i = text.find("0" * (m + 1))
    if i < 0:
        raise NotInDomain(f"{text} has no run of {m + 1} zeros")
    y = text[i + m + 1:]
    if i == 0:
        return LemmaPart(0, "", y, m)
    return LemmaPart(i, text[: i - 1], y, m)


def run_avoiding_bias(m: int) -> BiasFunction:
    """Bias on B_{2m+1}: 1 on A_0, 0 on A_1, parity(z) on A_i for i >= 2,
    0 on words without a block of m+1 zeros."""
    r = 2 * m + 1
    zeros = full_mask(m + 1)

    def rule(bits: int) -> int:
        # leftmost window of m+1 zeros, scanning from b1
        for i in range(m + 1):
            if (bits >> i) & zeros == 0:
                if i == 0:
                    return 1
                if i == 1:
                    return 0
                return (bits & full_mask(i - 1)).bit_count() & 1
        return 0

    return BiasFunction(r, rule, f"run-avoiding(m={m})")


class CodeStream:
    """A code too large to hold: ordered uint64 chunks, regenerated per pass."""

    def __init__(self, n: int, size: int, chunk_factory: Callable[[], Iterator[np.ndarray]]):
        self.n = n
        self.size = size
        self._factory = chunk_factory

    def chunks(self) -> Iterator[np.ndarray]:
        return self._factory()

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Word]:
        for chunk in self.chunks():
            for b in chunk:
                yield Word(self.n, int(b))

    def __repr__(self) -> str:
        return f"CodeStream(n={self.n}, size={self.size})"


def construct_run_avoiding_code(
    p: int, base: Code | None = None, stream: bool | None = None
) -> Code | CodeStream:
    """Perfect code of Q_{2^p-1} with no run of 3*2^(p-2) ones.

    Defaults to the Hamming base code; p >= 5 returns a :class:`CodeStream`
    unless ``stream=False``.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    m = (1 << (p - 2)) - 1
    r = 2 * m + 1
    if base is None:
        base = hamming_code(p - 1)
    elif base.n != r:
        raise DimensionError(f"base code must have length {r}, got {base.n}")
    elif r <= TABLE_CAP and not verify_perfect_qn(base).perfect:
        raise ValueError(f"base code is not a perfect code of Q_{r}")
    bias = run_avoiding_bias(m)
    if stream is None:
        stream = p >= 5
    if stream:
        return CodeStream(2 * r + 1, (1 << r) * len(base), lambda: vasilev_chunks(base, bias))
    return vasilev_extend(base, bias)


def run_avoiding_bound(p: int) -> int:
    """Forbidden run length s = 3 * 2^(p-2) for n = 2^p - 1."""
    return 3 << (p - 2)


def translate_code(code: Code, t: Word) -> Code:
    if t.length != code.n:
        raise DimensionError(f"translation of length {t.length} for code of length {code.n}")
    return Code(code.n, code.masks ^ np.uint64(t.bits))


def example_gamma7_code() -> Code:
    """Vasilev extension of {000, 111} with f(000) = f(111) = 1."""
    base = Code.from_strings(["000", "111"])
    bias = BiasFunction.from_table(3, {"000": 1, "111": 1}, default=0)
    return vasilev_extend(base, bias)


def run_histogram(code: Code | CodeStream | Iterable[np.ndarray]) -> dict[int, int]:
    """Number of codewords per longest-run-of-ones value."""
    if isinstance(code, Code):
        chunks: Iterable[np.ndarray] = [code.masks]
    elif isinstance(code, CodeStream):
        chunks = code.chunks()
    else:
        chunks = code
    hist: Counter[int] = Counter()
    for chunk in chunks:
        runs, counts = np.unique(max_run_array(chunk), return_counts=True)
        for k, c in zip(runs.tolist(), counts.tolist()):
            hist[k] += c
    return dict(sorted(hist.items()))
