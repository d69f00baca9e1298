"""Exact arithmetic for permutations of {1..n}.

Conventions shared by every module in the package:

- Composition applies the right factor first: ``compose(p, q)`` is the map
  ``i -> p(q(i))``.
- Points are 1-based in all public interfaces (cycle notation, ``images``,
  parsing, printing).  Internally a permutation stores a 0-based word
  ``word[i] = image of point i``; this module is the only place the
  boundary is crossed.
- Cycle decompositions are canonical: each cycle is rotated so that its
  smallest point comes first, cycles are sorted by their smallest point,
  and fixed points are omitted.
- Degree is immutable and never mixes: any operation on permutations of
  different degree raises ``ValueError``.

Enumeration of the full group is by lexicographic rank of the one-line
word (factorial number system), so scans can be split into arbitrary rank
chunks and restarted deterministically.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import islice, permutations as _lex_permutations
from typing import Iterable, Iterator, Sequence

#: Largest degree enumerate_group accepts without an explicit override.
DEFAULT_MAX_ENUM_N = 10


class Permutation:
    """An element of the symmetric group on {1..n}, immutable and hashable."""

    __slots__ = ("_w",)

    def __init__(self, word: Sequence[int]):
        w = tuple(int(v) for v in word)
        if sorted(w) != list(range(len(w))):
            raise ValueError(f"not a permutation word: {word!r}")
        self._w = w

    @classmethod
    def _raw(cls, word: tuple[int, ...]) -> "Permutation":
        # Fast path for internally produced words (already validated).
        self = object.__new__(cls)
        self._w = word
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise ValueError("degree must be >= 1")
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_one_line(cls, images: Iterable[int]) -> "Permutation":
        """Build from 1-based one-line images, e.g. [3, 1, 2]."""
        return cls([v - 1 for v in images])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> "Permutation":
        """Build from disjoint cycles of 1-based points.

        >>> str(Permutation.from_cycles([(1, 3, 2)], 3))
        '(1,3,2)'
        """
        word = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [int(p) for p in cyc]
            for p in pts:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} outside 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} repeated across cycles")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                word[a - 1] = b - 1
        return cls._raw(tuple(word))

    @property
    def n(self) -> int:
        return len(self._w)

    @property
    def word(self) -> tuple[int, ...]:
        """0-based one-line word (internal convention)."""
        return self._w

    @property
    def images(self) -> tuple[int, ...]:
        """1-based one-line images; images[i] is where point i+1 goes."""
        return tuple(v + 1 for v in self._w)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._w):
            raise ValueError(f"point {point} outside 1..{len(self._w)}")
        return self._w[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        n = len(self._w)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(n)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._w)
        for i, v in enumerate(self._w):
            inv[v] = i
        return Permutation._raw(tuple(inv))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycle_decomposition().cycles), 1)

    def is_involution(self) -> bool:
        """Order 1 or 2, i.e. a solution of g^2 = e."""
        return all(self._w[v] == i for i, v in enumerate(self._w))

    def cycle_decomposition(self) -> "CycleDecomposition":
        w = self._w
        seen = [False] * len(w)
        cycles = []
        for start in range(len(w)):
            if seen[start] or w[start] == start:
                seen[start] = True
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p + 1)
                p = w[p]
            cycles.append(tuple(cyc))
        return CycleDecomposition(cycles=tuple(cycles), n=len(w))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._w == other._w

    def __hash__(self) -> int:
        return hash(self._w)

    def __repr__(self) -> str:
        return f"Permutation.from_one_line({list(self.images)!r})"

    def __str__(self) -> str:
        return str(self.cycle_decomposition())


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint cycles: smallest point first in each cycle,
    cycles sorted by smallest point, fixed points omitted."""

    cycles: tuple[tuple[int, ...], ...]
    n: int

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.cycles, self.n)

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """compose(p, q) applies q first: the map i -> p(q(i))."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    pw, qw = p.word, q.word
    return Permutation._raw(tuple(pw[qw[i]] for i in range(len(pw))))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def order(p: Permutation) -> int:
    return p.order()


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    return p.cycle_decomposition()


def conjugate(x: Permutation, y: Permutation) -> Permutation:
    """x * y * x^-1; relabels the cycles of y by x, preserving cycle type."""
    if x.n != y.n:
        raise ValueError(f"degree mismatch: {x.n} vs {y.n}")
    xw, yw = x.word, y.word
    xinv = [0] * len(xw)
    for i, v in enumerate(xw):
        xinv[v] = i
    return Permutation._raw(tuple(xw[yw[xinv[i]]] for i in range(len(xw))))


def rank(p: Permutation) -> int:
    """Lexicographic rank of the one-line word in [0, n!)."""
    w = p.word
    n = len(w)
    pool = list(range(n))
    r = 0
    for i in range(n):
        d = pool.index(w[i])
        r += d * math.factorial(n - 1 - i)
        pool.pop(d)
    return r


def unrank(n: int, r: int) -> Permutation:
    """Inverse of rank: the permutation of lexicographic rank r in S_n."""
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} outside [0, {n}!)")
    pool = list(range(n))
    word = []
    for i in range(n):
        f = math.factorial(n - 1 - i)
        d, r = divmod(r, f)
        word.append(pool.pop(d))
    return Permutation._raw(tuple(word))


def enumerate_group(
    n: int,
    start: int = 0,
    stop: int | None = None,
    *,
    max_n: int = DEFAULT_MAX_ENUM_N,
) -> Iterator[Permutation]:
    """Yield permutations of lexicographic rank in [start, stop), each once.

    Disjoint rank chunks partition the group exactly, which is what the
    chunked scans in the rest of the package rely on.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n > max_n:
        raise ValueError(f"degree {n} exceeds the configured maximum {max_n}")
    total = math.factorial(n)
    if stop is None:
        stop = total
    if not (0 <= start <= stop <= total):
        raise ValueError(f"rank range [{start}, {stop}) outside [0, {total}]")
    for word in islice(_lex_permutations(range(n)), start, stop):
        yield Permutation._raw(word)


_ONE_LINE_RE = re.compile(r"^\[\s*\d+(\s*,\s*\d+)*\s*\]$")
_CYCLES_RE = re.compile(r"^(\(\s*\d+(\s*,\s*\d+)*\s*\))+$")


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse one-line form "[3,1,2]" or cycle form "(1,3,2)(4,5)".

    The identity is "()", "e" or "id" (degree must then be given).  For
    cycle form the degree defaults to the largest point mentioned.
    """
    s = text.strip().replace(" ", "")
    if s in ("()", "e", "id", ""):
        if n is None:
            raise ValueError("degree required to parse the identity")
        return Permutation.identity(n)
    if _ONE_LINE_RE.match(s):
        images = [int(v) for v in s[1:-1].split(",")]
        p = Permutation.from_one_line(images)
        if n is not None and p.n != n:
            raise ValueError(f"one-line form has degree {p.n}, expected {n}")
        return p
    if _CYCLES_RE.match(s):
        cycles = [
            tuple(int(v) for v in part.split(","))
            for part in s[1:-1].split(")(")
        ]
        degree = n if n is not None else max(max(c) for c in cycles)
        return Permutation.from_cycles(cycles, degree)
    raise ValueError(f"unrecognised permutation format: {text!r}")
