"""Integer partitions, hook lengths, irreducible degrees and layer counts.

Everything here is exact big-integer arithmetic; no floats anywhere.
Partitions are plain tuples of weakly decreasing positive parts, always
listed in reverse-lexicographic order starting from (n), which is the
order every report uses.

The hook grid is computed two independent ways on every call — the
classic arm+leg+1 count, and a column-count form built from row
indicator functions — and the two are asserted equal cellwise.  The
total degree sum is likewise computed both as "1 + sum over partitions
with first part < n" and as the plain sum over all partitions, asserted
equal before being returned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]


class HookFormulaMismatch(ArithmeticError):
    """The two hook-length formulas disagreed: an implementation bug."""


def check_partition(parts: Sequence[int], n: int | None = None) -> Partition:
    """Validate weakly decreasing positive parts; return as a tuple."""
    p = tuple(int(v) for v in parts)
    if not p or any(v < 1 for v in p):
        raise ValueError(f"parts must be positive: {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts!r}")
    if n is not None and sum(p) != n:
        raise ValueError(f"parts sum to {sum(p)}, expected {n}")
    return p


def is_partition_of(parts: Sequence[int], n: int) -> bool:
    try:
        check_partition(parts, n)
    except ValueError:
        return False
    return True


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first.

    >>> partitions_of(3)
    ((3,), (2, 1), (1, 1, 1))
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate_partition(parts: Partition) -> Partition:
    parts = check_partition(parts)
    return tuple(
        sum(1 for p in parts if p > i) for i in range(parts[0])
    )


def _row_has_box(parts: Partition, row: int, col: int) -> int:
    # 1 when the row (1-based) reaches column col, else 0.
    return 1 if row <= len(parts) and parts[row - 1] >= col else 0


def _boxes_below(parts: Partition, row: int, col: int) -> int:
    # Number of rows strictly below `row` that still have a box in `col`.
    return sum(_row_has_box(parts, k, col) for k in range(row + 1, len(parts) + 1))


@dataclass(frozen=True)
class HookGrid:
    """Hook lengths per cell of a Young diagram, rows top to bottom."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    nonzero_rows: int

    def product(self) -> int:
        out = 1
        for row in self.rows:
            for h in row:
                out *= h
        return out


def hook_grid(parts: Partition) -> HookGrid:
    parts = check_partition(parts)
    classic = []
    by_counts = []
    for l, row_len in enumerate(parts, start=1):
        row_classic = []
        row_counts = []
        for j in range(1, row_len + 1):
            arm = row_len - j
            leg = sum(1 for k in range(l, len(parts)) if parts[k] >= j)
            row_classic.append(arm + leg + 1)
            row_counts.append((row_len - j) + 1 + _boxes_below(parts, l, j))
        classic.append(tuple(row_classic))
        by_counts.append(tuple(row_counts))
    if classic != by_counts:
        raise HookFormulaMismatch(
            f"hook formulas disagree for {parts}: {classic} vs {by_counts}"
        )
    nonzero = sum(1 for p in parts if p > 0)
    return HookGrid(shape=parts, rows=tuple(classic), nonzero_rows=nonzero)


def hook_product(parts: Partition) -> int:
    return hook_grid(parts).product()


@cache
def degree(parts: Partition) -> int:
    """Degree of the irreducible indexed by the partition: n! over the
    hook product, with exactness of the division enforced."""
    parts = check_partition(parts)
    n = sum(parts)
    q, r = divmod(math.factorial(n), hook_product(parts))
    if r:
        raise ArithmeticError(f"hook product does not divide {n}! for {parts}")
    return q


@cache
def total_degree_sum(n: int) -> int:
    """Sum of irreducible degrees of S_n, exact.

    Computed as 1 (for the single-row partition) plus the sum over all
    partitions with first part < n, then cross-checked against the plain
    sum over every partition.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    via_split = 1 + sum(degree(p) for p in partitions_of(n) if p[0] < n)
    plain = sum(degree(p) for p in partitions_of(n))
    if via_split != plain:
        raise ArithmeticError(f"degree-sum split disagrees at n={n}")
    return plain


@cache
def recurrence_a(n: int) -> int:
    """a_0 = a_1 = 1, a_n = a_(n-1) + (n-1) a_(n-2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return 1
    return recurrence_a(n - 1) + (n - 1) * recurrence_a(n - 2)


def layer_count(n: int) -> int:
    """Number of layers in the involution-count expansion: floor(n/2)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return n // 2


def layer_value(n: int, k: int) -> int:
    """The k-th layer of the order-2 count.

    Even n:  n! / (2^((n-2k)/2) * ((n-2k)/2)! * (2k)!)
    Odd n:   n! / (2^((n-2k-1)/2) * ((n-2k-1)/2)! * (2k+1)!)

    Layer k collects the involutions with exactly 2k (even n) or 2k+1
    (odd n) fixed points.
    """
    if not 0 <= k <= layer_count(n) - 1:
        raise ValueError(f"layer index {k} outside 0..{layer_count(n) - 1}")
    fixed = 2 * k if n % 2 == 0 else 2 * k + 1
    pairs = (n - fixed) // 2
    denom = (2 ** pairs) * math.factorial(pairs) * math.factorial(fixed)
    q, r = divmod(math.factorial(n), denom)
    if r:
        raise ArithmeticError(f"layer value not integral at n={n}, k={k}")
    return q


def layer_values(n: int) -> tuple[int, ...]:
    return tuple(layer_value(n, k) for k in range(layer_count(n)))


def involution_count_closed_form(n: int) -> int:
    """Number of order-2 elements of S_n, as the sum of the layers."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return sum(layer_values(n))


def format_partition(parts: Partition) -> str:
    return "[" + ",".join(map(str, parts)) + "]"


def parse_partition(text: str, n: int | None = None) -> Partition:
    s = text.strip().replace(" ", "")
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partitions are written like [4,2,1]: {text!r}")
    return check_partition([int(v) for v in s[1:-1].split(",")], n)
