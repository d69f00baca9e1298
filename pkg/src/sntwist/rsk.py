"""Row-insertion correspondence between permutations and tableau pairs.

Only row insertion is implemented: insert x into the first row, bumping
the smallest entry greater than x down a row, until some row takes x at
its end.  Feeding the one-line word of a permutation through successive
insertions builds the insertion tableau P; recording which cell appeared
at each step builds the recording tableau Q of the same shape.  The
inverse direction un-bumps starting from the cell holding the largest
entry of Q.

Involutions correspond exactly to pairs with P == Q, which ties the
number of standard tableaux on n cells to the number of solutions of
g^2 = e.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .partitions import Partition, check_partition
from .perms import Permutation

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StandardTableau:
    """Rows strictly increase left to right, columns top to bottom, and
    the entries are exactly 1..m for m cells."""

    rows: Rows

    def __post_init__(self):
        entries = [v for row in self.rows for v in row]
        m = len(entries)
        if sorted(entries) != list(range(1, m + 1)):
            raise ValueError(f"entries must be exactly 1..{m}: {self.rows!r}")
        check_partition([len(r) for r in self.rows], m)
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"row not strictly increasing: {row!r}")
        for r in range(1, len(self.rows)):
            for c in range(len(self.rows[r])):
                if self.rows[r - 1][c] >= self.rows[r][c]:
                    raise ValueError(f"column {c + 1} not strictly increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __str__(self) -> str:
        return "\n".join("[" + ",".join(map(str, row)) + "]" for row in self.rows)


def row_insert(rows: Rows, x: int) -> tuple[Rows, tuple[int, int]]:
    """Insert x into a partial tableau; return the new rows and the
    (row, column) of the cell that was added, 1-based."""
    if any(x in row for row in rows):
        raise ValueError(f"entry {x} already present")
    out = [list(row) for row in rows]
    r = 0
    while True:
        if r == len(out):
            out.append([x])
            return tuple(tuple(row) for row in out), (r + 1, 1)
        row = out[r]
        i = bisect_right(row, x)
        if i == len(row):
            row.append(x)
            return tuple(tuple(row) for row in out), (r + 1, len(row))
        x, row[i] = row[i], x
        r += 1


def rsk_pair(p: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Insertion and recording tableaux of the one-line word of p."""
    rows: Rows = ()
    q_rows: list[list[int]] = []
    for step, value in enumerate(p.images, start=1):
        rows, (r, _) = row_insert(rows, value)
        if r > len(q_rows):
            q_rows.append([])
        q_rows[r - 1].append(step)
    return StandardTableau(rows), StandardTableau(tuple(tuple(r) for r in q_rows))


def inverse_rsk(p_tab: StandardTableau, q_tab: StandardTableau) -> Permutation:
    """Recover the permutation with rsk_pair(result) == (p_tab, q_tab)."""
    if p_tab.shape != q_tab.shape:
        raise ValueError(
            f"shape mismatch: {p_tab.shape} vs {q_tab.shape}"
        )
    n = p_tab.size
    p_rows = [list(row) for row in p_tab.rows]
    q_rows = [list(row) for row in q_tab.rows]
    word_rev: list[int] = []
    for step in range(n, 0, -1):
        r = next(i for i, row in enumerate(q_rows) if row and row[-1] == step)
        q_rows[r].pop()
        x = p_rows[r].pop()
        # un-bump upwards: in each row above, x displaces the rightmost
        # entry smaller than it
        for above in range(r - 1, -1, -1):
            row = p_rows[above]
            i = bisect_right(row, x) - 1
            x, row[i] = row[i], x
        word_rev.append(x)
        if not p_rows[-1]:
            p_rows.pop()
            q_rows.pop()
    return Permutation.from_one_line(reversed(word_rev))
