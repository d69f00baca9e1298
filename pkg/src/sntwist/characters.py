"""Exact character values of symmetric groups and twisted indicators.

Character values are computed by the border-strip recursion on beta-sets:
removing a strip of length t from a partition corresponds to subtracting
t from one first-column hook length, with sign (-1)^(rows spanned - 1),
i.e. (-1)^(beta values jumped over).  Values are memoized per
(irrep, class) pair; a full table is only assembled when a sweep asks
for one.

The twisted indicator of an irreducible character under an automorphism
is the group average of the character at g * alpha(g).  It is held as an
exact Fraction (denominator divides n!), never a float.  Because every
character value of these groups is an integer, the indicators are
automatically real rationals; there is no complex branch to take.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import numpy as np

from . import kernels
from .automorphisms import Automorphism, IdentityAutomorphism, InnerAutomorphism, OuterS6Automorphism
from .partitions import Partition, check_partition, degree, partitions_of
from .perms import Permutation

#: Largest degree the full-group indicator scans accept by default.
DEFAULT_SCAN_BOUND = 8


def cycle_type(p: Permutation) -> Partition:
    """Cycle lengths in weakly decreasing order, fixed points included."""
    lengths = sorted((len(c) for c in p.cycle_decomposition().cycles), reverse=True)
    lengths += [1] * (p.n - sum(lengths))
    return tuple(lengths)


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class with cycle type mu: n! / z_mu."""
    mu = check_partition(mu)
    n = sum(mu)
    z = 1
    for length in set(mu):
        m = mu.count(length)
        z *= length ** m * math.factorial(m)
    q, r = divmod(math.factorial(n), z)
    if r:
        raise ArithmeticError(f"centraliser order does not divide n! for {mu}")
    return q


def mn_character(lam: Partition, mu: Partition) -> int:
    """Exact character value of the irrep indexed by lam at class mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    return _strip_recursion(lam, mu)


@cache
def _strip_recursion(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    t, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[j] + (ell - 1 - j) for j in range(ell)]
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        parts = tuple(
            v
            for j, c in enumerate(new_beta)
            if (v := c - (ell - 1 - j)) > 0
        )
        total += (-1) ** height * _strip_recursion(parts, rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    """Full integer character table, classes and irreps in reverse-lex
    partition order."""

    n: int
    classes: tuple[Partition, ...]
    irreps: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.irreps.index(lam)][self.classes.index(mu)]

    def validate(self) -> None:
        n_fact = math.factorial(self.n)
        if sum(self.class_sizes) != n_fact:
            raise ArithmeticError("class sizes do not sum to n!")
        one_column = self.classes.index((1,) * self.n)
        for li, lam in enumerate(self.irreps):
            if self.values[li][one_column] != degree(lam):
                raise ArithmeticError(f"degree column wrong for {lam}")
            for lj in range(len(self.irreps)):
                dot = sum(
                    self.class_sizes[c] * self.values[li][c] * self.values[lj][c]
                    for c in range(len(self.classes))
                )
                if dot != (n_fact if li == lj else 0):
                    raise ArithmeticError(
                        f"row orthogonality fails for rows {li}, {lj}"
                    )


@cache
def character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    values = tuple(
        tuple(mn_character(lam, mu) for mu in parts) for lam in parts
    )
    sizes = tuple(class_size(mu) for mu in parts)
    return CharacterTable(
        n=n, classes=parts, irreps=parts, values=values, class_sizes=sizes
    )


# --------------------------------------------------------------------------
# twisted indicators

def _type_table(n: int) -> np.ndarray:
    parts = partitions_of(n)
    table = np.zeros((len(parts), n), dtype=np.int64)
    for i, p in enumerate(parts):
        table[i, : len(p)] = p
    return table


@cache
def _twist_histogram(alpha: Automorphism) -> tuple[int, ...]:
    """Distribution over conjugacy classes of g * alpha(g), all g.

    Cached per automorphism so repeated indicator queries share one
    group scan.
    """
    n = alpha.n
    table = kernels.group_table(n)
    if isinstance(alpha, OuterS6Automorphism):
        imgs = alpha.image_words()
    elif isinstance(alpha, InnerAutomorphism):
        imgs = kernels.conjugate_rows(alpha.x.word, table)
    elif isinstance(alpha, IdentityAutomorphism):
        imgs = table
    else:  # pragma: no cover - closed variant set
        raise TypeError(f"unknown automorphism kind: {alpha!r}")
    product = kernels.compose_rows(table, imgs)
    ids = kernels.cycle_type_ids(product, _type_table(n))
    counts = np.bincount(ids, minlength=len(partitions_of(n)))
    return tuple(int(c) for c in counts)


def twisted_fs_indicator(
    alpha: Automorphism, lam: Partition, *, max_n: int = DEFAULT_SCAN_BOUND
) -> Fraction:
    """Group average of the character at g * alpha(g), exact."""
    lam = check_partition(lam)
    n = alpha.n
    if sum(lam) != n:
        raise ValueError(f"partition {lam} is not of size {n}")
    if n > max_n:
        raise ValueError(f"degree {n} exceeds the scan bound {max_n}")
    hist = _twist_histogram(alpha)
    classes = partitions_of(n)
    total = sum(
        count * mn_character(lam, mu) for count, mu in zip(hist, classes)
    )
    return Fraction(total, math.factorial(n))


@dataclass(frozen=True)
class IndicatorReport:
    """Per-irrep indicators of one automorphism together with the twisted
    involution count they must reproduce."""

    n: int
    automorphism: str
    indicators: tuple[tuple[Partition, Fraction], ...]
    weighted_sum: Fraction
    twisted_count: int
    identity_holds: bool
    bound_holds: bool

    def to_payload(self) -> dict:
        return {
            "n": self.n,
            "automorphism": self.automorphism,
            "indicators": [
                {
                    "lambda": "[" + ",".join(map(str, lam)) + "]",
                    "value_num": f.numerator,
                    "value_den": f.denominator,
                }
                for lam, f in self.indicators
            ],
            "weighted_sum": (
                int(self.weighted_sum)
                if self.weighted_sum.denominator == 1
                else {
                    "num": self.weighted_sum.numerator,
                    "den": self.weighted_sum.denominator,
                }
            ),
            "twisted_count": self.twisted_count,
            "identity_holds": self.identity_holds,
            "bound_holds": self.bound_holds,
        }


def verify_indicator_identity(
    alpha: Automorphism, *, max_n: int = DEFAULT_SCAN_BOUND
) -> IndicatorReport:
    """Check that the degree-weighted indicator sum equals the number of
    twisted involutions, as exact rationals."""
    from .twisted import enumerate_twisted

    n = alpha.n
    indicators = tuple(
        (lam, twisted_fs_indicator(alpha, lam, max_n=max_n))
        for lam in partitions_of(n)
    )
    weighted = sum(
        (f * degree(lam) for lam, f in indicators), start=Fraction(0)
    )
    count = enumerate_twisted(alpha).count
    return IndicatorReport(
        n=n,
        automorphism=alpha.describe(),
        indicators=indicators,
        weighted_sum=weighted,
        twisted_count=count,
        identity_holds=weighted == count,
        bound_holds=all(abs(f) <= 1 for _, f in indicators),
    )
