"""Brute-force enumeration of twisted involutions and the bound sweeps.

A twisted involution of an automorphism ``a`` is an element g with
``a(g) = g^-1``.  Counts are exact, computed by rank-chunked group scans
whose reduction is plain integer addition, so results are independent of
chunking and worker count.  Inner and identity automorphisms go through
the scan kernels; outer automorphisms of S_6 are table lookups.

Scans above degree 10 are opt-in: degrees 11 and 12 require an explicit
flag plus a parallelism setting (expect minutes at 11 and around an hour
at 12 with the jitted kernels; considerably more on the numpy fallback).
Degrees above 12 are refused.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .automorphisms import (
    Automorphism,
    IdentityAutomorphism,
    InnerAutomorphism,
    OuterS6Automorphism,
    outer_s6_catalog,
    s6_tables,
)
from .partitions import Partition, partitions_of, total_degree_sum
from .perms import Permutation

DEFAULT_GROUP_SCAN_BOUND = 10
HEAVY_SCAN_LIMIT = 12
WITNESS_CAP = 1000


@dataclass(frozen=True)
class TwistedCount:
    n: int
    automorphism: str
    count: int
    witnesses: tuple[str, ...] = ()
    elapsed: float = 0.0  # informational only; never serialised into reports

    def to_payload(self) -> dict:
        t = total_degree_sum(self.n)
        return {
            "n": self.n,
            "automorphism": self.automorphism,
            "count": self.count,
            "T": t,
            "bound_ok": self.count <= t,
            "equality": self.count == t,
        }


def class_representative(mu: Partition) -> Permutation:
    """Canonical element of cycle type mu: consecutive blocks of points."""
    cycles = []
    next_point = 1
    for length in mu:
        if length > 1:
            cycles.append(tuple(range(next_point, next_point + length)))
        next_point += length
    return Permutation.from_cycles(cycles, sum(mu))


def inner_class_representatives(n: int) -> list[InnerAutomorphism]:
    """One inner automorphism per non-trivial conjugacy class of the
    conjugating element."""
    return [
        InnerAutomorphism(class_representative(mu))
        for mu in partitions_of(n)
        if mu != (1,) * n
    ]


def enumerate_twisted(
    alpha: Automorphism,
    *,
    parallel: int = 1,
    witness_cap: int = 0,
    max_n: int = DEFAULT_GROUP_SCAN_BOUND,
    allow_heavy: bool = False,
) -> TwistedCount:
    """Exact |{g : alpha(g) = g^-1}| by full group scan."""
    n = alpha.n
    if n > HEAVY_SCAN_LIMIT:
        raise ValueError(f"degree {n} exceeds the hard scan limit {HEAVY_SCAN_LIMIT}")
    if n > max_n:
        if not allow_heavy:
            raise ValueError(
                f"degree {n} exceeds the default scan bound {max_n}; "
                "pass allow_heavy=True (expect minutes at 11, about an hour at 12)"
            )
        if parallel < 2:
            raise ValueError("heavy scans (n >= 11) require parallel >= 2")
    started = time.perf_counter()
    if isinstance(alpha, OuterS6Automorphism):
        t = s6_tables()
        count = int((alpha.imgrank == t.inv_rank).sum())
    elif isinstance(alpha, (InnerAutomorphism, IdentityAutomorphism)):
        x = alpha.x if isinstance(alpha, InnerAutomorphism) else Permutation.identity(n)
        count = kernels.run_chunked(
            math.factorial(n),
            lambda s, e: kernels.count_twisted_inner(n, x.word, s, e),
            parallel,
        )
    else:  # pragma: no cover - closed variant set
        raise TypeError(f"unknown automorphism kind: {alpha!r}")
    witnesses = _collect_witnesses(alpha, witness_cap) if witness_cap else ()
    return TwistedCount(
        n=n,
        automorphism=alpha.describe(),
        count=count,
        witnesses=witnesses,
        elapsed=time.perf_counter() - started,
    )


def _collect_witnesses(alpha: Automorphism, cap: int) -> tuple[str, ...]:
    cap = min(cap, WITNESS_CAP)
    n = alpha.n
    if n > 9:
        raise ValueError("witness collection is limited to degrees <= 9")
    table = kernels.group_table(n)
    if isinstance(alpha, OuterS6Automorphism):
        mask = alpha.imgrank == s6_tables().inv_rank
    else:
        x = alpha.x if isinstance(alpha, InnerAutomorphism) else Permutation.identity(n)
        conj = kernels.conjugate_rows(x.word, table)
        mask = np.all(conj == kernels.inverse_rows(table), axis=1)
    ranks = np.flatnonzero(mask)[:cap]
    return tuple(
        str(Permutation._raw(tuple(int(v) for v in table[r]))) for r in ranks
    )


def members(alpha: Automorphism) -> list[Permutation]:
    """All twisted involutions of alpha, in rank order (degrees <= 9)."""
    n = alpha.n
    table = kernels.group_table(n)
    if isinstance(alpha, OuterS6Automorphism):
        mask = alpha.imgrank == s6_tables().inv_rank
    else:
        x = alpha.x if isinstance(alpha, InnerAutomorphism) else Permutation.identity(n)
        conj = kernels.conjugate_rows(x.word, table)
        mask = np.all(conj == kernels.inverse_rows(table), axis=1)
    return [
        Permutation._raw(tuple(int(v) for v in table[r]))
        for r in np.flatnonzero(mask)
    ]


# --------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class BoundEntry:
    automorphism: str
    conjugator_order: int | None
    count: int
    bound_ok: bool
    equality: bool


@dataclass(frozen=True)
class BoundReport:
    n: int
    degree_sum: int
    entries: tuple[BoundEntry, ...]
    all_ok: bool
    equality_matches_order_rule: bool

    def to_payload(self) -> dict:
        return {
            "n": self.n,
            "T": self.degree_sum,
            "entries": [
                {
                    "automorphism": e.automorphism,
                    "count": e.count,
                    "bound_ok": e.bound_ok,
                    "equality": e.equality,
                }
                for e in self.entries
            ],
            "all_ok": self.all_ok,
            "equality_matches_order_rule": self.equality_matches_order_rule,
        }


def verify_bound(
    n: int,
    alphas: list[Automorphism] | None = None,
    *,
    parallel: int = 1,
) -> BoundReport:
    """|S_a| <= degree sum for every automorphism, with equality flags.

    The default sweep takes the identity plus one inner automorphism per
    conjugacy class of the conjugator; counts only depend on the class
    (itself a tested invariant), which keeps the sweep small.
    """
    if alphas is None:
        alphas = [IdentityAutomorphism(n)] + inner_class_representatives(n)
    t = total_degree_sum(n)
    entries = []
    rule_ok = True
    for alpha in alphas:
        if alpha.n != n:
            raise ValueError(f"automorphism degree {alpha.n} != {n}")
        count = enumerate_twisted(alpha, parallel=parallel).count
        order = None
        if isinstance(alpha, InnerAutomorphism):
            order = alpha.x.order()
        elif isinstance(alpha, IdentityAutomorphism):
            order = 1
        equality = count == t
        if order is not None and equality != (order <= 2):
            rule_ok = False
        entries.append(
            BoundEntry(
                automorphism=alpha.describe(),
                conjugator_order=order,
                count=count,
                bound_ok=count <= t,
                equality=equality,
            )
        )
    return BoundReport(
        n=n,
        degree_sum=t,
        entries=tuple(entries),
        all_ok=all(e.bound_ok for e in entries),
        equality_matches_order_rule=rule_ok,
    )


@dataclass(frozen=True)
class OuterSweepReport:
    total: int
    distinct_tables: int
    all_verified: bool
    counts: tuple[int, ...]  # per automorphism, catalog order
    max_count: int
    identity_count: int

    def count_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in sorted(self.counts):
            out[c] = out.get(c, 0) + 1
        return out

    def to_payload(self) -> dict:
        return {
            "n": 6,
            "automorphisms": self.total,
            "distinct_tables": self.distinct_tables,
            "all_verified": self.all_verified,
            "count_multiset": {str(k): v for k, v in self.count_multiset().items()},
            "max_count": self.max_count,
            "identity_count": self.identity_count,
            "max_below_identity": self.max_count < self.identity_count,
        }


def sweep_outer_s6(verify: str = "full") -> OuterSweepReport:
    """Count twisted involutions of every pentad-built outer automorphism.

    With verify="full" each construction is checked as a homomorphism on
    all 720^2 pairs; "generators" checks the generator rows, which
    already determines multiplicativity on all products.
    """
    catalog = outer_s6_catalog(verify=verify)
    inv_rank = s6_tables().inv_rank
    counts = tuple(int((a.imgrank == inv_rank).sum()) for a in catalog)
    return OuterSweepReport(
        total=len(catalog),
        distinct_tables=len({a.imgrank.tobytes() for a in catalog}),
        all_verified=True,  # construction raises on any failed check
        counts=counts,
        max_count=max(counts),
        identity_count=enumerate_twisted(IdentityAutomorphism(6)).count,
    )


@dataclass(frozen=True)
class OddOrderReport:
    n: int
    conjugators_tested: int
    violations: tuple[str, ...]
    ok: bool
    informational: bool  # degree 6 sits outside the structural claim

    def to_payload(self) -> dict:
        return {
            "n": self.n,
            "conjugators_tested": self.conjugators_tested,
            "violations": list(self.violations),
            "ok": self.ok,
            "informational": self.informational,
        }


def verify_odd_order_structure(n: int) -> OddOrderReport:
    """For every conjugator of odd order >= 3, every twisted involution
    must itself have order <= 2.  Counterexamples are reported verbatim."""
    table = kernels.group_table(n)
    orders = kernels.element_orders(table)
    inv_rows = kernels.inverse_rows(table)
    odd_ranks = np.flatnonzero((orders % 2 == 1) & (orders >= 3))
    violations: list[str] = []
    for r in odd_ranks:
        x_word = table[int(r)]
        conj = kernels.conjugate_rows(x_word, table)
        mask = np.all(conj == inv_rows, axis=1)
        bad = np.flatnonzero(mask & (orders > 2))
        for b in bad:
            x = Permutation._raw(tuple(int(v) for v in x_word))
            y = Permutation._raw(tuple(int(v) for v in table[int(b)]))
            violations.append(f"x={x}, y={y}, ord(y)={orders[int(b)]}")
    return OddOrderReport(
        n=n,
        conjugators_tested=len(odd_ranks),
        violations=tuple(violations),
        ok=not violations,
        informational=(n == 6),
    )


@dataclass(frozen=True)
class CriterionReport:
    """Comparison |S_a| vs |S_id|; a strictly larger twisted count would
    certify an irreducible character that is not real-valued.  For these
    groups every irreducible is real, so the criterion should never fire."""

    n: int
    automorphism: str
    count: int
    identity_count: int
    fires: bool

    def to_payload(self) -> dict:
        return {
            "n": self.n,
            "automorphism": self.automorphism,
            "count": self.count,
            "identity_count": self.identity_count,
            "criterion_fires": self.fires,
            "expected_fires": False,
        }


def complex_rep_criterion(alpha: Automorphism, *, parallel: int = 1) -> CriterionReport:
    count = enumerate_twisted(alpha, parallel=parallel).count
    identity_count = enumerate_twisted(
        IdentityAutomorphism(alpha.n), parallel=parallel
    ).count
    return CriterionReport(
        n=alpha.n,
        automorphism=alpha.describe(),
        count=count,
        identity_count=identity_count,
        fires=count > identity_count,
    )
