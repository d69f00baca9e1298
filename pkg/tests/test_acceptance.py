"""Acceptance gate: one test per criterion, each printing a PASS/FAIL
line and holding the stated runtime budget.  All comparisons are exact
integer or rational equalities; there are no numeric tolerances to tune.

Run as `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""
import math
import time
from fractions import Fraction

from sntwist import fibers as fibers_mod
from sntwist import twisted as twisted_mod
from sntwist.automorphisms import IdentityAutomorphism, outer_s6_catalog, s6_tables
from sntwist.characters import verify_indicator_identity
from sntwist.cli import run as cli_run
from sntwist.partitions import (
    degree,
    hook_grid,
    involution_count_closed_form,
    layer_count,
    layer_value,
    partitions_of,
    recurrence_a,
    total_degree_sum,
)
from sntwist.perms import enumerate_group
from sntwist.rsk import inverse_rsk, rsk_pair


def _criterion(number: int, budget_s: float, fn):
    started = time.perf_counter()
    try:
        detail = fn()
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL")
        raise
    elapsed = time.perf_counter() - started
    print(f"ACCEPTANCE {number}: PASS — {detail} [{elapsed:.2f}s, budget {budget_s}s]")
    assert elapsed < budget_s, f"criterion {number} exceeded budget: {elapsed:.2f}s"


def test_criterion_01_degree_sum_agreement():
    def check():
        for n in range(2, 15):
            t = total_degree_sum(n)
            assert t == recurrence_a(n), n
            assert t == 1 + involution_count_closed_form(n), n
        return "degree sum = recurrence = 1 + order-2 count for n = 2..14"

    _criterion(1, 1.0, check)


def test_criterion_02_worked_example_degree_3():
    def check():
        degrees = [
            math.factorial(3) // hook_grid(p).product() for p in partitions_of(3)
        ]
        assert degrees == [1, 2, 1]
        assert 1 + sum(d for p, d in zip(partitions_of(3), degrees) if p[0] < 3) == 4
        return "degrees (1, 2, 1) and total 4"

    partitions_of(3)  # enumeration warm; the timed part is the arithmetic
    _criterion(2, 0.001, check)


def test_criterion_03_rsk_suite():
    def check():
        for n in range(1, 7):
            fixed = 0
            for p in enumerate_group(n):
                pair = rsk_pair(p)
                assert inverse_rsk(*pair) == p
                swapped = rsk_pair(p.inverse())
                assert swapped == (pair[1], pair[0])
                if pair[0] == pair[1]:
                    fixed += 1
            assert fixed == total_degree_sum(n) == sum(
                1 for p in enumerate_group(n) if p.is_involution()
            )
        return "round trip, swap symmetry and involution counts for n <= 6"

    _criterion(3, 5.0, check)


def test_criterion_04_twisted_bound():
    def check():
        for n in range(2, 8):
            report = twisted_mod.verify_bound(n)
            assert report.all_ok, f"bound violated at n={n}"
            assert report.equality_matches_order_rule, f"equality rule at n={n}"
        return "counts <= degree sum with equality iff conjugator order <= 2, n <= 7"

    _criterion(4, 30.0, check)


def test_criterion_05_odd_order_structure():
    def check():
        for n in range(3, 8):
            report = twisted_mod.verify_odd_order_structure(n)
            assert report.ok, report.violations[:3]
        return "no twisted involution of order > 2 for odd-order conjugators, n <= 7"

    _criterion(5, 60.0, check)


def test_criterion_06_outer_sweep():
    def check():
        catalog = outer_s6_catalog(verify="full")  # raises on any failure
        assert len(catalog) == 720
        assert len({a.imgrank.tobytes() for a in catalog}) == 720
        tables = s6_tables()
        tr = tables.transposition_12_rank
        for gamma in catalog:
            image = tables.perm_of(int(gamma.imgrank[tr]))
            lengths = sorted(len(c) for c in image.cycle_decomposition().cycles)
            assert lengths == [2, 2, 2], "transposition class preserved"
        report = twisted_mod.sweep_outer_s6(verify="full")
        assert report.max_count == 36
        assert report.identity_count == 76
        assert report.max_count < report.identity_count
        return "720 verified outer automorphisms, max count 36 < 76"

    _criterion(6, 120.0, check)


def test_criterion_07_indicator_identity():
    def check():
        checked = 0
        for n in range(2, 7):
            sweep = [IdentityAutomorphism(n)] + twisted_mod.inner_class_representatives(n)
            if n == 6:
                sweep += list(outer_s6_catalog(verify="full"))
            for alpha in sweep:
                report = verify_indicator_identity(alpha)
                assert report.weighted_sum == report.twisted_count, alpha.describe()
                assert all(abs(f) <= 1 for _, f in report.indicators), alpha.describe()
                if isinstance(alpha, IdentityAutomorphism):
                    assert all(f == Fraction(1) for _, f in report.indicators)
                checked += 1
        return f"weighted indicator sum equals twisted count for {checked} automorphisms"

    _criterion(7, 300.0, check)


def test_criterion_08_half_group_bound():
    def check():
        for n in range(4, 8):
            report = twisted_mod.verify_bound(n)
            worst = max(e.count for e in report.entries)
            assert 2 * worst <= math.factorial(n), f"n={n}"
        count3 = twisted_mod.enumerate_twisted(IdentityAutomorphism(3)).count
        assert count3 == 4 > math.factorial(3) // 2
        return "counts <= n!/2 for 4 <= n <= 7; degree 3 exceeds with 4 > 3"

    _criterion(8, 30.0, check)


def test_criterion_09_fiber_certificates():
    def check():
        for n in range(4, 13):
            kmax = layer_count(n) - 1
            assert degree((n - 1, 1)) + degree((n - 2, 1, 1)) == layer_value(n, kmax)

        for n in range(4, 11):
            started = time.perf_counter()
            result = fibers_mod.search_decomposition(n, fix_top=True, max_solutions=3)
            elapsed = time.perf_counter() - started
            assert result.solutions, f"no decomposition at n={n}"
            assert elapsed < 120.0, f"n={n} took {elapsed:.1f}s"
            for d in result.solutions:
                assert fibers_mod.verify_decomposition(d).ok
                assert set(d.fibers[layer_count(n) - 1]) == {(n - 1, 1), (n - 2, 1, 1)}

        started = time.perf_counter()
        result = fibers_mod.search_decomposition(
            11, fix_top=True, max_solutions=1, parallel=4
        )
        elapsed = time.perf_counter() - started
        assert result.solutions and elapsed < 900.0
        assert fibers_mod.verify_decomposition(result.solutions[0]).ok
        assert set(result.solutions[0].fibers[layer_count(11) - 1]) == {(10, 1), (9, 1, 1)}

        # the degree-12 search is reported, not asserted
        probe = fibers_mod.search_decomposition(
            12, fix_top=True, max_solutions=1, time_budget=20.0
        )
        status = (
            f"found within probe budget" if probe.solutions else
            "not found within the 20s probe budget (reported only)"
        )
        print(f"  degree-12 fiber search: {status}")
        return "verified certificates with the fixed top fiber for n = 4..11"

    _criterion(9, 1200.0, check)


def test_criterion_10_determinism(capsys):
    def collect(argv):
        code = cli_run(argv)
        out = capsys.readouterr().out
        assert code == 0, argv
        return out

    def check():
        pipelines = [
            ["degrees", "--n", "8", "--format", "json"],
            ["twisted", "count", "--auto", "inner:7:(1,2)(3,4,5)", "--format", "json"],
            ["twisted", "verify-bound", "--n", "6", "--format", "json"],
            ["fibers", "search", "--n", "9", "--fix-top", "--format", "json"],
            ["twisted", "sweep-outer6", "--format", "json"],
        ]
        for argv in pipelines:
            outputs = set()
            for k in ("1", "2", "8"):
                outputs.add(collect(argv + ["--parallel", k]))
            outputs.add(collect(argv + ["--parallel", "1"]))  # repeat run
            assert len(outputs) == 1, f"nondeterministic output for {argv}"
        return "byte-identical reports across repeats and parallelism 1, 2, 8"

    started = time.perf_counter()
    detail = check()
    elapsed = time.perf_counter() - started
    with capsys.disabled():
        print(f"ACCEPTANCE 10: PASS — {detail} [{elapsed:.2f}s, budget 600.0s]")
    assert elapsed < 600.0
