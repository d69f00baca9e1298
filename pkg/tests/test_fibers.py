import pytest

from sntwist.fibers import (
    FiberDecomposition,
    check_observations,
    search_decomposition,
    verify_decomposition,
)
from sntwist.partitions import (
    degree,
    layer_count,
    layer_value,
    layer_values,
    total_degree_sum,
)


def test_layers_against_degree_sum():
    for n in range(2, 15):
        assert sum(layer_values(n)) + 1 == total_degree_sum(n)


def test_degree_4_decompositions():
    result = search_decomposition(4)
    assert result.exhausted and not result.timed_out
    assert len(result.solutions) == 3
    first = result.solutions[0]
    assert first.fibers[1] == ((3, 1), (2, 1, 1))
    assert first.fibers[0] == ((2, 2), (1, 1, 1, 1))
    assert first.fiber_sums == (3, 6)
    assert all(verify_decomposition(d).ok for d in result.solutions)


def test_fix_top_forces_top_fiber():
    result = search_decomposition(4, fix_top=True)
    assert len(result.solutions) == 1
    assert result.solutions[0].fibers[1] == ((3, 1), (2, 1, 1))
    assert result.constraints == ("fix-top-fiber",)
    for n in range(4, 10):
        for d in search_decomposition(n, fix_top=True, max_solutions=3).solutions:
            kmax = layer_count(n) - 1
            assert set(d.fibers[kmax]) == {(n - 1, 1), (n - 2, 1, 1)}


def test_degree_5_expected_fiber():
    result = search_decomposition(5, fix_top=True)
    assert result.solutions
    d = result.solutions[0]
    assert d.fibers[1] == ((4, 1), (3, 1, 1))
    assert d.fiber_sums[1] == 10 == layer_value(5, 1)
    assert degree((4, 1)) + degree((3, 1, 1)) == 10


def test_existence_to_degree_11():
    for n in range(4, 12):
        result = search_decomposition(n, fix_top=True, max_solutions=1)
        assert result.solutions, f"no decomposition at n={n}"
        assert verify_decomposition(result.solutions[0]).ok


def test_verifier_catches_bad_decompositions():
    good = search_decomposition(4).solutions[0]

    # move a partition to the wrong fiber: sums break
    swapped = FiberDecomposition(
        n=4,
        fibers=(((1, 1, 1, 1),), ((3, 1), (2, 2), (2, 1, 1))),
        layer_values=good.layer_values,
        fiber_sums=(1, 8),
    )
    bad = verify_decomposition(swapped)
    assert not bad.ok and bad.coverage_ok
    assert bad.residuals == (-2, 2)

    # drop a partition: coverage breaks
    missing = FiberDecomposition(
        n=4,
        fibers=(((2, 2),), ((3, 1), (2, 1, 1))),
        layer_values=good.layer_values,
        fiber_sums=(2, 6),
    )
    assert not verify_decomposition(missing).coverage_ok

    # duplicate a partition across fibers: disjointness breaks
    doubled = FiberDecomposition(
        n=4,
        fibers=(((2, 2), (1, 1, 1, 1)), ((3, 1), (2, 1, 1), (2, 2))),
        layer_values=good.layer_values,
        fiber_sums=(3, 8),
    )
    assert not verify_decomposition(doubled).disjoint_ok


def test_search_bounds_and_constraint_applicability():
    with pytest.raises(ValueError):
        search_decomposition(3)
    with pytest.raises(ValueError):
        search_decomposition(13)
    with pytest.raises(ValueError):
        search_decomposition(5, fix_second=True)  # (1,2,1,1) is not a partition


def test_top_layer_algebraic_identity():
    for n in range(4, 13):
        kmax = layer_count(n) - 1
        assert degree((n - 1, 1)) + degree((n - 2, 1, 1)) == layer_value(n, kmax)
        assert layer_value(n, kmax) == n * (n - 1) // 2


def test_observations_reporting():
    result = search_decomposition(4, fix_top=True)
    report = check_observations(4, result.solutions[0])
    by_name = {e.name: e for e in report.entries}
    assert by_name["top-fiber"].holds is True
    assert by_name["second-fiber"].applicable is False
    assert by_name["second-fiber"].holds is None

    result = search_decomposition(8, fix_top=True)
    report = check_observations(8, result.solutions[0])
    by_name = {e.name: e for e in report.entries}
    assert by_name["top-fiber"].holds is True
    # the verbatim containment rule names partitions of n - 2: never
    # applicable as printed
    verbatim = [e for e in report.entries if e.name.endswith("verbatim")]
    assert verbatim and all(not e.applicable for e in verbatim)
    adjusted = [e for e in report.entries if e.name.endswith("adjusted")]
    assert all(e.applicable for e in adjusted)
    payload = report.to_payload()
    assert "structural observations machine-checked to n=11" in payload["verified_range_note"]


def test_parallel_search_matches_serial():
    for n in (6, 9):
        serial = search_decomposition(n, fix_top=True, max_solutions=4, parallel=1)
        parallel = search_decomposition(n, fix_top=True, max_solutions=4, parallel=4)
        assert serial.solutions == parallel.solutions


def test_timeout_reports_partial_progress():
    result = search_decomposition(12, fix_top=True, max_solutions=1, time_budget=0.2)
    assert result.timed_out
    assert not result.exhausted


def test_csv_rows_order():
    d = search_decomposition(4, fix_top=True).solutions[0]
    rows = d.to_csv_rows()
    assert rows == [
        (4, "[3,1]", 3, 1),
        (4, "[2,2]", 2, 0),
        (4, "[2,1,1]", 3, 1),
        (4, "[1,1,1,1]", 1, 0),
    ]
    assert [r[1] for r in rows] == [
        "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"
    ]


def test_payload_schema():
    d = search_decomposition(4, fix_top=True).solutions[0]
    payload = d.to_payload()
    assert payload["n"] == 4
    assert payload["layers"] == [3, 6]
    assert payload["fibers"][1] == {
        "k": 1,
        "partitions": ["[3,1]", "[2,1,1]"],
        "sum": 6,
    }
