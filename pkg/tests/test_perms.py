import math

import pytest
from hypothesis import given, strategies as st

from sntwist.perms import (
    CycleDecomposition,
    Permutation,
    compose,
    conjugate,
    cycle_decomposition,
    enumerate_group,
    inverse,
    order,
    parse_permutation,
    rank,
    unrank,
)


def perm_strategy(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(n)).map(Permutation)
    )


def test_validation_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation.from_one_line([1, 2, 4])


def test_compose_worked_product():
    # the book-keeping convention: right factor applied first
    p = parse_permutation("(1,2,3,4,5)", 5)
    q = parse_permutation("(1,5)(2,4)", 5)
    assert str(compose(p, q)) == "(2,5)(3,4)"


def test_compose_identity_and_pointwise():
    assert compose(Permutation.identity(3), parse_permutation("(1,2)", 3)) == \
        parse_permutation("(1,2)", 3)
    # 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
    assert str(compose(parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)", 3))) == "(2,3)"


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse_examples():
    assert str(inverse(parse_permutation("(1,2,3)", 3))) == "(1,3,2)"
    assert inverse(Permutation.identity(4)) == Permutation.identity(4)
    invol = parse_permutation("(1,2)(3,4)", 4)
    assert inverse(invol) == invol


def test_order_examples():
    assert order(parse_permutation("(1,2,3)(4,5)", 5)) == 6
    assert order(Permutation.identity(5)) == 1
    assert order(parse_permutation("(1,2)(3,4)(5,6)", 6)) == 2


def test_cycle_decomposition_examples():
    p = Permutation.from_one_line([3, 1, 2, 5, 4])
    assert cycle_decomposition(p).cycles == ((1, 3, 2), (4, 5))
    assert cycle_decomposition(Permutation.identity(4)).cycles == ()
    assert cycle_decomposition(Permutation.from_one_line([2, 1, 4, 3])).cycles == (
        (1, 2),
        (3, 4),
    )


def test_cycle_decomposition_canonical_and_roundtrip():
    for n in range(1, 7):
        for p in enumerate_group(n):
            dec = p.cycle_decomposition()
            for cyc in dec.cycles:
                assert cyc[0] == min(cyc)
            assert list(dec.cycles) == sorted(dec.cycles, key=lambda c: c[0])
            assert dec.to_permutation() == p


def test_conjugate_examples():
    x = parse_permutation("(1,2)", 3)
    y = parse_permutation("(1,2,3)", 3)
    assert str(conjugate(x, y)) == "(1,3,2)"
    assert conjugate(Permutation.identity(3), y) == y
    assert str(conjugate(parse_permutation("(1,2,3)", 3), x)) == "(2,3)"


def test_conjugate_preserves_order_exhaustive():
    for n in range(2, 6):
        group = list(enumerate_group(n))
        for x in group:
            for y in group:
                assert order(conjugate(x, y)) == order(y)


def test_enumerate_group_counts_and_chunks():
    for n in range(1, 7):
        seen = list(enumerate_group(n))
        assert len(seen) == math.factorial(n)
        assert len(set(seen)) == math.factorial(n)
    first = list(enumerate_group(3, 0, 3))
    second = list(enumerate_group(3, 3, 6))
    assert len(first) == len(second) == 3
    assert set(first) | set(second) == set(enumerate_group(3))
    assert next(iter(enumerate_group(4))) == Permutation.identity(4)


def test_enumerate_group_bounds():
    with pytest.raises(ValueError):
        list(enumerate_group(11))
    list(enumerate_group(11, 0, 2, max_n=11))  # explicit override
    with pytest.raises(ValueError):
        list(enumerate_group(3, 0, 7))


def test_rank_unrank_roundtrip():
    for n in range(1, 6):
        for r, p in enumerate(enumerate_group(n)):
            assert rank(p) == r
            assert unrank(n, r) == p
    with pytest.raises(ValueError):
        unrank(3, 6)


@given(perm_strategy(), st.data())
def test_compose_associative(p, data):
    q = Permutation(data.draw(st.permutations(range(p.n))))
    r = Permutation(data.draw(st.permutations(range(p.n))))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perm_strategy(), st.data())
def test_inverse_antihomomorphism(p, data):
    q = Permutation(data.draw(st.permutations(range(p.n))))
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
    assert compose(p, inverse(p)) == Permutation.identity(p.n)


def test_parse_and_emit_formats():
    assert parse_permutation("[3,1,2]") == Permutation.from_one_line([3, 1, 2])
    assert parse_permutation("(1,3,2)", 3) == Permutation.from_one_line([3, 1, 2])
    assert parse_permutation("(1,3,2)") == Permutation.from_one_line([3, 1, 2])
    assert str(parse_permutation("[3,1,2]")) == "(1,3,2)"
    assert str(Permutation.identity(5)) == "()"
    assert parse_permutation("()", 2) == Permutation.identity(2)
    with pytest.raises(ValueError):
        parse_permutation("()")
    with pytest.raises(ValueError):
        parse_permutation("1 2 3")
    with pytest.raises(ValueError):
        parse_permutation("(1,2)(2,3)", 3)


def test_one_based_images():
    p = parse_permutation("(1,3,2)", 3)
    assert p.images == (3, 1, 2)
    assert p(1) == 3 and p(3) == 2
    assert str(CycleDecomposition(cycles=((1, 3, 2),), n=3)) == "(1,3,2)"
