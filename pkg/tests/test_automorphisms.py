import numpy as np
import pytest

from sntwist import kernels
from sntwist.automorphisms import (
    AdjustmentUndefinedError,
    IdentityAutomorphism,
    InnerAutomorphism,
    UncoveredCaseError,
    UncoveredSubcaseError,
    alpha_injection,
    build_outer_s6,
    map_mult4,
    outer_s6_catalog,
    parse_automorphism,
    pentad_catalog,
    star_factorization,
)
from sntwist.characters import class_size, cycle_type
from sntwist.perms import Permutation, compose, conjugate, enumerate_group, parse_permutation

NATURAL = (2, 3, 4, 5, 6)


def test_pentad_catalog():
    catalog = pentad_catalog()
    assert len(catalog) == 6
    assert str(catalog[0].synthemes[0]) == "(1,2)(3,4)(5,6)"
    assert str(catalog[2].synthemes[1]) == "(1,3)(2,4)(5,6)"
    for pentad in catalog:
        pairs = set()
        for s in pentad.synthemes:
            cycles = s.cycle_decomposition().cycles
            assert sorted(len(c) for c in cycles) == [2, 2, 2]
            assert s.order() == 2
            new = {frozenset(c) for c in cycles}
            assert not (new & pairs)
            pairs |= new


def test_star_factorization_rebuilds():
    for p in enumerate_group(6, 0, 720):
        acc = Permutation.identity(6)
        for i in star_factorization(p):
            acc = compose(Permutation.from_cycles([(1, i)], 6), acc)
        assert acc == p


def test_build_outer_examples():
    gamma = build_outer_s6(1, NATURAL)
    assert str(gamma.apply(parse_permutation("(1,2)", 6))) == "(1,2)(3,4)(5,6)"
    for slot, i in enumerate(NATURAL):
        img = gamma.apply(parse_permutation(f"(1,{i})", 6))
        assert img == pentad_catalog()[0].synthemes[slot]
    # any image of a transposition is a triple transposition
    for i in range(2, 7):
        img = gamma.apply(parse_permutation(f"(1,{i})", 6))
        assert sorted(len(c) for c in img.cycle_decomposition().cycles) == [2, 2, 2]
    assert gamma.describe() == "outer6:p1:o23456"
    assert parse_automorphism("outer6:p1:o23456") == gamma


def test_outer_is_order_preserving_homomorphism():
    gamma = build_outer_s6(3, (4, 2, 6, 3, 5), verify="full")
    group = list(enumerate_group(6))
    for g in group:
        assert gamma.apply(g).order() == g.order()
    for g in group[::37]:
        for h in group[::41]:
            assert gamma.apply(compose(g, h)) == compose(gamma.apply(g), gamma.apply(h))


def test_outer_catalog_all_distinct():
    catalog = outer_s6_catalog()
    assert len(catalog) == 720
    assert len({a.imgrank.tobytes() for a in catalog}) == 720
    # spot full verification on a few; construction already checked
    # multiplicativity against every generator row
    for a in catalog[::307]:
        build_outer_s6(a.pentad_index, a.ordering, verify="full")


def test_class_sizes_preserved():
    group = list(enumerate_group(6))
    gamma = build_outer_s6(1, NATURAL)
    x = parse_permutation("(1,2,3)", 6)
    for alpha in (IdentityAutomorphism(6), InnerAutomorphism(x), gamma):
        for g in group:
            assert class_size(cycle_type(alpha.apply(g))) == class_size(cycle_type(g))


def test_apply_variants_and_degree_checks():
    inner = InnerAutomorphism(parse_permutation("(1,2)", 3))
    assert str(inner.apply(parse_permutation("(1,2,3)", 3))) == "(1,3,2)"
    ident = IdentityAutomorphism(4)
    g = parse_permutation("(1,2,3)", 4)
    assert ident.apply(g) == g
    with pytest.raises(ValueError):
        ident.apply(parse_permutation("(1,2)", 3))
    with pytest.raises(ValueError):
        parse_automorphism("outer6:p7:o23456")
    with pytest.raises(ValueError):
        parse_automorphism("rot:3")


def test_bad_pentad_assignment_rejected():
    # a non-pentad family (two synthemes sharing a transposition) must
    # not extend to an automorphism
    from sntwist.automorphisms import Pentad

    with pytest.raises(ValueError):
        Pentad(
            index=0,
            synthemes=tuple(
                parse_permutation(s, 6)
                for s in ["(1,2)(3,4)(5,6)", "(1,3)(2,4)(5,6)", "(1,4)(2,6)(3,5)",
                          "(1,5)(2,4)(3,6)", "(1,6)(2,3)(4,5)"]
            ),
        )


def test_alpha_injection_examples():
    x = parse_permutation("(1,2)", 3)
    y = parse_permutation("(1,2,3)", 3)
    image = alpha_injection(x, y)
    assert str(image) == "(2,3)" and image.order() == 2
    assert alpha_injection(x, Permutation.identity(3)) == x

    with pytest.raises(UncoveredCaseError):
        alpha_injection(parse_permutation("(1,2,3,4)", 4), Permutation.identity(4))
    with pytest.raises(ValueError):
        alpha_injection(x, parse_permutation("(1,3)", 3))  # not twisted


def twisted_members(n, x):
    table = kernels.group_table(n)
    conj = kernels.conjugate_rows(x.word, table)
    mask = np.all(conj == kernels.inverse_rows(table), axis=1)
    return [
        Permutation(tuple(int(v) for v in table[r])) for r in np.flatnonzero(mask)
    ]


def test_alpha_injection_exhaustive_to_degree_7():
    for n in range(2, 8):
        table = kernels.group_table(n)
        orders = kernels.element_orders(table)
        involution_set = {
            Permutation(tuple(int(v) for v in table[r]))
            for r in np.flatnonzero(orders <= 2)
        }
        for r in range(len(table)):
            k = int(orders[r])
            if k % 4 == 0:
                continue
            x = Permutation(tuple(int(v) for v in table[r]))
            members = twisted_members(n, x)
            images = [alpha_injection(x, y) for y in members]
            assert len(set(images)) == len(images), f"not injective for x={x}"
            assert all(img in involution_set for img in images)
            if k == 2:
                # the order-2 case is onto the involutions as well
                assert set(images) == involution_set


def test_ord3_conjugators_give_conjugation_case():
    x = parse_permutation("(1,2,3)", 4)
    for y in twisted_members(4, x):
        image = alpha_injection(x, y)
        assert image == conjugate(x, y)
        assert image.order() <= 2


def test_map_mult4_instances():
    # order <= 2 maps to itself
    x = parse_permutation("(1,2,3,4)", 6)
    y = parse_permutation("(1,3)(2,4)", 6)
    assert conjugate(x, y) == y.inverse()
    r = map_mult4(x, y)
    assert r.image == y and r.case == "order<=2"

    # one long cycle reflected by transpositions sitting inside x
    x = parse_permutation("(1,5)(2,4)(6,7,8,9)", 9)
    y = parse_permutation("(1,2,3,4,5)", 9)
    r = map_mult4(x, y)
    assert str(r.image) == "(2,5)(3,4)"
    assert r.case == "distinct-lengths" and r.product == "y*x'"

    # two 4-cycles conjugated along a chain, the paired-transposition
    # conjugator pattern (an extra 4-cycle supplies the order)
    x = parse_permutation("(1,8)(2,7)(3,6)(4,5)(9,10,11,12)", 12)
    y = parse_permutation("(1,2,3,4)(5,6,7,8)", 12)
    assert x.order() == 4
    r = map_mult4(x, y)
    assert r.case == "same-length(j=4,m=2)"
    assert str(r.image) == "(1,5)(2,8)(3,7)(4,6)"
    assert r.image.order() == 2

    # three 3-cycles is odd/even: covered with a chain of 2m-cycles
    x = parse_permutation("(1,8,9,4,5,12)(2,7,10,3,6,11)(13,14,15,16)", 16)
    y = parse_permutation("(1,2,3,4)(5,6,7,8)(9,10,11,12)", 16)
    assert x.order() == 12
    r = map_mult4(x, y)
    assert r.case == "same-length(j=4,m=3)"
    assert str(r.image) == "(1,5)(2,9)(3,12)(4,6)(7,11)(8,10)"

    # odd block length with even count
    x = parse_permutation("(1,6)(2,5)(3,4)(7,8,9,10)", 10)
    y = parse_permutation("(1,2,3)(4,5,6)", 10)
    r = map_mult4(x, y)
    assert r.case == "same-length(j=3,m=2)"
    assert str(r.image) == "(1,4)(2,6)(3,5)"


def test_map_mult4_uncovered_structures():
    # odd length, odd count chain
    x = Permutation.from_one_line([4, 6, 5, 7, 9, 8, 1, 3, 2, 11, 12, 13, 10])
    y = parse_permutation("(1,2,3)(4,5,6)(7,8,9)", 13)
    assert x.order() == 12
    with pytest.raises(UncoveredSubcaseError):
        map_mult4(x, y)

    # a chain whose conjugator rotation is outside the printed pattern;
    # pairing such instances is exactly where images collide
    x = Permutation.from_one_line([8, 7, 6, 5, 2, 1, 4, 3])
    y = parse_permutation("(1,2,3,4)(5,6,7,8)", 8)
    assert conjugate(x, y) == y.inverse()
    with pytest.raises(UncoveredSubcaseError):
        map_mult4(x, y)

    # repeated and distinct lengths mixed
    x = parse_permutation("(1,4)(2,6)(3,5)(7,11)(8,10)(12,13,14,15)", 15)
    y = parse_permutation("(1,2,3)(4,5,6)(7,8,9,10,11)", 15)
    assert x.order() == 4
    assert conjugate(x, y) == y.inverse()
    with pytest.raises(UncoveredSubcaseError):
        map_mult4(x, y)

    # precondition failures
    with pytest.raises(ValueError):
        map_mult4(parse_permutation("(1,2)", 4), parse_permutation("(1,2)", 4))
    with pytest.raises(ValueError):
        map_mult4(
            parse_permutation("(1,2,3,4)", 4), parse_permutation("(1,2,3)", 4)
        )


def test_map_mult4_exhaustive_scan_to_degree_8():
    covered_instances = 0
    for n in range(4, 9):
        table = kernels.group_table(n)
        orders = kernels.element_orders(table)
        inv_rows = kernels.inverse_rows(table)
        for r in np.flatnonzero(orders % 4 == 0):
            x = Permutation(tuple(int(v) for v in table[r]))
            conj = kernels.conjugate_rows(table[r], table)
            mask = np.all(conj == inv_rows, axis=1)
            images = {}
            for yr in np.flatnonzero(mask):
                y = Permutation(tuple(int(v) for v in table[yr]))
                try:
                    result = map_mult4(x, y)
                except (UncoveredSubcaseError, AdjustmentUndefinedError):
                    continue
                assert result.image.order() <= 2
                covered_instances += 1
                assert result.image not in images or images[result.image] == y, (
                    f"collision for x={x}: {y} vs {images[result.image]}"
                )
                images[result.image] = y
    assert covered_instances > 1000  # the scan is far from vacuous
