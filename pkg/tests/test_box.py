import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import random_family, random_increasing, structured_corpus
from saturata.box import (
    BoxPowerCache,
    avoiding_part,
    box_power,
    box_product,
    box_product_fast,
    box_product_naive,
    embed_avoiding,
    section,
    section_ratio,
    vdbk_check,
    verify_claim31,
    verify_claim32,
)
from saturata.constructions import block_family, random_saturated, star_family
from saturata.family import SetFamily, bar_family, complement_family, up_closure


def fam(n, *sets):
    return SetFamily.from_sets(n, sets)


pairs = st.integers(0, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.booleans(), min_size=1 << n, max_size=1 << n),
        st.lists(st.booleans(), min_size=1 << n, max_size=1 << n),
    ).map(lambda ab: (SetFamily(n, np.array(ab[0], bool)), SetFamily(n, np.array(ab[1], bool))))
)


def as_set(F):
    return set(oracles.members(F))


def test_box_examples():
    A = up_closure(fam(2, [1]))
    B = up_closure(fam(2, [2]))
    assert box_product(A, B) == fam(2, [1, 2])
    big = SetFamily.from_predicate(3, lambda m: bin(m).count("1") >= 2)
    assert box_product(big, big).size() == 0


@settings(max_examples=200)
@given(pairs)
def test_both_routes_match_submask_oracle(ab):
    A, B = ab
    expect = oracles.box_submask(as_set(A), as_set(B), A.n)
    assert as_set(box_product_naive(A, B)) == expect
    assert as_set(box_product_fast(A, B)) == expect


def test_fast_equals_naive_structured_corpus():
    for n in range(0, 5):
        corpus = structured_corpus(n)
        for A in corpus:
            for B in corpus:
                assert box_product_fast(A, B) == box_product_naive(A, B)


def test_fast_equals_naive_random_n10(rng):
    for _ in range(100):
        A, B = random_family(rng, 10), random_family(rng, 10)
        assert box_product_fast(A, B) == box_product_naive(A, B)


@given(pairs)
def test_box_is_commutative(ab):
    A, B = ab
    assert box_product(A, B) == box_product(B, A)


def test_box_power_examples():
    F = SetFamily.from_predicate(3, lambda m: m & 1)
    assert box_power(F, 0) == SetFamily.full(3)
    assert box_power(F, 1) == F
    assert box_power(F, 2).size() == 0
    with pytest.raises(ValueError):
        box_power(F, -1)


def test_box_power_cache(rng):
    F = random_increasing(rng, 6)
    cache = BoxPowerCache(F)
    for m in range(4):
        assert cache[m] == box_power(F, m)


def test_power_equals_bar_of_complement():
    for n in range(3, 8):
        for s in range(2, min(n + 1, 4) + 1):
            for F in random_saturated(n, s, 5, 3) + [star_family(n, s)]:
                assert box_power(F, s - 1) == bar_family(complement_family(F))
                assert box_power(F, s).size() == 0


def test_vdbk_examples():
    A = up_closure(fam(2, [1]))
    B = up_closure(fam(2, [2]))
    assert vdbk_check(A, B) == (1, 1, True)
    full = SetFamily.full(3)
    assert vdbk_check(full, full) == (8, 8, True)
    with pytest.raises(ValueError):
        vdbk_check(fam(2, [1]), full)


def test_vdbk_random(rng):
    for n in range(2, 8):
        for _ in range(30):
            lhs, rhs, ok = vdbk_check(random_increasing(rng, n), random_increasing(rng, n))
            assert ok and lhs <= rhs


def test_section_examples():
    F = SetFamily.from_predicate(3, lambda m: m & 1)
    sp = section(F, 1)
    assert sp.at.size() == 4 and sp.avoid.size() == 0
    for x in (1, 2, 3):
        sp = section(SetFamily.full(3), x)
        assert sp.at == SetFamily.full(2) and sp.avoid == SetFamily.full(2)
    with pytest.raises(ValueError):
        section(F, 4)


@settings(max_examples=100)
@given(pairs, st.data())
def test_section_reindexing(ab, data):
    F, _ = ab
    if F.n == 0:
        return
    x = data.draw(st.integers(1, F.n))
    sp = section(F, x)
    for S in F.sets():
        rest = [e if e < x else e - 1 for e in S if e != x]
        target = sp.at if x in S else sp.avoid
        assert target.membership[sum(1 << (e - 1) for e in rest)]
    assert sp.at.size() + sp.avoid.size() == F.size()
    assert section(embed_avoiding(sp.avoid, x), x).avoid == sp.avoid
    assert avoiding_part(F, x).size() == sp.avoid.size()


def test_section_exchange_identity():
    for n in range(3, 7):
        for s in (2, 3):
            for F in random_saturated(n, s, 2, 2):
                A = box_power(F, s - 1)
                for x in range(1, n + 1):
                    lhs = box_power(section(F, x).avoid, s - 1).size()
                    assert lhs == section(A, x).avoid.size()


def test_claim31_examples():
    star = SetFamily.from_predicate(4, lambda m: m & 1)
    assert verify_claim31(star, 2, 2, 0)
    with pytest.raises(ValueError):
        verify_claim31(SetFamily.full(3), 2, 1, 0)
    with pytest.raises(ValueError):
        verify_claim31(star, 2, 1, 2)


def test_claim31_s2_t0_means_no_complement_pair():
    for n in range(3, 8):
        for F in random_saturated(n, 2, 11, 3):
            for x in range(1, n + 1):
                assert verify_claim31(F, 2, x, 0)
                sp = section(F, x)
                full = (1 << (n - 1)) - 1
                for m in oracles.members(sp.avoid):
                    assert not sp.at.membership[full ^ m]


def test_claim31_last_t_forces_empty_product():
    for F in random_saturated(6, 3, 4, 3):
        for x in range(1, 7):
            sp = section(F, x)
            assert verify_claim31(F, 3, x, 2)
            assert box_product(sp.at, box_power(sp.avoid, 2)).size() == 0


def test_claim32_s2_reduces_to_half_cube():
    for F in random_saturated(6, 2, 3, 4):
        lhs, rhs, ok = verify_claim32(F, 2, 1)
        assert ok and lhs == box_power(F, 1).size() and rhs == 32


def test_claim32_block_family():
    bc = block_family(9, 3)
    lhs, rhs, ok = verify_claim32(bc.family, 3, 1)
    assert ok and lhs <= rhs


def test_section_ratio():
    assert section_ratio(SetFamily.full(3), 2) == 0.5
    with pytest.raises(ValueError):
        section_ratio(SetFamily.empty(3), 1)
