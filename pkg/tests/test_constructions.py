from fractions import Fraction
from math import comb

import pytest

from saturata.box import box_power
from saturata.bounds import ceil_frac, main_bound
from saturata.constructions import (
    block_family,
    block_ratio_formula,
    canonical_form,
    random_saturated,
    search_minimum,
    section_ratio_profile,
    star_family,
)
from saturata.family import SetFamily, check_saturation, is_saturated


def test_star_examples():
    F = star_family(6, 3)
    assert F.size() == 48 and is_saturated(F, 3)
    assert star_family(5, 2).size() == 16
    F = star_family(4, 5)
    assert F.size() == 15 and is_saturated(F, 5)
    with pytest.raises(ValueError):
        star_family(3, 5)


def test_star_grid():
    for n in range(1, 11):
        for s in range(2, min(5, n + 1) + 1):
            F = star_family(n, s)
            assert F.size() == 2**n - 2 ** (n - s + 1)
            assert is_saturated(F, s)


def test_block_9_3():
    bc = block_family(9, 3)
    assert (bc.m, bc.r) == (3, 1)
    assert bc.blocks == ((1, 2, 3), (4, 5, 6)) and bc.J == (7, 8, 9)
    assert box_power(bc.family, 2).size() == (comb(3, 2) + 1) ** 2 * 8 == 128


def test_block_7_2_is_majority():
    bc = block_family(7, 2)
    assert (bc.m, bc.r) == (7, 3)
    assert bc.family == SetFamily.from_predicate(7, lambda m: bin(m).count("1") >= 4)
    assert is_saturated(bc.family, 2)


def test_block_boundary_and_errors():
    bc = block_family(2, 3)
    assert (bc.m, bc.r) == (1, 0)
    assert bc.family == SetFamily.from_predicate(2, lambda m: m != 0)
    with pytest.raises(ValueError):
        block_family(1, 3)


def test_block_grid_saturated_and_closed_form():
    for n in range(1, 13):
        for s in range(2, 6):
            if n < s - 1:
                continue
            bc = block_family(n, s)
            assert bc.m % 2 == 1 and (s - 1) * bc.m <= n < (s - 1) * (bc.m + 2)
            assert is_saturated(bc.family, s)
            assert box_power(bc.family, s - 1) == bc.box_closed_form()


def test_section_profile_9_3():
    prof = section_ratio_profile(block_family(9, 3))
    assert prof.min_ratio == prof.formula == Fraction(1, 4)
    assert [prof.per_coordinate[x] for x in (7, 8, 9)] == [Fraction(1, 2)] * 3


def test_ratio_formula_values():
    assert block_ratio_formula(1) == Fraction(1, 4)
    assert block_ratio_formula(2) == Fraction(5, 16)
    assert block_ratio_formula(3) == Fraction(11, 32)
    vals = [block_ratio_formula(r) for r in range(0, 12)]
    assert all(a < b < Fraction(1, 2) for a, b in zip(vals, vals[1:]))


def test_random_saturated_deterministic_and_valid():
    a = random_saturated(8, 3, 1, 10)
    b = random_saturated(8, 3, 1, 10)
    assert all(x == y for x, y in zip(a, b))
    assert all(check_saturation(F, 3).saturated for F in a)
    for seed in range(1, 101):
        assert random_saturated(4, 2, seed, 1)[0].size() >= 8


def test_canonical_form_invariant_under_relabel():
    F = SetFamily.from_sets(4, [[1], [1, 2], [1, 2, 3], [1, 2, 3, 4], [1, 3]])
    G = SetFamily.from_sets(4, [[4], [4, 3], [4, 3, 2], [1, 2, 3, 4], [4, 2]])
    assert canonical_form(F) == canonical_form(G)


def test_exact_search_small():
    r = search_minimum(3, 2, "exact")
    assert r.minimum_size == 4 and is_saturated(r.witness, 2)
    r = search_minimum(4, 2, "exact")
    assert r.minimum_size == 8 and is_saturated(r.witness, 2)
    assert r.explored == 30


def test_exact_search_4_3():
    r = search_minimum(4, 3, "exact")
    assert is_saturated(r.witness, 3) and r.witness.size() == r.minimum_size
    assert r.minimum_size >= ceil_frac(main_bound(4, 3))
    assert r.minimum_size == 12


def test_search_guard_and_stochastic():
    with pytest.raises(ValueError):
        search_minimum(5, 3, "exact")
    r = search_minimum(6, 3, "stochastic", budget=20, seed=2)
    assert is_saturated(r.witness, 3) and r.minimum_size >= 43
    with pytest.raises(ValueError):
        search_minimum(3, 2, "other")
