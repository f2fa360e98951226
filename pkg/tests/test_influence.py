import math
from fractions import Fraction

import pytest

import oracles
from conftest import random_family
from saturata.constructions import block_family, random_saturated, star_family
from saturata.family import SetFamily
from saturata.influence import (
    at_least,
    at_most,
    boundary_counts,
    check_kkl,
    good_section_bound,
    influence_report,
    lemma26_coordinate,
    log_of,
)


def popcount(m):
    return bin(m).count("1")


def test_dictator():
    F = SetFamily.from_predicate(8, lambda m: m & 1)
    rep = influence_report(F)
    assert rep.p == Fraction(1, 2)
    assert rep.influences == (1,) + (0,) * 7
    assert rep.sum_sq == 1
    assert abs(rep.kkl_rhs - 0.25 * math.log(8) ** 2 / 40) < 1e-15
    assert check_kkl(F) == (True, True)


def test_parity_and_majority():
    par = SetFamily.from_predicate(6, lambda m: popcount(m) % 2 == 0)
    assert set(influence_report(par).influences) == {1}
    maj = SetFamily.from_predicate(5, lambda m: popcount(m) >= 3)
    assert influence_report(maj).influences == (Fraction(3, 8),) * 5


def test_boundary_counts_match_oracle(rng):
    for n in range(1, 8):
        F = random_family(rng, n)
        assert boundary_counts(F) == [oracles.boundary_count(F, i) for i in range(1, n + 1)]


def test_empty_family_kkl_is_trivial():
    rep = influence_report(SetFamily.empty(5))
    assert rep.kkl_rhs == 0 and rep.sum_sq == 0
    assert check_kkl(SetFamily.empty(5)) == (True, True)


def test_kkl_rejects_dense():
    with pytest.raises(ValueError):
        check_kkl(SetFamily.full(4))


def test_log_bases():
    assert log_of(8, "two") == 3
    assert log_of(8) == math.log(8)
    with pytest.raises(ValueError):
        log_of(8, "ten")


def test_tolerance_helpers():
    # near-ties within the slack are flagged, never silently passed
    assert not at_least(Fraction(1, 3), 1 / 3)
    assert not at_most(Fraction(1, 4), 0.25)
    assert at_least(Fraction(1, 3), 0.33)
    assert at_most(Fraction(1, 4), 0.26)
    assert at_least(0, 0.0) and at_most(0, 0.0)
    assert not at_least(0, 1e-13)
    assert not at_least(Fraction(1, 2), 0.6)


def test_lemma26_examples():
    x, count, thr = lemma26_coordinate(SetFamily.from_masks(4, [0]))
    assert (x, count) == (1, 1) and thr < 1
    dict8 = SetFamily.from_predicate(8, lambda m: m & 1)
    assert lemma26_coordinate(dict8)[:2] == (1, 128)
    with pytest.raises(ValueError):
        lemma26_coordinate(SetFamily.full(3))


def test_good_section_examples():
    bc = block_family(9, 3)
    x, ratio, bound, ok = good_section_bound(bc.family, 3)
    assert ratio == Fraction(1, 4) and ok
    star = star_family(8, 2)
    x, ratio, bound, ok = good_section_bound(star, 2)
    assert (x, ratio, ok) == (1, 0, True)
    with pytest.raises(ValueError):
        good_section_bound(SetFamily.full(4), 2)


def test_good_section_holds_on_corpus():
    for n in range(3, 9):
        for s in (2, 3):
            for F in random_saturated(n, s, 9, 3):
                assert good_section_bound(F, s)[3]


def test_report_dict():
    d = influence_report(star_family(4, 2)).to_dict()
    assert d["p"] == "1/2" and d["best_coordinate"] == 1
