"""Brute-force reference implementations, written straight from the definitions.

Nothing here imports the fast kernels; only plain Python sets of masks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb


def members(F) -> list[int]:
    return [int(m) for m in F.masks()]


def submasks(m: int):
    a = m
    while True:
        yield a
        if a == 0:
            return
        a = (a - 1) & m


def box_submask(A: set[int], B: set[int], n: int) -> set[int]:
    """{m : some a ⊆ m with a in A and m \\ a in B}."""
    return {m for m in range(1 << n) if any(a in A and (m ^ a) in B for a in submasks(m))}


def largest_matching(ms: list[int], within: int | None = None) -> int:
    """Max number of distinct pairwise disjoint masks from ms inside ``within``."""
    pool = sorted(set(ms))
    if within is not None:
        pool = [a for a in pool if a & ~within == 0]
    best = 0

    def rec(i, used, size):
        nonlocal best
        best = max(best, size)
        if size + (len(pool) - i) <= best:
            return
        for j in range(i, len(pool)):
            a = pool[j]
            if a & used == 0:
                rec(j + 1, used | a, size + 1)

    rec(0, 0, 0)
    return best


def is_saturated(F, s: int) -> tuple[bool, bool]:
    """(matching-free, maximal) straight from the definition."""
    ms = members(F)
    full = (1 << F.n) - 1
    free = largest_matching(ms) < s
    present = set(ms)
    maximal = all(
        largest_matching(ms, within=full ^ m) >= s - 1 for m in range(1 << F.n) if m not in present
    )
    return free, maximal


def boundary_count(F, i: int) -> int:
    """Sets A avoiding element i (1-based) with exactly one of A, A+i in F."""
    bit = 1 << (i - 1)
    return sum(1 for m in range(1 << F.n) if not m & bit and F.membership[m] != F.membership[m | bit])


def g_oracle(n: int, s: int) -> int:
    ok = [
        t
        for t in range(n + 1)
        if sum(comb(n, i) for i in range(t + 1)) <= Fraction((1 << n) - ((1 << (s - 1)) - s) * (1 << t), s)
    ]
    return max(ok)


def has_transversal(families, n: int) -> bool:
    lists = [members(F) for F in families]

    def rec(j, used):
        if j == len(lists):
            return True
        return any(a & used == 0 and rec(j + 1, used | a) for a in lists[j])

    return rec(0, 0)


def is_cross_saturated(families, n: int) -> bool:
    if has_transversal(families, n):
        return False
    for i, F in enumerate(families):
        present = set(members(F))
        for m in range(1 << n):
            if m in present:
                continue
            trial = list(families)
            trial[i] = F.with_mask(m)
            if not has_transversal(trial, n):
                return False
    return True


def all_matchings(ms: list[int], size: int):
    for combo in combinations(sorted(set(ms)), size):
        u = 0
        ok = True
        for a in combo:
            if a & u:
                ok = False
                break
            u |= a
        if ok:
            yield combo
