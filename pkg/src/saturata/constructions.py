"""Explicit saturated families, random corpora and a small exhaustive search."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Optional

import numpy as np

from saturata.box import box_power, section
from saturata.family import SetFamily, check_saturation, mask_of, saturate_greedy


def _check_range(n: int, s: int):
    if n < 1 or not 2 <= s <= n + 1:
        raise ValueError(f"need n >= 1 and 2 <= s <= n+1, got n={n}, s={s}")


def star_family(n: int, s: int) -> SetFamily:
    """{A : A meets {1, ..., s-1}}, of size 2^n − 2^(n−s+1)."""
    _check_range(n, s)
    core = (1 << (s - 1)) - 1
    return SetFamily(n, (np.arange(1 << n) & core) != 0)


@dataclass(frozen=True)
class BlockConstruction:
    """s−1 disjoint odd blocks of size m = 2r+1 on the lowest elements, rest in J.

    The family holds every set with more than half of some block.
    """

    n: int
    s: int
    m: int
    r: int
    blocks: tuple[tuple[int, ...], ...]
    J: tuple[int, ...]
    family: SetFamily

    def box_closed_form(self) -> SetFamily:
        """Sets with more than half of *every* block."""
        return _majority_family(self.n, self.blocks, self.r, require_all=True)


def _majority_family(n: int, blocks, r: int, require_all: bool) -> SetFamily:
    idx = np.arange(1 << n)
    hits = [np.bitwise_count(idx & mask_of(b)) >= r + 1 for b in blocks]
    combine = np.logical_and if require_all else np.logical_or
    mem = hits[0]
    for h in hits[1:]:
        mem = combine(mem, h)
    return SetFamily(n, mem)


def block_family(n: int, s: int) -> BlockConstruction:
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    if n < s - 1:
        raise ValueError(f"need n >= s-1 for a block of size 1, got n={n}, s={s}")
    m = n // (s - 1)
    if m % 2 == 0:
        m -= 1
    r = (m - 1) // 2
    blocks = tuple(tuple(range(i * m + 1, (i + 1) * m + 1)) for i in range(s - 1))
    J = tuple(range((s - 1) * m + 1, n + 1))
    fam = _majority_family(n, blocks, r, require_all=False)
    return BlockConstruction(n, s, m, r, blocks, J, fam)


def block_ratio_formula(r: int) -> Fraction:
    """1/2 − C(2r, r) / 2^(2r+1)."""
    return Fraction(1, 2) - Fraction(comb(2 * r, r), 1 << (2 * r + 1))


@dataclass(frozen=True)
class SectionProfile:
    per_coordinate: dict
    min_ratio: Fraction
    formula: Fraction


def section_ratio_profile(bc: BlockConstruction) -> SectionProfile:
    """|F^□(s−1)(x̄)| / |F^□(s−1)| for every coordinate x, by enumeration."""
    A = box_power(bc.family, bc.s - 1)
    total = A.size()
    per = {x: Fraction(section(A, x).avoid.size(), total) for x in range(1, bc.n + 1)}
    return SectionProfile(per, min(per.values()), block_ratio_formula(bc.r))


def random_saturated(n: int, s: int, seed: int, count: int) -> list[SetFamily]:
    """``count`` greedy saturations of the empty family in seeded random orders.

    Family i uses the order from ``numpy.random.default_rng([seed, i])``.
    """
    _check_range(n, s)
    out = []
    for i in range(count):
        order = np.random.default_rng([seed, i]).permutation(1 << n)
        out.append(saturate_greedy(SetFamily.empty(n), s, order))
    return out


@dataclass
class SearchResult:
    n: int
    s: int
    minimum_size: int
    witness: SetFamily
    mode: str
    explored: int


# exact-mode search space guard: n <= 5 for s = 2, n <= 4 otherwise
EXACT_GUARD = {2: 5}
EXACT_GUARD_DEFAULT = 4


def _upsets(n: int) -> list[int]:
    """All up-closed families over [n] as integers, bit m set iff mask m is in.

    An up-set over [n] is a pair (lower half ⊆ upper half) of up-sets over
    [n−1]; the top element n selects the half.
    """
    if n == 0:
        return [0, 1]
    prev = _upsets(n - 1)
    shift = 1 << (n - 1)
    return [lo | (hi << shift) for hi in prev for lo in prev if lo & ~hi == 0]


def _perm_tables(n: int) -> np.ndarray:
    """For every permutation of the coordinates, the induced map on masks."""
    idx = np.arange(1 << n)
    tables = []
    for perm in permutations(range(n)):
        img = np.zeros(1 << n, dtype=np.int64)
        for i, j in enumerate(perm):
            img |= ((idx >> i) & 1) << j
        tables.append(img)
    return np.array(tables)


def canonical_form(F: SetFamily) -> int:
    """Smallest membership integer over all coordinate permutations."""
    return int(_canonical_ints(_to_bits(F.n, [_pack(F.membership)]), _perm_tables(F.n))[0])


def _pack(mem: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mem, bitorder="little").tobytes(), "little")


def _to_bits(n: int, values) -> np.ndarray:
    size = 1 << n
    arr = np.array([[(v >> m) & 1 for m in range(size)] for v in values], dtype=bool)
    return arr.reshape(len(values), size)


def _canonical_ints(bits: np.ndarray, tables: np.ndarray) -> np.ndarray:
    """Row-wise canonical integers for a batch of membership bitmaps (n <= 6)."""
    size = bits.shape[1]
    weights = np.left_shift(np.uint64(1), np.arange(size, dtype=np.uint64))
    best = None
    for img in tables:
        # permuted family has mask img[m] iff m is a member
        permuted = np.zeros_like(bits)
        permuted[:, img] = bits
        vals = (permuted.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
        best = vals if best is None else np.minimum(best, vals)
    return best


def search_minimum(
    n: int,
    s: int,
    mode: str = "exact",
    budget: int = 100,
    seed: int = 0,
    force: bool = False,
) -> SearchResult:
    """Smallest s-saturated family over [n] that avoids the empty set.

    ``exact`` enumerates every up-closed family, keeps one representative per
    isomorphism class (canonical = least membership integer), and checks each
    representative for saturation. ``stochastic`` keeps the smallest of
    ``budget`` greedy saturations in seeded random orders.
    """
    _check_range(n, s)
    if mode == "exact":
        limit = EXACT_GUARD.get(s, EXACT_GUARD_DEFAULT)
        if n > limit and not force:
            raise ValueError(f"exact search is limited to n <= {limit} for s={s}")
        ups = _upsets(n)
        bits = _to_bits(n, ups)
        canon = _canonical_ints(bits, _perm_tables(n))
        packed = np.array(ups, dtype=np.uint64)
        reps = np.flatnonzero(canon == packed)
        best: Optional[SetFamily] = None
        for i in reps:
            F = SetFamily(n, bits[i])
            if F.membership[0]:
                continue
            if check_saturation(F, s).saturated and (best is None or F.size() < best.size()):
                best = F
        assert best is not None
        return SearchResult(n, s, best.size(), best, "exact", len(reps))
    if mode == "stochastic":
        fams = random_saturated(n, s, seed, budget)
        best = min(fams, key=lambda F: F.size())
        return SearchResult(n, s, best.size(), best, "stochastic", budget)
    raise ValueError(f"mode must be 'exact' or 'stochastic', got {mode!r}")
