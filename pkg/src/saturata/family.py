"""Set families over [n] as membership bitmaps, plus the structural predicates.

A set A of [n] is encoded as the mask with bit j-1 set for every j in A.
A :class:`SetFamily` holds a read-only boolean array of length 2**n with
``membership[m]`` true iff the set with mask ``m`` is a member.

Matchings are sets of *distinct* pairwise disjoint members, so the empty set
fills at most one slot of a matching.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from saturata import _kernels

MAX_N = int(os.environ.get("SATURATA_MAX_N", "22"))


def mask_of(elements: Iterable[int]) -> int:
    """Mask for a collection of 1-based elements."""
    m = 0
    for j in elements:
        if j < 1:
            raise ValueError(f"elements are 1-based, got {j}")
        m |= 1 << (j - 1)
    return m


def elements_of(mask: int) -> list[int]:
    """Sorted 1-based elements of a mask."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


@dataclass(frozen=True, eq=False)
class SetFamily:
    n: int
    membership: np.ndarray

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"n={self.n} outside supported range 0..{MAX_N}")
        mem = np.array(self.membership, dtype=bool)
        if mem.shape != (1 << self.n,):
            raise ValueError(
                f"membership must have {1 << self.n} entries, got shape {mem.shape}"
            )
        mem.flags.writeable = False
        object.__setattr__(self, "membership", mem)

    # constructors

    @classmethod
    def empty(cls, n: int) -> "SetFamily":
        return cls(n, np.zeros(1 << n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "SetFamily":
        return cls(n, np.ones(1 << n, dtype=bool))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        mem = np.zeros(1 << n, dtype=bool)
        for m in masks:
            if not 0 <= m < (1 << n):
                raise ValueError(f"mask {m} does not fit in n={n} bits")
            mem[m] = True
        return cls(n, mem)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        masks = []
        for s in sets:
            m = mask_of(s)
            if m >= (1 << n):
                raise ValueError(f"set {sorted(s)} has an element outside [{n}]")
            masks.append(m)
        return cls.from_masks(n, masks)

    @classmethod
    def from_predicate(cls, n: int, pred) -> "SetFamily":
        """Family of masks m with ``pred(m)`` true."""
        return cls.from_masks(n, (m for m in range(1 << n) if pred(m)))

    # basic queries

    @property
    def fullmask(self) -> int:
        return (1 << self.n) - 1

    def size(self) -> int:
        return int(np.count_nonzero(self.membership))

    __len__ = size

    def __contains__(self, mask: int) -> bool:
        return bool(self.membership[mask])

    def masks(self) -> np.ndarray:
        return np.flatnonzero(self.membership)

    def sets(self) -> list[list[int]]:
        return [elements_of(int(m)) for m in self.masks()]

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.membership, other.membership)

    def __hash__(self):
        return hash((self.n, self.membership.tobytes()))

    def __repr__(self):
        return f"SetFamily(n={self.n}, size={self.size()})"

    # lattice operations

    def _same_n(self, other: "SetFamily"):
        if self.n != other.n:
            raise ValueError(f"ground sets differ: n={self.n} vs n={other.n}")

    def __and__(self, other: "SetFamily") -> "SetFamily":
        self._same_n(other)
        return SetFamily(self.n, self.membership & other.membership)

    def __or__(self, other: "SetFamily") -> "SetFamily":
        self._same_n(other)
        return SetFamily(self.n, self.membership | other.membership)

    def __le__(self, other: "SetFamily") -> bool:
        self._same_n(other)
        return not np.any(self.membership & ~other.membership)

    def __ge__(self, other: "SetFamily") -> bool:
        return other <= self

    def without(self, mask: int) -> "SetFamily":
        mem = self.membership.copy()
        mem[mask] = False
        return SetFamily(self.n, mem)

    def with_mask(self, mask: int) -> "SetFamily":
        mem = self.membership.copy()
        mem[mask] = True
        return SetFamily(self.n, mem)


def complement_family(F: SetFamily) -> SetFamily:
    """All sets of [n] that are not members of F."""
    return SetFamily(F.n, ~F.membership)


def bar_family(F: SetFamily) -> SetFamily:
    """Element-wise complements {[n] minus A : A in F}."""
    # fullmask ^ m == fullmask - m, so this is a reversal of the bitmap
    return SetFamily(F.n, F.membership[::-1])


def is_increasing(F: SetFamily) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check closure under supersets in O(n 2^n).

    Returns ``(True, None)`` or ``(False, (m, m | bit))`` for the first
    violating pair found, scanning coordinates in order.
    """
    mem = F.membership
    for i in range(F.n):
        v = mem.reshape(-1, 2, 1 << i)
        bad = v[:, 0, :] & ~v[:, 1, :]
        if bad.any():
            block, offset = np.argwhere(bad)[0]
            m = int(block) * (2 << i) + int(offset)
            return False, (m, m | (1 << i))
    return True, None


def up_closure(F: SetFamily) -> SetFamily:
    return SetFamily(F.n, _kernels.superset_or(F.membership, F.n))


def _nonempty(mem: np.ndarray) -> np.ndarray:
    if mem[0]:
        mem = mem.copy()
        mem[0] = False
    return mem


def matching_reach(F: SetFamily, t: int) -> np.ndarray:
    """Bitmap of the sets that contain t distinct pairwise disjoint members of F.

    For t = 0 every set qualifies. Uses the fact that the disjoint-union power
    of an up-closed family is up-closed and equals the up-closure of the power.
    """
    n = F.n
    full = np.ones(1 << n, dtype=bool)
    if t == 0:
        return full
    up = _kernels.superset_or(_nonempty(F.membership), n)
    prev, cur = full, up
    for _ in range(t - 1):
        prev, cur = cur, _kernels.box_fast(cur, up, n)
    if F.membership[0]:
        # the empty member takes one slot
        return cur | prev
    return cur


def matching_number(F: SetFamily) -> int:
    """Largest number of distinct pairwise disjoint members.

    Dynamic programme over masks: nu[m] is the matching number of the members
    contained in m. Either the lowest element of m is unused, or it lies in
    exactly one matched member.
    """
    n = F.n
    mem = F.membership
    masks = np.flatnonzero(_nonempty(mem))
    low = np.full(masks.shape, -1)
    for i in range(n - 1, -1, -1):
        low[(masks >> i) & 1 == 1] = i
    by_low = [masks[low == i] for i in range(n)]
    nu = np.zeros(1 << n, dtype=np.int64)
    for m in range(1, 1 << n):
        i = (m & -m).bit_length() - 1
        best = nu[m ^ (1 << i)]
        cand = by_low[i]
        if cand.size:
            cand = cand[(cand & ~m) == 0]
            if cand.size:
                best = max(best, 1 + int(nu[m ^ cand].max()))
        nu[m] = best
    return int(nu[-1]) + int(mem[0])


def matching_number_box(F: SetFamily) -> int:
    """Matching number as the largest t whose t-fold disjoint union is nonempty."""
    if F.size() == 0:
        return 0
    n = F.n
    rest = _nonempty(F.membership)
    t, cur = 0, np.ones(1 << n, dtype=bool)
    while True:
        nxt = _kernels.box_fast(cur, rest, n) if t else rest.copy()
        if not nxt.any():
            break
        t, cur = t + 1, nxt
    return t + int(F.membership[0])


def find_matching(F: SetFamily, t: int, within: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """Some t distinct pairwise disjoint members contained in ``within``.

    Returns the masks in ascending order, or None.
    """
    n = F.n
    if within is None:
        within = F.fullmask
    reach = [matching_reach(F.without(0), j) for j in range(t + 1)]
    use_empty = bool(F.membership[0]) and t >= 1
    need = t - 1 if use_empty and not reach[t][within] else t
    if not reach[need][within]:
        return None
    members = F.masks()
    members = members[members != 0]
    out = []
    rest = within
    for j in range(need, 0, -1):
        cand = members[(members & ~rest) == 0]
        ok = cand[reach[j - 1][rest ^ cand]]
        a = int(ok[0])
        out.append(a)
        rest ^= a
    if need < t:
        out.append(0)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SaturationVerdict:
    s: int
    matching_free: bool
    maximal: bool
    matching_witness: Optional[tuple[int, ...]] = None
    addable_witness: Optional[int] = None

    @property
    def saturated(self) -> bool:
        return self.matching_free and self.maximal


def _check_s(s: int):
    if s < 2:
        raise ValueError(f"saturation is defined for s >= 2, got s={s}")


def check_saturation(F: SetFamily, s: int) -> SaturationVerdict:
    """Decide whether F is s-saturated.

    Matching-free iff no set reaches an s-matching; maximal iff for every
    non-member m, the complement of m contains an (s-1)-matching.
    """
    _check_s(s)
    full = F.fullmask
    reach_s = matching_reach(F, s)
    matching_free = not reach_s[full]
    witness = None if matching_free else find_matching(F, s)
    reach = matching_reach(F, s - 1)
    idx = np.arange(1 << F.n)
    bad = ~F.membership & ~reach[full ^ idx]
    addable = None
    if bad.any():
        addable = int(np.flatnonzero(bad)[0])
    return SaturationVerdict(s, matching_free, addable is None, witness, addable)


def is_saturated(F: SetFamily, s: int) -> bool:
    return check_saturation(F, s).saturated


def mask_order(n: int, order: str = "ascending", seed: Optional[int] = None) -> np.ndarray:
    """Candidate order for :func:`saturate_greedy`.

    ``ascending``: by mask value. ``popcount``: descending popcount, then
    mask. ``random``: a permutation from numpy's PCG64 generator seeded with
    ``seed`` (``numpy.random.default_rng(seed).permutation``).
    """
    idx = np.arange(1 << n, dtype=np.int64)
    if order == "ascending":
        return idx
    if order == "popcount":
        return idx[np.lexsort((idx, -_kernels.popcounts(n)))]
    if order == "random":
        if seed is None:
            raise ValueError("random order needs a seed")
        return np.random.default_rng(seed).permutation(idx)
    raise ValueError(f"unknown order {order!r}")


def saturate_greedy(
    F0: SetFamily,
    s: int,
    order: str | Sequence[int] = "ascending",
    seed: Optional[int] = None,
) -> SetFamily:
    """Extend F0 to an s-saturated family by a single greedy pass.

    A candidate G is added when the members inside [n] minus G have matching
    number at most s-2. The empty set is always tried last: with s <= n+1 it
    can never be added to a saturated family, and trying it first would
    produce the degenerate family {emptyset} at s = 2.
    """
    _check_s(s)
    n = F0.n
    if isinstance(order, str):
        seq = mask_order(n, order, seed)
    else:
        seq = np.asarray(order, dtype=np.int64)
        if sorted(seq.tolist()) != list(range(1 << n)):
            raise ValueError("explicit order must be a permutation of all masks")
    seq = np.concatenate([seq[seq != 0], [0]])

    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    full = size - 1
    # reach[t][Y]: Y contains t distinct disjoint members of the current family
    reach = [np.ones(size, dtype=bool)] + [np.zeros(size, dtype=bool) for _ in range(s)]
    mem = np.zeros(size, dtype=bool)

    def add(g: int):
        above = (idx & g) == g
        rest = idx & ~g
        for t in range(s, 0, -1):
            reach[t] |= above & reach[t - 1][rest]
        mem[g] = True

    for g in F0.masks():
        add(int(g))
    if reach[s][full]:
        raise ValueError(f"initial family already contains a matching of size {s}")
    for g in seq:
        g = int(g)
        if not mem[g] and not reach[s - 1][full ^ g]:
            add(g)
    return SetFamily(n, mem)
