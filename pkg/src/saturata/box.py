"""Disjoint occurrence of families, its powers, and sections at a coordinate.

``A □ B`` is the family of disjoint unions a ⊔ b with a in A and b in B.
Powers follow the usual convention ``A^□0 = 2^[n]``. Note that the empty set
is disjoint from itself, so unlike :func:`saturata.family.matching_number`
the product places no distinctness requirement on the two factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from saturata import _kernels
from saturata.family import (
    SetFamily,
    bar_family,
    check_saturation,
    complement_family,
    is_increasing,
)


def _check_pair(A: SetFamily, B: SetFamily):
    if A.n != B.n:
        raise ValueError(f"ground sets differ: n={A.n} vs n={B.n}")


def box_product_naive(A: SetFamily, B: SetFamily) -> SetFamily:
    """Reference product: scatter a | b for every disjoint member pair.

    Cost is |A|·|B|, independent of the transform used by the fast path.
    """
    _check_pair(A, B)
    return SetFamily(A.n, _kernels.box_direct(A.membership, B.membership, A.n))


def box_product_fast(A: SetFamily, B: SetFamily) -> SetFamily:
    """Product by ranked subset convolution, O(n^2 2^n)."""
    _check_pair(A, B)
    return SetFamily(A.n, _kernels.box_fast(A.membership, B.membership, A.n))


def box_product(A: SetFamily, B: SetFamily) -> SetFamily:
    return box_product_fast(A, B)


def box_power(F: SetFamily, m: int) -> SetFamily:
    if m < 0:
        raise ValueError(f"power must be >= 0, got {m}")
    if m == 0:
        return SetFamily.full(F.n)
    out = F
    for _ in range(m - 1):
        out = box_product_fast(out, F)
    return out


@dataclass
class BoxPowerCache:
    """Lazily extended list of powers base^□t, t = 0, 1, ..."""

    base: SetFamily
    powers: list = field(default_factory=list)

    def __post_init__(self):
        if not self.powers:
            self.powers.append(SetFamily.full(self.base.n))

    def __getitem__(self, t: int) -> SetFamily:
        if t < 0:
            raise ValueError(f"power must be >= 0, got {t}")
        while len(self.powers) <= t:
            k = len(self.powers)
            nxt = self.base if k == 1 else box_product_fast(self.powers[-1], self.base)
            self.powers.append(nxt)
        return self.powers[t]


@dataclass(frozen=True)
class SectionPair:
    """F(x) and F(x̄) as families over [n] minus {x}.

    Remaining elements keep their relative order: element j < x keeps bit
    j-1, element j > x moves to bit j-2.
    """

    coordinate: int
    at: SetFamily
    avoid: SetFamily


def _masks_avoiding(n: int, x: int) -> np.ndarray:
    """Masks of [n] avoiding x, listed in the order of their re-indexed value."""
    r = np.arange(1 << (n - 1), dtype=np.int64)
    lowbits = (1 << (x - 1)) - 1
    return (r & lowbits) | ((r & ~lowbits) << 1)


def _check_coordinate(n: int, x: int):
    if not 1 <= x <= n:
        raise ValueError(f"coordinate {x} outside 1..{n}")


def section(F: SetFamily, x: int) -> SectionPair:
    _check_coordinate(F.n, x)
    src = _masks_avoiding(F.n, x)
    bit = 1 << (x - 1)
    return SectionPair(
        x,
        SetFamily(F.n - 1, F.membership[src | bit]),
        SetFamily(F.n - 1, F.membership[src]),
    )


def embed_avoiding(G: SetFamily, x: int) -> SetFamily:
    """Re-embed a family over [n] minus {x} as sets of [n] avoiding x."""
    n = G.n + 1
    _check_coordinate(n, x)
    out = np.zeros(1 << n, dtype=bool)
    out[_masks_avoiding(n, x)] = G.membership
    return SetFamily(n, out)


def avoiding_part(F: SetFamily, x: int) -> SetFamily:
    """Members of F that avoid x, still as a family over [n]."""
    return embed_avoiding(section(F, x).avoid, x)


def vdbk_check(A: SetFamily, B: SetFamily) -> tuple[int, int, bool]:
    """Compare |A □ B| with |bar(A) ∩ B| for increasing A, B."""
    _check_pair(A, B)
    for name, fam in (("A", A), ("B", B)):
        ok, _ = is_increasing(fam)
        if not ok:
            raise ValueError(f"{name} is not increasing")
    lhs = box_product_fast(A, B).size()
    rhs = (bar_family(A) & B).size()
    return lhs, rhs, lhs <= rhs


def _require_saturated(F: SetFamily, s: int):
    if not 2 <= s <= F.n + 1:
        raise ValueError(f"s={s} outside 2..n+1 for n={F.n}")
    if not check_saturation(F, s).saturated:
        raise ValueError(f"family is not {s}-saturated")


def verify_claim31(F: SetFamily, s: int, x: int, t: int, *, checked: bool = False) -> bool:
    """bar((F(x) □ F(x̄)^□t)^c) contains F(x̄)^□(s-1-t), over [n] minus {x}."""
    if not checked:
        _require_saturated(F, s)
    if not 0 <= t <= s - 1:
        raise ValueError(f"t={t} outside 0..{s - 1}")
    sp = section(F, x)
    left = bar_family(complement_family(box_product_fast(sp.at, box_power(sp.avoid, t))))
    right = box_power(sp.avoid, s - 1 - t)
    return right <= left


def verify_claim32(F: SetFamily, s: int, x: int, *, checked: bool = False) -> tuple[int, int, bool]:
    """(s-1)|F^□(s-1)| against (s-2)|F(x̄)^□(s-1)| + 2^(n-1)."""
    if not checked:
        _require_saturated(F, s)
    _check_coordinate(F.n, x)
    lhs = (s - 1) * box_power(F, s - 1).size()
    rhs = (s - 2) * box_power(section(F, x).avoid, s - 1).size() + (1 << (F.n - 1))
    return lhs, rhs, lhs <= rhs


def section_ratio(A: SetFamily, x: int) -> Fraction:
    """|A(x̄)| / |A|."""
    total = A.size()
    if total == 0:
        raise ValueError("ratio undefined for the empty family")
    return Fraction(section(A, x).avoid.size(), total)
