"""Lower bounds on the size of s-saturated families.

All powers of two and binomial sums are exact integers or Fractions; only the
log / sqrt(5) improvement term is a float.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

import numpy as np

from saturata import _kernels
from saturata.family import SetFamily, check_saturation
from saturata.influence import log_of

# float slack for the size >= thm_kkl comparison
KKL_SLACK = 1e-6


def _check_range(n: int, s: int):
    if n < 1 or not 2 <= s <= n + 1:
        raise ValueError(f"need n >= 1 and 2 <= s <= n+1, got n={n}, s={s}")


def g_of(n: int, s: int) -> int:
    """Largest t in 0..n with s·sum_{i<=t} C(n,i) <= 2^n − (2^(s−1) − s)·2^t."""
    _check_range(n, s)
    coeff = (1 << (s - 1)) - s
    best = None
    partial = 0
    for t in range(n + 1):
        partial += comb(n, t)
        if s * partial <= (1 << n) - coeff * (1 << t):
            best = t
    assert best is not None
    return best


def blms_bound(n: int, s: int) -> Fraction:
    return Fraction(s - 1, s) * (1 << n)


def kkl_bound(n: int, s: int, log_base: str = "natural") -> float:
    gain = (s - 2) * log_of(n, log_base) / (2 * math.sqrt(5) * n) if n >= 2 else 0.0
    return (1 - 1 / (s + gain)) * 2.0**n


def main_bound(n: int, s: int) -> Fraction:
    return blms_bound(n, s) + (Fraction(1 << (s - 1), s) - 1) * (1 << g_of(n, s))


def conjecture_bound(n: int, s: int) -> Fraction:
    return (1 - Fraction(1, 1 << (s - 1))) * (1 << n)


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass
class BoundReport:
    n: int
    s: int
    family_size: int
    log_base: str
    thm_blms: Fraction
    conjecture: Fraction
    thm_kkl: Optional[float] = None
    g_value: Optional[int] = None
    thm_main: Optional[Fraction] = None
    verdicts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("thm_blms", "conjecture", "thm_main"):
            val = getattr(self, key)
            if val is not None:
                out[key] = str(val)
                out[key + "_ceil"] = ceil_frac(val)
        return out


def bound_report(F: SetFamily, s: int, log_base: str = "natural") -> BoundReport:
    """Compare |F| with every bound; F must be s-saturated and avoid the empty set.

    Verdicts cover the blms, main and kkl bounds. The kkl verdict is only
    recorded for the natural log. For s > n+1 only the blms and conjecture
    values are reported.
    """
    n = F.n
    if not check_saturation(F, s).saturated:
        raise ValueError(f"family is not {s}-saturated")
    if F.membership[0] and s <= n + 1:
        raise ValueError("saturated families containing the empty set are degenerate; bounds do not apply")
    size = F.size()
    rep = BoundReport(
        n=n,
        s=s,
        family_size=size,
        log_base=log_base,
        thm_blms=blms_bound(n, s),
        conjecture=conjecture_bound(n, s),
    )
    rep.verdicts["thm_blms"] = size >= rep.thm_blms
    if s > n + 1:
        return rep
    rep.g_value = g_of(n, s)
    rep.thm_main = main_bound(n, s)
    rep.verdicts["thm_main"] = size >= rep.thm_main
    rep.thm_kkl = kkl_bound(n, s, log_base)
    if log_base == "natural":
        rep.verdicts["thm_kkl"] = size + KKL_SLACK >= rep.thm_kkl
    return rep


def _transversal_reach(families: Sequence[SetFamily], skip: Optional[int] = None):
    """Bitmap of sets containing disjoint A_j in F_j for every j != skip."""
    n = families[0].n
    cur = None
    for j, F in enumerate(families):
        if j == skip:
            continue
        up = _kernels.superset_or(F.membership, n)
        cur = up if cur is None else _kernels.box_fast(cur, up, n)
    if cur is None:
        return np.ones(1 << n, dtype=bool)
    return cur


def find_transversal(families: Sequence[SetFamily]) -> Optional[tuple[int, ...]]:
    """Pairwise disjoint A_i in F_i, one per family, or None."""
    n = families[0].n
    k = len(families)
    # suffix[j]: sets containing disjoint members of F_j..F_{k-1}
    suffix = [None] * (k + 1)
    suffix[k] = np.ones(1 << n, dtype=bool)
    for j in range(k - 1, -1, -1):
        up = _kernels.superset_or(families[j].membership, n)
        suffix[j] = _kernels.box_fast(up, suffix[j + 1], n)
    rest = (1 << n) - 1
    if not suffix[0][rest]:
        return None
    out = []
    for j in range(k):
        cand = families[j].masks()
        cand = cand[(cand & ~rest) == 0]
        ok = cand[suffix[j + 1][rest ^ cand]]
        a = int(ok[0])
        out.append(a)
        rest ^= a
    return tuple(out)


@dataclass
class CrossVerdict:
    is_cross_saturated: bool
    total: int
    bound: int
    holds: bool
    transversal: Optional[tuple[int, ...]] = None
    addable: Optional[tuple[int, int]] = None


def cross_saturated_check(families: Sequence[SetFamily]) -> CrossVerdict:
    """Check a sequence F_1..F_s for cross s-saturation and the (s−1)·2^n bound.

    ``addable`` is (index, mask), 0-based index, when maximality fails.
    """
    if len(families) < 2:
        raise ValueError("need at least two families")
    n = families[0].n
    if any(F.n != n for F in families):
        raise ValueError("families must share the ground set")
    s = len(families)
    total = sum(F.size() for F in families)
    bound = (s - 1) << n
    transversal = find_transversal(families)
    addable = None
    if transversal is None:
        idx = np.arange(1 << n)
        full = (1 << n) - 1
        for i, F in enumerate(families):
            reach = _transversal_reach(families, skip=i)
            bad = ~F.membership & ~reach[full ^ idx]
            if bad.any():
                addable = (i, int(np.flatnonzero(bad)[0]))
                break
    ok = transversal is None and addable is None
    return CrossVerdict(ok, total, bound, (not ok) or total >= bound, transversal, addable)


def grid_rows(ns: Sequence[int], ss: Sequence[int]) -> list[dict]:
    """One row per valid (n, s) with all bound values."""
    rows = []
    for n in ns:
        for s in ss:
            if n < 1 or not 2 <= s <= n + 1:
                continue
            rows.append(
                {
                    "n": n,
                    "s": s,
                    "g": g_of(n, s),
                    "thm_blms": blms_bound(n, s),
                    "thm_kkl_natural": kkl_bound(n, s, "natural"),
                    "thm_kkl_base2": kkl_bound(n, s, "two"),
                    "thm_main": main_bound(n, s),
                    "conjecture": conjecture_bound(n, s),
                }
            )
    return rows


def g_trend(ns: Sequence[int], s: int = 3) -> list[tuple[int, int, float]]:
    """(n, g(n,s), (n/2 − g)/√n) for each n. Reported only, never asserted."""
    return [(n, g_of(n, s), (n / 2 - g_of(n, s)) / math.sqrt(n)) for n in ns]
