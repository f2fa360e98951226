"""Coordinate influences of a family's indicator function and the KKL checks.

The influence of coordinate i is the fraction of sets A avoiding i for which
exactly one of A and A ∪ {i} is a member. Left-hand sides are exact
rationals. The logarithm and sqrt(5) terms on the right are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from saturata.box import box_power, section
from saturata.family import SetFamily, check_saturation

# slack for exact-vs-float comparisons; it only ever turns a pass into an alarm
SLACK = 1e-12

LOG_BASES = ("natural", "two")


def log_of(n: float, base: str = "natural") -> float:
    if base == "natural":
        return math.log(n)
    if base == "two":
        return math.log2(n)
    raise ValueError(f"log base must be one of {LOG_BASES}, got {base!r}")


def at_least(exact: Fraction | int, bound: float) -> bool:
    """exact >= bound, conservatively: near-ties count as failures.

    A bound of exactly zero is compared exactly.
    """
    if bound == 0.0:
        return exact >= 0
    return float(exact) >= bound + SLACK


def at_most(exact: Fraction | int, bound: float) -> bool:
    if bound == 0.0:
        return exact <= 0
    return float(exact) <= bound - SLACK


def boundary_counts(F: SetFamily) -> list[int]:
    """Per coordinate, the number of boundary pairs (A, A ∪ {i})."""
    mem = F.membership
    out = []
    for i in range(F.n):
        v = mem.reshape(-1, 2, 1 << i)
        out.append(int(np.count_nonzero(v[:, 0, :] != v[:, 1, :])))
    return out


@dataclass(frozen=True)
class InfluenceReport:
    n: int
    log_base: str
    p: Fraction
    influences: tuple[Fraction, ...]
    sum_sq: Fraction
    kkl_rhs: float
    max_influence: Fraction
    best_coordinate: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "log_base": self.log_base,
            "p": str(self.p),
            "influences": [str(x) for x in self.influences],
            "sum_sq": str(self.sum_sq),
            "sum_sq_float": float(self.sum_sq),
            "kkl_rhs": self.kkl_rhs,
            "max_influence": str(self.max_influence),
            "best_coordinate": self.best_coordinate,
        }


def influence_report(F: SetFamily, log_base: str = "natural") -> InfluenceReport:
    n = F.n
    if n < 2:
        raise ValueError("influence bounds need n >= 2")
    half = 1 << (n - 1)
    infl = tuple(Fraction(c, half) for c in boundary_counts(F))
    p = Fraction(F.size(), 1 << n)
    best = max(range(n), key=lambda i: (infl[i], -i))
    lg = log_of(n, log_base)
    return InfluenceReport(
        n=n,
        log_base=log_base,
        p=p,
        influences=infl,
        sum_sq=sum((x * x for x in infl), Fraction(0)),
        kkl_rhs=float(p) ** 2 * lg * lg / (5 * n),
        max_influence=infl[best],
        best_coordinate=best + 1,
    )


def check_kkl(F: SetFamily, log_base: str = "natural") -> tuple[bool, bool]:
    """(sum of squared influences >= p² log² n / 5n, max influence >= p log n / (√5 n))."""
    rep = influence_report(F, log_base)
    if rep.p > Fraction(1, 2):
        raise ValueError(f"KKL needs density p <= 1/2, got {rep.p}")
    max_rhs = float(rep.p) * log_of(F.n, log_base) / (math.sqrt(5) * F.n)
    return at_least(rep.sum_sq, rep.kkl_rhs), at_least(rep.max_influence, max_rhs)


def lemma26_coordinate(A: SetFamily, log_base: str = "natural") -> tuple[int, int, float]:
    """Coordinate with the most boundary pairs, the count, and |A| log n / (2√5 n).

    Ties go to the smallest coordinate.
    """
    n = A.n
    if n < 2:
        raise ValueError("needs n >= 2")
    if A.size() > 1 << (n - 1):
        raise ValueError(f"|A| = {A.size()} exceeds 2^(n-1)")
    counts = boundary_counts(A)
    i = int(np.argmax(counts))
    threshold = A.size() * log_of(n, log_base) / (2 * math.sqrt(5) * n)
    return i + 1, counts[i], threshold


def good_section_bound(F: SetFamily, s: int, log_base: str = "natural"):
    """Coordinate x minimising |F^□(s-1)(x̄)| / |F^□(s-1)|, against ½(1 − log n/(2√5 n)).

    Returns ``(x, ratio, bound, holds)``.
    """
    n = F.n
    if n < 2:
        raise ValueError("needs n >= 2")
    if not check_saturation(F, s).saturated or F.membership[0]:
        raise ValueError(f"not {s}-saturated")
    A = box_power(F, s - 1)
    total = A.size()
    if total == 0:
        raise ValueError(f"not {s}-saturated")
    avoid = [section(A, x).avoid.size() for x in range(1, n + 1)]
    i = int(np.argmin(avoid))
    ratio = Fraction(avoid[i], total)
    bound = 0.5 * (1 - log_of(n, log_base) / (2 * math.sqrt(5) * n))
    return i + 1, ratio, bound, at_most(ratio, bound)
