"""Exact rank checks for the W_k product polynomials of a saturated family.

Each polynomial ∏_{j∈X} x_j ∏_{j∈Y} (1 − x_j), with X and Y disjoint unions
of matched members, is stored by its values on {0,1}^n: the indicator of
the subcube {m : X ⊆ m, m ∩ Y = ∅}. All ranks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from saturata.bounds import g_of
from saturata.family import SetFamily, bar_family, check_saturation, complement_family
from saturata.linalg import EchelonBasis, exact_rank

GUARD_N = 10


@dataclass(frozen=True)
class PolyVector:
    n: int
    x_part: int
    y_part: int

    def __post_init__(self):
        if self.x_part & self.y_part:
            raise ValueError("x- and y-parts must be disjoint")

    @property
    def values(self) -> np.ndarray:
        idx = np.arange(1 << self.n)
        return ((idx & self.x_part) == self.x_part) & ((idx & self.y_part) == 0)

    @property
    def support_spec(self) -> tuple[int, int]:
        return self.x_part, self.y_part


def monomial_vectors(n: int) -> list[np.ndarray]:
    """p_S for every S ⊆ [n]: value 1 at m iff S ⊆ m."""
    idx = np.arange(1 << n)
    return [(idx & S) == S for S in range(1 << n)]


def matchings(F: SetFamily, size: int) -> list[tuple[int, ...]]:
    """All sets of ``size`` distinct pairwise disjoint members, as ascending
    mask tuples in lexicographic order."""
    members = [int(m) for m in F.masks()]
    out: list[tuple[int, ...]] = []

    def rec(start: int, used: int, chosen: list[int]):
        if len(chosen) == size:
            out.append(tuple(chosen))
            return
        for i in range(start, len(members)):
            a = members[i]
            if a & used == 0:
                chosen.append(a)
                rec(i + 1, used | a, chosen)
                chosen.pop()

    rec(0, 0, [])
    return out


def first_decompositions(F: SetFamily, parts: int) -> dict[int, tuple[int, ...]]:
    """For each union of ``parts`` disjoint members, its lexicographically
    first matching."""
    first: dict[int, tuple[int, ...]] = {}
    for mt in matchings(F, parts):
        u = 0
        for a in mt:
            u |= a
        first.setdefault(u, mt)
    return first


def _union(parts) -> int:
    u = 0
    for a in parts:
        u |= a
    return u


def _require(F: SetFamily, s: int):
    if F.n > GUARD_N:
        raise ValueError(f"n={F.n} exceeds the matching-enumeration guard n <= {GUARD_N}")
    if not 2 <= s <= F.n + 1:
        raise ValueError(f"s={s} outside 2..n+1 for n={F.n}")
    if not check_saturation(F, s).saturated or F.membership[0]:
        raise ValueError(f"family is not {s}-saturated")


def build_wk_vectors(F: SetFamily, s: int, k: int, per_G_choice: str = "all") -> list[PolyVector]:
    """W_k as PolyVectors.

    ``all``: every distinct (X, Y) from an (s−1)-matching and a k-subset S.
    ``first``: one vector per union G, from its lexicographically first
    matching with S = the first k parts.
    """
    _require(F, s)
    if not 0 <= k <= s - 1:
        raise ValueError(f"k={k} outside 0..{s - 1}")
    return _build(F, s, k, per_G_choice)


def _build(F: SetFamily, s: int, k: int, mode: str, _cache=None) -> list[PolyVector]:
    n = F.n
    if mode == "first":
        dec = _cache if _cache is not None else first_decompositions(F, s - 1)
        return [PolyVector(n, _union(mt[:k]), _union(mt[k:])) for _, mt in sorted(dec.items())]
    if mode == "all":
        seen = {}
        for mt in matchings(F, s - 1):
            for S in combinations(range(s - 1), k):
                x = _union(mt[i] for i in S)
                y = _union(mt) ^ x
                seen.setdefault((x, y), None)
        return [PolyVector(n, x, y) for x, y in seen]
    raise ValueError(f"per_G_choice must be 'first' or 'all', got {mode!r}")


def _support(vectors) -> np.ndarray:
    out = None
    for v in vectors:
        out = v.values if out is None else out | v.values
    return out


def verify_orthogonality(vectors_by_k) -> bool:
    """Vectors with different k have zero inner product.

    All entries are 0/1, so pairwise orthogonality across two classes is
    the same as disjointness of the classes' combined supports.
    """
    supports = [_support(vs) for vs in vectors_by_k if vs]
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            if np.any(supports[i] & supports[j]):
                return False
    return True


def _rank(vectors) -> int:
    if not vectors:
        return 0
    return exact_rank((v.values.astype(np.int64).tolist() for v in vectors), 1 << vectors[0].n)


@dataclass
class Lemma46Instance:
    k: int
    G0: int
    upset_size: int
    count: int
    predicted: int
    claim47: bool
    claim48: bool
    independent: bool


@dataclass
class RankReport:
    n: int
    s: int
    per_k: list[tuple[int, int]]
    total_rank_sum: int
    g_size: int
    g_value: int
    g0_size: Optional[int] = None
    G0: Optional[int] = None
    lemma46: list = field(default_factory=list)
    lemma46_reason: Optional[str] = None
    verdicts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "per_k": [{"k": k, "num_vectors": a, "rank": b} for k, (a, b) in enumerate(self.per_k)],
            "total_rank_sum": self.total_rank_sum,
            "g_size": self.g_size,
            "g_value": self.g_value,
            "g0_size": self.g0_size,
            "G0": self.G0,
            "lemma46": [vars(x) for x in self.lemma46],
            "lemma46_reason": self.lemma46_reason,
            "verdicts": self.verdicts,
        }


def _pick_G0(G: SetFamily, limit: int) -> Optional[int]:
    masks = G.masks()
    sizes = np.bitwise_count(masks)
    ok = masks[sizes <= limit]
    if ok.size == 0:
        return None
    order = np.lexsort((ok, np.bitwise_count(ok)))
    return int(ok[order[0]])


def _lemma46(F: SetFamily, s: int, k: int, G: SetFamily, G0: int, dec) -> tuple[Lemma46Instance, list]:
    """The p_{G,k,S} and q_{H,k} polynomials built from fixed decompositions."""
    n = F.n
    B = dec[G0]
    upset = [int(g) for g in G.masks() if int(g) & G0 == G0]
    p_by_S: dict[tuple[int, ...], list[PolyVector]] = {}
    for S in combinations(range(s - 1), k):
        vs = []
        for g in upset:
            # leftover elements of G go to the first part; F is increasing
            C = list(B)
            C[0] |= g ^ G0
            x = _union(C[i] for i in S)
            vs.append(PolyVector(n, x, g ^ x))
        p_by_S[S] = vs
    qs = []
    for h in (int(m) for m in G.masks()):
        if h & G0 == G0:
            continue
        D = dec[h]
        chosen: list[int] = []
        for b in B[:k]:
            if not any(D[j] & b for j in chosen):
                chosen.append(next(j for j in range(s - 1) if D[j] & b))
        for j in range(s - 1):
            if len(chosen) >= k:
                break
            if j not in chosen:
                chosen.append(j)
        x = _union(D[j] for j in chosen)
        qs.append(PolyVector(n, x, h ^ x))

    first_k = tuple(range(k))
    claim47 = verify_orthogonality(list(p_by_S.values()))
    others = [v for S, vs in p_by_S.items() if S != first_k for v in vs]
    claim48 = not others or not qs or verify_orthogonality([qs, others])
    allv = [v for vs in p_by_S.values() for v in vs] + qs
    count = len(allv)
    independent = _rank(allv) == count
    predicted = G.size() + (comb(s - 1, k) - 1) * len(upset)
    inst = Lemma46Instance(k, G0, len(upset), count, predicted, claim47, claim48, independent)
    return inst, allv


def rank_report(F: SetFamily, s: int, G0_policy: str = "auto") -> RankReport:
    _require(F, s)
    if G0_policy not in ("auto", "none"):
        raise ValueError(f"G0_policy must be 'auto' or 'none', got {G0_policy!r}")
    n = F.n
    G = bar_family(complement_family(F))
    dec = first_decompositions(F, s - 1)
    per_k = []
    all_by_k = []
    first_by_k = []
    for k in range(s):
        vs = _build(F, s, k, "all")
        all_by_k.append(vs)
        per_k.append((len(vs), _rank(vs)))
        first_by_k.append(_build(F, s, k, "first", dec))
    total = sum(r for _, r in per_k)
    rep = RankReport(n, s, per_k, total, G.size(), g_of(n, s))

    rep.verdicts["decompositions_cover_G"] = sorted(dec) == [int(m) for m in G.masks()]
    rep.verdicts["orthogonality"] = verify_orthogonality(all_by_k)
    rep.verdicts["claim43_injective"] = all(
        len({v.support_spec for v in vs}) == len(vs) for vs in first_by_k
    )
    basis = EchelonBasis(1 << n)
    first_all = [v for vs in first_by_k for v in vs]
    for v in first_all:
        basis.add(v.values.astype(np.int64).tolist())
    rep.verdicts["claim45_independent"] = basis.rank == len(first_all) == s * G.size()
    rep.verdicts["claim45"] = all(r >= G.size() for _, r in per_k)
    rep.verdicts["sum"] = total <= 1 << n
    rep.verdicts["counting"] = s * G.size() <= total

    if G0_policy == "none":
        rep.lemma46_reason = "disabled by policy"
        rep.verdicts["lemma46"] = None
        return rep
    limit = n - rep.g_value
    G0 = _pick_G0(G, limit)
    if G0 is None:
        rep.lemma46_reason = f"no member of G has size <= n - g(n,s) = {limit}"
        rep.verdicts["lemma46"] = None
        return rep
    rep.G0 = G0
    ok = True
    for k in range(s):
        inst, _ = _lemma46(F, s, k, G, G0, dec)
        rep.lemma46.append(inst)
        rep.g0_size = inst.upset_size
        ok &= inst.claim47 and inst.claim48 and inst.independent
        ok &= per_k[k][1] >= inst.count == inst.predicted
        ok &= inst.upset_size >= 1 << rep.g_value
        ok &= inst.count >= G.size() + (comb(s - 1, k) - 1) * (1 << rep.g_value)
    rep.verdicts["lemma46"] = bool(ok)
    return rep
