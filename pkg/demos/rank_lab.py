"""
Ranks of product polynomials
============================

Each W_k vector is the 0/1 evaluation of a product of x_j and (1 - x_j)
factors over a matching. Ranks are exact integer eliminations.
"""

from saturata.constructions import block_family, star_family
from saturata.polyrank import rank_report

for name, F, s in [
    ("star n=3 s=2", star_family(3, 2), 2),
    ("star n=6 s=2", star_family(6, 2), 2),
    ("block n=6 s=3", block_family(6, 3).family, 3),
]:
    rep = rank_report(F, s)
    print(f"{name}: |G|={rep.g_size} per-k (vectors, rank) {rep.per_k} sum {rep.total_rank_sum}")
    print("   verdicts:", rep.verdicts)
    for inst in rep.lemma46:
        print(f"   k={inst.k}: {inst.count} independent vectors over an upset of size {inst.upset_size}")
