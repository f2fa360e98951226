"""
Influences and the KKL inequality
=================================

Exact influences from boundary-pair counts, checked against the real
right-hand sides.
"""

import numpy as np

from saturata.constructions import block_family
from saturata.family import SetFamily
from saturata.influence import check_kkl, good_section_bound, influence_report

maj = SetFamily.from_predicate(5, lambda m: bin(m).count("1") >= 3)
print("majority n=5 influences:", [str(x) for x in influence_report(maj).influences])

rng = np.random.default_rng(2)
for n in (6, 9, 12):
    F = SetFamily(n, rng.random(1 << n) < 0.2)
    rep = influence_report(F)
    print(f"n={n}: p={float(rep.p):.3f} sum I^2={float(rep.sum_sq):.4f} rhs={rep.kkl_rhs:.4f}", check_kkl(F))

bc = block_family(9, 3)
x, ratio, bound, holds = good_section_bound(bc.family, 3)
print(f"block (9,3): best coordinate {x}, ratio {ratio} <= {bound:.4f}: {holds}")
