"""
Saturated families by greedy extension
======================================

Build a few s-saturated families, check them, and look at their sizes
against the simple lower bound (1 - 1/s) 2^n.
"""

from fractions import Fraction

from saturata.constructions import random_saturated, star_family
from saturata.family import SetFamily, check_saturation, matching_number, saturate_greedy

# The greedy pass in mask order on three points gives a maximal intersecting family
F = saturate_greedy(SetFamily.empty(3), 2)
print("n=3, s=2 greedy:", F.sets())
print("saturated:", check_saturation(F, 2).saturated)

# A full cube is far from matching-free; the verdict carries a witness
v = check_saturation(SetFamily.full(4), 3)
print("2^[4] with s=3: matching witness", v.matching_witness)

# Random orders on six points, s = 3
sizes = [G.size() for G in random_saturated(6, 3, seed=1, count=50)]
print("sizes over 50 random orders: min", min(sizes), "max", max(sizes))
print("floor (1 - 1/3) * 64 =", Fraction(2, 3) * 64)

# The star {A : A meets [s-1]} sits at the conjectured minimum
S = star_family(6, 3)
print("star(6, 3): size", S.size(), "matching number", matching_number(S))
