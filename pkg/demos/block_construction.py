"""
Majority blocks and section ratios
==================================

s-1 odd blocks of size m = 2r+1; a set is in the family when it holds a
majority of some block. Every block coordinate has the same section ratio,
and that ratio creeps toward 1/2 as r grows.
"""

from saturata.box import box_power
from saturata.constructions import block_family, block_ratio_formula, section_ratio_profile
from saturata.family import is_saturated

for n, s in [(9, 3), (15, 3), (13, 4), (7, 2)]:
    bc = block_family(n, s)
    prof = section_ratio_profile(bc)
    print(
        f"n={n} s={s}: m={bc.m} r={bc.r} saturated={is_saturated(bc.family, s)} "
        f"min ratio {prof.min_ratio} (formula {prof.formula})"
    )

bc = block_family(9, 3)
print("|F^□2| for n=9, s=3:", box_power(bc.family, 2).size())
print("closed form agrees:", box_power(bc.family, 2) == bc.box_closed_form())

print("formula by r:", [str(block_ratio_formula(r)) for r in range(1, 7)])
