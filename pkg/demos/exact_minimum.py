"""
Smallest saturated families on a few points
===========================================

Enumerate every up-set, keep one per relabelling class, and report the
smallest s-saturated one.
"""

from saturata.bounds import ceil_frac, conjecture_bound, main_bound
from saturata.constructions import search_minimum

for n, s in [(3, 2), (4, 2), (4, 3), (4, 4), (5, 2)]:
    res = search_minimum(n, s, "exact")
    print(
        f"n={n} s={s}: minimum {res.minimum_size} over {res.explored} classes; "
        f"main bound {ceil_frac(main_bound(n, s))}, conjecture {conjecture_bound(n, s)}"
    )
    print("   witness:", res.witness.sets())
