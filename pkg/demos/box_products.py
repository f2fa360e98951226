"""
Disjoint occurrence products
============================

The product A □ B collects unions of disjoint members. For a saturated F
the (s-1)-th power is the family of complements of non-members, and the
s-th power is empty.
"""

import time

import numpy as np

from saturata.box import box_power, box_product_fast, box_product_naive, vdbk_check
from saturata.constructions import random_saturated
from saturata.family import SetFamily, bar_family, complement_family, up_closure

A = up_closure(SetFamily.from_sets(2, [[1]]))
B = up_closure(SetFamily.from_sets(2, [[2]]))
print("A □ B =", box_product_fast(A, B).sets())
print("|A □ B|, |bar(A) ∩ B|, holds:", vdbk_check(A, B))

F = random_saturated(8, 3, seed=4, count=1)[0]
print("F^□2 equals bar(F^c):", box_power(F, 2) == bar_family(complement_family(F)))
print("|F^□3| =", box_power(F, 3).size())

# The two routes agree; the transform route scales to n = 20
rng = np.random.default_rng(0)
X = SetFamily(12, rng.random(4096) < 0.1)
Y = SetFamily(12, rng.random(4096) < 0.1)
print("routes agree at n=12:", box_product_fast(X, Y) == box_product_naive(X, Y))

gens = [sum(1 << int(e) for e in rng.choice(20, 4, replace=False)) for _ in range(10)]
U = up_closure(SetFamily.from_masks(20, gens))
t0 = time.perf_counter()
cube = box_power(U, 3)
print(f"n=20: |U|={U.size()}, |U^□3|={cube.size()}, {time.perf_counter() - t0:.1f}s")
