"""
Lower bounds over a grid
========================

Exact rational bounds for a range of n and s, plus the g(n, 3) trend.
"""

from saturata.bounds import bound_report, g_trend, grid_rows
from saturata.constructions import star_family

print(f"{'n':>3} {'s':>2} {'g':>2} {'blms':>10} {'kkl':>10} {'main':>10} {'conj':>8}")
for row in grid_rows(range(6, 13, 2), [2, 3, 4]):
    print(
        f"{row['n']:>3} {row['s']:>2} {row['g']:>2} {float(row['thm_blms']):>10.2f} "
        f"{row['thm_kkl_natural']:>10.2f} {float(row['thm_main']):>10.2f} {float(row['conjecture']):>8.0f}"
    )

rep = bound_report(star_family(6, 3), 3)
print("star(6,3):", rep.family_size, "vs main", rep.thm_main, "verdicts", rep.verdicts)

# g(n, 3) drifts away from n/2 roughly like sqrt(n); reported, not fitted
for n, g, t in g_trend(range(20, 61, 10)):
    print(f"n={n}: g={g}, (n/2 - g)/sqrt(n) = {t:.3f}")
