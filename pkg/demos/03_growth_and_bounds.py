"""How fast the move counts grow with the number of pegs, against the closed-form bound.

Counts are exact integers (F(8, 300) has dozens of digits), so growth is
compared through base-3 logarithms computed with interval arithmetic.
"""
# %%
import numpy as np

from pathhanoi.bounds import compare_bound, midpoint, log3_int, log3_u
from pathhanoi.counts import count_f

ns = [10, 50, 100, 200, 300]
for h in range(3, 9):
    logs = [float(midpoint(log3_int(count_f(h, n)))) for n in ns]
    print(f"h={h}: log3 F(h,n) at n={ns} -> {np.round(logs, 2)}")

# %%
# With more pegs the exponent grows like n**(1/(h-2)) rather than n.
h = 5
slack = [float(midpoint(log3_u(h, n))) - float(midpoint(log3_int(count_f(h, n)))) for n in ns]
print("log3 U(5,n) - log3 F(5,n):", np.round(slack, 3))

# %%
# compare_bound proves F <= U for every n with outward-rounded intervals.
reports, rows = compare_bound(6, 300)
for r in reports:
    print(r)
print("tightest ratio F/U:", max(float(r.ratio) for r in rows))
