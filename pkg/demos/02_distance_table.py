"""Exact distances between perfect configurations on Path_4, and how the solvers compare.

The BFS state space for n disks has 4**n states; n = 11 is about 4.2 million
and takes a few seconds with the vectorised frontier expansion.
"""
# %%
import numpy as np

from pathhanoi.counts import count_f, count_t
from pathhanoi.oracle import format_table1, regenerate_table1

rows = regenerate_table1(9)
print(format_table1(rows))

# %%
# The ratio column, t14 / (sqrt(n) 3**sqrt(2n)), stays within a narrow band.
ratios = np.array([float(r.ratio) for r in rows])
print(f"ratio range {ratios.min():.3f} .. {ratios.max():.3f}")

# %%
# four_move (T) and farthest_move (F) against the optimum for the hardest task.
# Both are upper bounds; they meet the optimum only for a few small n. F
# differs from T only where the general block split picks a different
# remainder than round(sqrt(2n)).
optimum = np.array([r.t14 for r in rows])
four = np.array([count_t(r.n) for r in rows])
far = np.array([count_f(4, r.n) for r in rows])
for n, o, t, f in zip(range(1, 10), optimum, four, far):
    print(f"n={n}: optimum {o:>4}  four_move {t:>4}  farthest_move {f:>4}")
print("four_move optimal for n =", [int(n) for n in np.flatnonzero(four == optimum) + 1])
print("worst excess of four_move:", f"{(four / optimum).max():.3f}x")
