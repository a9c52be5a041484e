"""Moving a small tower along Path_4, one configuration at a time.

Pegs sit in a row and a disk can only hop to a neighbouring peg, so even two
disks need ten moves to get from one end to the other.
"""
# %%
from pathhanoi import apply_move, perfect, solve
from pathhanoi.oracle import bfs_distance

h, n = 4, 3
state = perfect(h, 1, n)
print(f"start      {state}")
for step, move in enumerate(solve(h, n, 1, 4), 1):
    state = apply_move(state, move)
    print(f"{step:>3} {str(move):<6} {state}")

# %%
# The solver's 19 moves are optimal here: breadth-first search over all 4**3
# configurations agrees.
print("shortest possible:", bfs_distance(perfect(h, 1, n), perfect(h, 4, n)))

# %%
# Going back is the same sequence read backwards with every move reversed.
back = list(solve(h, n, 4, 1))
print(back[:3], "...", len(back), "moves")
