"""Exact shortest-path distances between configurations by breadth-first search.

A configuration of ``n`` disks on ``h`` pegs is packed into the integer
``sum((peg(k) - 1) * h**(k - 1) for disk k)``, i.e. the disk -> peg map read
as ``n`` base-``h`` digits with the smallest disk least significant. The
whole state space is ``range(h**n)``; a visited flag per state lives in a
flat numpy array and each BFS level is expanded as one vectorised batch.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

import numpy as np

from .core import Configuration, perfect
from .counts import CheckReport

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "StateBudgetExceeded",
    "state_budget",
    "encode",
    "decode",
    "neighbours",
    "bfs_distance",
    "bfs_distances",
    "perfect_distances",
    "Table1Row",
    "regenerate_table1",
    "table1_ratio",
    "format_table1",
    "table1_csv",
    "check_structure",
]

DEFAULT_STATE_BUDGET = 10**8


class StateBudgetExceeded(RuntimeError):
    pass


def state_budget() -> int:
    """The state budget: ``$HANOI_STATE_BUDGET`` if set, else 10^8."""
    value = os.environ.get("HANOI_STATE_BUDGET")
    return int(value) if value else DEFAULT_STATE_BUDGET


def _check_budget(h: int, n: int, budget: int | None) -> None:
    budget = state_budget() if budget is None else budget
    if h**n > budget:
        raise StateBudgetExceeded(f"{h}^{n} = {h**n} states exceeds the budget of {budget}")


def encode(c: Configuration) -> int:
    code = 0
    for peg in reversed(c.assignment()):
        code = code * c.h + (peg - 1)
    return code


def decode(h: int, n: int, code: int) -> Configuration:
    assignment = []
    for _ in range(n):
        code, digit = divmod(code, h)
        assignment.append(digit + 1)
    return Configuration.from_assignment(h, assignment)


def _expand(codes: np.ndarray, h: int, n: int) -> np.ndarray:
    """All states one legal move away from any of ``codes`` (with repeats)."""
    if n == 0 or codes.size == 0:
        return codes[:0]
    powers = h ** np.arange(n, dtype=np.int64)
    digits = (codes[:, None] // powers[None, :]) % h  # (states, disks), smallest disk first
    # top[:, p] = smallest disk index on peg p, or n for an empty peg
    tops = np.empty((codes.size, h), dtype=np.int64)
    for p in range(h):
        on_peg = digits == p
        tops[:, p] = np.where(on_peg.any(axis=1), on_peg.argmax(axis=1), n)
    out = []
    for p in range(h - 1):
        a, b = tops[:, p], tops[:, p + 1]
        right = a < b  # top of p moves onto p+1
        if right.any():
            out.append(codes[right] + powers[a[right]])
        left = b < a
        if left.any():
            out.append(codes[left] - powers[b[left]])
    return np.concatenate(out) if out else codes[:0]


def neighbours(c: Configuration) -> list[Configuration]:
    """Configurations reachable from ``c`` by one legal move."""
    codes = _expand(np.array([encode(c)], dtype=np.int64), c.h, c.n)
    return [decode(c.h, c.n, int(x)) for x in np.unique(codes)]


def _new_frontier(frontier: np.ndarray, seen: np.ndarray, h: int, n: int) -> np.ndarray:
    nxt = np.unique(_expand(frontier, h, n))
    nxt = nxt[~seen[nxt]]
    seen[nxt] = True
    return nxt


def bfs_distance(c1: Configuration, c2: Configuration, budget: int | None = None) -> int:
    """Minimal number of moves from ``c1`` to ``c2``; bidirectional search."""
    if c1.h != c2.h or c1.n != c2.n:
        raise ValueError("configurations must have the same pegs and disks")
    h, n = c1.h, c1.n
    _check_budget(h, n, budget)
    a, b = encode(c1), encode(c2)
    if a == b:
        return 0
    seen = [np.zeros(h**n, dtype=bool), np.zeros(h**n, dtype=bool)]
    seen[0][a] = seen[1][b] = True
    frontiers = [np.array([a], dtype=np.int64), np.array([b], dtype=np.int64)]
    depth = [0, 0]
    while frontiers[0].size and frontiers[1].size:
        side = 0 if frontiers[0].size <= frontiers[1].size else 1
        nxt = _new_frontier(frontiers[side], seen[side], h, n)
        depth[side] += 1
        # a new state already seen from the other side sits exactly at its
        # current depth, since its parent would otherwise have met earlier
        if seen[1 - side][nxt].any():
            return depth[0] + depth[1]
        frontiers[side] = nxt
    raise ValueError(f"target unreachable from source on Path_{h} with {n} disks")


def bfs_distances(
    source: Configuration, targets: Iterable[Configuration], budget: int | None = None
) -> list[int]:
    """Distances from ``source`` to each target, from one single-source search."""
    targets = list(targets)
    h, n = source.h, source.n
    _check_budget(h, n, budget)
    want: dict[int, list[int]] = {}
    for i, t in enumerate(targets):
        if t.h != h or t.n != n:
            raise ValueError("configurations must have the same pegs and disks")
        want.setdefault(encode(t), []).append(i)
    result = [-1] * len(targets)
    seen = np.zeros(h**n, dtype=bool)
    frontier = np.array([encode(source)], dtype=np.int64)
    seen[frontier] = True
    depth = 0
    while want:
        for code in [c for c in want if seen[c]]:
            for i in want.pop(code):
                result[i] = depth
        if not want:
            break
        frontier = _new_frontier(frontier, seen, h, n)
        depth += 1
        if not frontier.size:
            raise ValueError(f"target unreachable from source on Path_{h} with {n} disks")
    return result


def perfect_distances(h: int, n: int, source: int, budget: int | None = None) -> list[int]:
    """``[|R_source -> R_j| for j in 1..h]``."""
    return bfs_distances(perfect(h, source, n), [perfect(h, j, n) for j in range(1, h + 1)], budget)


@dataclass(frozen=True)
class Table1Row:
    n: int
    t23: int
    t12: int
    t13: int
    t14: int
    ratio: Decimal


def table1_ratio(t14: int, n: int, places: int = 3) -> Decimal:
    """``t14 / (sqrt(n) * 3**sqrt(2n))`` rounded half-up to ``places`` decimals."""
    import mpmath

    with mpmath.workdps(40):
        value = mpmath.mpf(t14) / (mpmath.sqrt(n) * mpmath.power(3, mpmath.sqrt(2 * n)))
        text = mpmath.nstr(value, 30, strip_zeros=False)
    return Decimal(text).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def regenerate_table1(n_max: int = 11, budget: int | None = None) -> list[Table1Row]:
    """Minimal move counts of the four distinct perfect tasks on Path_4."""
    rows = []
    for n in range(1, n_max + 1):
        from_1 = perfect_distances(4, n, 1, budget)
        t23 = bfs_distance(perfect(4, 2, n), perfect(4, 3, n), budget)
        rows.append(Table1Row(n, t23, from_1[1], from_1[2], from_1[3], table1_ratio(from_1[3], n)))
    return rows


def format_table1(rows: Sequence[Table1Row]) -> str:
    lines = [f"{'n':>3} {'2->3':>6} {'1->2':>6} {'1->3':>6} {'1->4':>6} {'ratio':>7}"]
    for r in rows:
        lines.append(f"{r.n:>3} {r.t23:>6} {r.t12:>6} {r.t13:>6} {r.t14:>6} {r.ratio:>7}")
    return "\n".join(lines) + "\n"


def table1_csv(rows: Sequence[Table1Row]) -> str:
    lines = ["n,t23,t12,t13,t14,ratio"]
    lines += [f"{r.n},{r.t23},{r.t12},{r.t13},{r.t14},{r.ratio}" for r in rows]
    return "\n".join(lines) + "\n"


def check_structure(h: int, n_max: int, budget: int | None = None) -> list[CheckReport]:
    """Check the ordering of perfect-task distances found by BFS.

    * For ``h == 4``: every perfect task is strictly shorter than 1 -> 4.
    * For any ``h``: from ``R_{h,i,n}`` with ``i <= h-2``, reaching peg
      ``h-2`` or ``h-1`` is strictly shorter than reaching peg ``h``.
    * Symmetry ``|i -> j| == |j -> i|`` and the mirror ``|i -> j| ==
      |h+1-j -> h+1-i|``.

    The last report (``advisory=True``) records the unproven conjecture
    ``|1->2| < |1->3|`` and ``|2->3| < |1->2|`` for ``n >= 3``: any
    ``violations`` are counterexamples, not failures of a proven claim.
    """
    dist: dict[int, list[list[int]]] = {}
    for n in range(1, n_max + 1):
        dist[n] = [[]] + [[0] + perfect_distances(h, n, i, budget) for i in range(1, h + 1)]

    hardest = CheckReport("Path_4: every perfect task is shorter than 1 -> 4")
    lemma1 = CheckReport("pegs h-2 and h-1 are closer than peg h")
    symmetric = CheckReport("symmetry and mirror of perfect-task distances")
    question = CheckReport(
        "observed only: |1->2| < |1->3| and |2->3| < |1->2| for n >= 3", advisory=True
    )
    for n, d in dist.items():
        for i in range(1, h + 1):
            for j in range(1, h + 1):
                symmetric.expect(d[i][j] == d[j][i] == d[h + 1 - j][h + 1 - i], f"n={n} {i}->{j}")
        for i in range(1, h - 1):
            lemma1.expect(d[i][h - 2] < d[i][h] and d[i][h - 1] < d[i][h], f"n={n} C=R_{i}")
        if h == 4:
            for i in range(1, 5):
                for j in range(i + 1, 5):
                    if (i, j) != (1, 4):
                        hardest.expect(d[i][j] < d[1][4], f"n={n} {i}->{j}")
            if n >= 3:
                question.expect(d[1][2] < d[1][3] and d[2][3] < d[1][2], f"n={n}")
    reports = [lemma1, symmetric]
    if h == 4:
        reports = [hardest] + reports + [question]
    return reports
