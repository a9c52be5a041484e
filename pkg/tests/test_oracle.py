from collections import deque
from decimal import Decimal
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathhanoi.core import Configuration, IllegalMove, Move, apply_move, perfect
from pathhanoi.counts import count_g
from pathhanoi.oracle import (
    DEFAULT_STATE_BUDGET,
    StateBudgetExceeded,
    bfs_distance,
    bfs_distances,
    check_structure,
    decode,
    encode,
    format_table1,
    neighbours,
    perfect_distances,
    regenerate_table1,
    state_budget,
    table1_csv,
    table1_ratio,
)


def _slow_neighbours(c):
    out = []
    for disk, p in product(range(1, c.n + 1), range(1, c.h + 1)):
        for q in (p - 1, p + 1):
            try:
                out.append(apply_move(c, Move(disk, p, q)))
            except IllegalMove:
                pass
    return out


def _slow_distance(c1, c2):
    """Reference breadth-first search over Configuration objects."""
    dist = {c1: 0}
    queue = deque([c1])
    while queue:
        c = queue.popleft()
        if c == c2:
            return dist[c]
        for nb in _slow_neighbours(c):
            if nb not in dist:
                dist[nb] = dist[c] + 1
                queue.append(nb)
    raise AssertionError("unreachable")


configs = st.integers(2, 5).flatmap(
    lambda h: st.lists(st.integers(1, h), max_size=5).map(lambda a: Configuration.from_assignment(h, a))
)


@given(configs)
def test_encode_decode_round_trip(c):
    code = encode(c)
    assert 0 <= code < c.h**c.n or c.n == 0
    assert decode(c.h, c.n, code) == c


@given(configs)
def test_neighbours_match_rule_checker(c):
    assert sorted(neighbours(c), key=encode) == sorted(set(_slow_neighbours(c)), key=encode)


@given(st.integers(3, 4), st.data())
def test_bfs_distance_matches_reference(h, data):
    n = data.draw(st.integers(0, 4 if h < 4 else 3))
    a = data.draw(st.lists(st.integers(1, h), min_size=n, max_size=n))
    b = data.draw(st.lists(st.integers(1, h), min_size=n, max_size=n))
    c1, c2 = Configuration.from_assignment(h, a), Configuration.from_assignment(h, b)
    expected = _slow_distance(c1, c2)
    assert bfs_distance(c1, c2) == expected == bfs_distance(c2, c1)
    assert bfs_distances(c1, [c2, c1]) == [expected, 0]


def test_small_known_distances():
    assert bfs_distance(perfect(4, 1, 1), perfect(4, 4, 1)) == 3
    assert bfs_distance(perfect(4, 2, 6), perfect(4, 3, 6)) == 34
    assert bfs_distance(perfect(3, 1, 6), perfect(3, 3, 6)) == 3**6 - 1
    assert perfect_distances(3, 4, 1) == [0, 40, 80]


def test_solvers_are_never_shorter_than_bfs():
    for h in (3, 4, 5):
        for n in range(1, 6 if h < 5 else 5):
            d = perfect_distances(h, n, 1)
            for s in range(1, h):
                row = perfect_distances(h, n, s)
                for t in range(s + 1, h + 1):
                    assert row[t - 1] <= count_g(h, n, s, t)
            # three pegs: the classical solution is optimal
            if h == 3:
                assert d[2] == 3**n - 1


def test_table1_prefix():
    rows = regenerate_table1(6)
    assert [(r.t23, r.t12, r.t13, r.t14) for r in rows] == [
        (1, 1, 2, 3),
        (4, 4, 6, 10),
        (7, 9, 12, 19),
        (14, 18, 22, 34),
        (23, 29, 36, 57),
        (34, 44, 54, 88),
    ]
    assert rows[0].ratio == Decimal("0.634")
    csv = table1_csv(rows).splitlines()
    assert csv[0] == "n,t23,t12,t13,t14,ratio" and csv[1] == "1,1,1,2,3,0.634"
    assert format_table1(rows).count("\n") == 7


@pytest.mark.parametrize("t14, n, ratio", [(3, 1, "0.634"), (449, 11, "0.783"), (123, 7, "0.762"), (253, 9, "0.798")])
def test_table1_ratio(t14, n, ratio):
    assert table1_ratio(t14, n) == Decimal(ratio)


def test_state_budget(monkeypatch):
    monkeypatch.delenv("HANOI_STATE_BUDGET", raising=False)
    assert state_budget() == DEFAULT_STATE_BUDGET
    monkeypatch.setenv("HANOI_STATE_BUDGET", "100")
    assert state_budget() == 100
    with pytest.raises(StateBudgetExceeded):
        bfs_distance(perfect(4, 1, 4), perfect(4, 4, 4))
    assert bfs_distance(perfect(4, 1, 3), perfect(4, 4, 3)) == 19
    with pytest.raises(StateBudgetExceeded):
        perfect_distances(4, 4, 1, budget=255)


def test_mismatched_and_unreachable_configurations():
    with pytest.raises(ValueError):
        bfs_distance(perfect(4, 1, 3), perfect(4, 1, 2))
    # two pegs in a row cannot swap a stack of two
    with pytest.raises(ValueError, match="unreachable"):
        bfs_distance(perfect(2, 1, 2), perfect(2, 2, 2))
    with pytest.raises(ValueError, match="unreachable"):
        bfs_distances(perfect(2, 1, 2), [perfect(2, 2, 2)])
    assert bfs_distance(perfect(2, 1, 1), perfect(2, 2, 1)) == 1


def test_structure_checks_pass():
    for h, n_max in [(4, 7), (5, 5), (3, 6)]:
        for r in check_structure(h, n_max):
            assert not r.failed, f"{r}: {r.violations[:3]}"
    names = [r.name for r in check_structure(4, 4)]
    assert len(names) == 4


def test_expand_handles_empty_input():
    from pathhanoi.oracle import _expand

    assert _expand(np.array([], dtype=np.int64), 4, 3).size == 0
