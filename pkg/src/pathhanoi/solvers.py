"""Move-sequence generators for Path_h.

* :func:`three_move` - the classical optimal algorithm on three pegs in a row.
* :func:`four_move` - Spread / Circular shift / Accumulate on pegs 1..4.
* :func:`farthest_move` - a block between the two ends of a peg interval.
* :func:`general_move` - a block between any two pegs of an interval.

Every generator is lazy. A solver call is a *plan node*; expanding a node
yields its sub-calls in order, and an explicit stack drives the expansion,
so memory is proportional to the recursion depth rather than to the (often
astronomically long) sequence. Inverting a node inverts each child and
reverses their order, so ``M^-1`` never needs ``M`` in memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .core import Block, Move, round_sqrt_2n
from .partition import block_sizes

__all__ = [
    "PegInterval",
    "three_move",
    "four_move",
    "farthest_move",
    "general_move",
    "solve",
    "sequence_length",
]

# plan node kinds
MOVE, THREE, FOUR, FAR, GEN = range(5)

# (MOVE, disk, src, dst) or (kind, inverted, lo, hi, *pegs)
Node = tuple


@dataclass(frozen=True)
class PegInterval:
    """The available pegs ``lo..hi``."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"invalid peg interval [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, peg: object) -> bool:
        return isinstance(peg, int) and self.lo <= peg <= self.hi


Pegs = Union[PegInterval, "tuple[int, int]"]


def _toggle(node: Node) -> Node:
    if node[0] == MOVE:
        return (MOVE, node[1], node[3], node[2])
    return (node[0], not node[1]) + node[2:]


def _expand_three(lo: int, hi: int, s: int, d: int, a: int) -> list[Node]:
    rest = hi - 1
    if sorted((s, d, a))[1] == a:
        # end to end through the middle peg a
        return [
            (THREE, False, lo, rest, s, d, a),
            (MOVE, hi, s, a),
            (THREE, False, lo, rest, d, s, a),
            (MOVE, hi, a, d),
            (THREE, False, lo, rest, s, d, a),
        ]
    # neighbouring pegs: park the rest on the far peg a
    return [
        (THREE, False, lo, rest, s, a, d),
        (MOVE, hi, s, d),
        (THREE, False, lo, rest, a, d, s),
    ]


def _expand_four(lo: int, hi: int) -> list[Node]:
    m = round_sqrt_2n(hi - lo + 1)
    small = (FOUR, False, lo, hi - m)
    s_lo, s_hi = hi - m + 1, hi - 1
    return [
        # Spread
        small,
        (THREE, False, s_lo, s_hi, 1, 3, 2),
        (MOVE, hi, 1, 2),
        # Circular shift
        _toggle(small),
        (THREE, False, s_lo, s_hi, 3, 4, 2),
        (MOVE, hi, 2, 3),
        (THREE, False, s_lo, s_hi, 4, 2, 3),
        # Accumulate
        (MOVE, hi, 3, 4),
        (THREE, False, s_lo, s_hi, 2, 4, 3),
        small,
    ]


def _blocks(k: int, lo: int, hi: int) -> list[tuple[int, int]]:
    """1-based ``(lo, hi)`` pairs of ``partition(k, [lo, hi])``; index 0 unused.

    An empty block keeps the running ``lo``, so ``out[i][0]`` is always the
    smallest disk of blocks ``i`` onward.
    """
    out = [(0, -1)]
    for size in block_sizes(k, hi - lo + 1):
        out.append((lo, lo + size - 1))
        lo += size
    return out


def _expand_far(lo: int, hi: int, s: int, d: int) -> list[Node]:
    h = d - s + 1
    b = _blocks(h, lo, hi)
    out: list[Node] = []
    # Spread
    for j in range(1, h - 1):
        out.append((FAR, False, *b[j], s, d - j + 1))
    # Reverse
    out.append((MOVE, hi, s, s + 1))
    for j in range(1, h - 1):
        out.append((FAR, True, *b[j], s + j - 1, d))
        for i in range(j + 1, h - 1):
            out.append((GEN, False, *b[i], d + j - i, d + j + 1 - i, s + j, d + j + 1 - i))
        out.append((MOVE, hi, s + j, s + j + 1))
    # Accumulate
    for j in range(1, h - 1):
        out.append((FAR, False, *b[h - 1 - j], s + h - 2 - j, d))
    return out


def _expand_gen(lo: int, hi: int, s: int, d: int, a_lo: int, a_hi: int) -> list[Node]:
    k = a_hi - a_lo + 1
    b = _blocks(k, lo, hi)
    out: list[Node] = []
    # LeftSpread
    for j in range(1, s - a_lo + 1):
        f = a_lo + j - 1
        out.append((GEN, True, *b[j], f, s, f, a_hi))
    # RightSpread
    for j in range(1, a_hi - d + 1):
        out.append((FAR, False, *b[s - a_lo + j], s, a_hi - j + 1))
    # MoveRemainder: blocks k-d+s .. k-1 travel together
    first = s - a_lo + a_hi - d + 1
    out.append((FAR, False, b[first][0], hi, s, d))
    # LeftAccumulate
    for j in range(1, a_hi - d + 1):
        f = d + j
        out.append((GEN, True, *b[s - a_lo + a_hi - d + 1 - j], d, f, s, f))
    # RightAccumulate
    for j in range(1, s - a_lo + 1):
        f = s - j
        out.append((GEN, False, *b[s - a_lo + 1 - j], f, d, f, a_hi))
    return out


def _children(node: Node) -> list[Node]:
    kind, inverted = node[0], node[1]
    lo, hi = node[2], node[3]
    if hi < lo:
        return []
    if kind == THREE:
        out = _expand_three(lo, hi, *node[4:])
    elif kind == FOUR:
        out = _expand_four(lo, hi)
    elif kind == FAR:
        out = _expand_far(lo, hi, *node[4:])
    elif kind == GEN:
        out = _expand_gen(lo, hi, *node[4:])
    else:
        raise AssertionError(f"unknown plan node {node!r}")
    if inverted:
        out = [_toggle(c) for c in reversed(out)]
    return out


def _run(root: Node) -> Iterator[Move]:
    stack = [root]
    pop, extend = stack.pop, stack.extend
    while stack:
        node = pop()
        if node[0] == MOVE:
            yield Move(node[1], node[2], node[3])
        elif node[3] >= node[2]:
            extend(reversed(_children(node)))


def _as_block(block: Block | int) -> Block:
    return Block.of_size(block) if isinstance(block, int) else block


def _as_interval(pegs: Pegs) -> PegInterval:
    return pegs if isinstance(pegs, PegInterval) else PegInterval(*pegs)


def three_move(block: Block | int, s: int, d: int, a: int) -> Iterator[Move]:
    """Shortest transfer of ``block`` from ``s`` to ``d`` on three consecutive pegs.

    ``{s, d, a}`` must be three consecutive pegs. The middle one is read off
    the geometry, so ``a`` may be either the middle peg or the far end.
    Takes ``3**n - 1`` moves end to end and half that between neighbours.
    """
    block = _as_block(block)
    lo, mid, hi = sorted((s, d, a))
    if lo < 1 or mid != lo + 1 or hi != lo + 2:
        raise ValueError(f"pegs {(s, d, a)} are not three consecutive pegs")
    return _run((THREE, False, block.lo, block.hi, s, d, a))


def four_move(block: Block | int) -> Iterator[Move]:
    """Move ``block`` from peg 1 to peg 4 in Path_4."""
    block = _as_block(block)
    return _run((FOUR, False, block.lo, block.hi))


def _check_task(block: Block, s: int, d: int, pegs: PegInterval) -> None:
    if s not in pegs or d not in pegs:
        raise ValueError(f"pegs s={s}, d={d} must lie in [{pegs.lo}, {pegs.hi}]")
    if s >= d:
        raise ValueError(f"need s < d, got s={s}, d={d}; invert the reverse task instead")
    if len(pegs) == 2 and block.size > 1:
        raise ValueError(f"two available pegs can carry at most one disk, got {block.size}")


def farthest_move(block: Block | int, s: int, d: int) -> Iterator[Move]:
    """Move ``block`` from ``s`` to ``d`` using exactly the pegs ``s..d``."""
    block = _as_block(block)
    if s < 1:
        raise ValueError(f"peg index {s} out of range")
    _check_task(block, s, d, PegInterval(s, d))
    return _run((FAR, False, block.lo, block.hi, s, d))


def general_move(block: Block | int, s: int, d: int, pegs: Pegs) -> Iterator[Move]:
    """Move ``block`` from ``s`` to ``d`` (``s < d``) using only ``pegs``."""
    block = _as_block(block)
    pegs = _as_interval(pegs)
    _check_task(block, s, d, pegs)
    return _run((GEN, False, block.lo, block.hi, s, d, pegs.lo, pegs.hi))


def _root(h: int, n: int, s: int, d: int, algorithm: str) -> Node:
    if h < 2 or n < 0:
        raise ValueError(f"invalid task h={h}, n={n}")
    if not (1 <= s <= h and 1 <= d <= h):
        raise ValueError(f"pegs s={s}, d={d} out of range 1..{h}")
    if s == d:
        return (GEN, False, 1, 0, 1, 2, 1, 2)
    lo, hi = min(s, d), max(s, d)
    if algorithm == "auto":
        algorithm = "four" if (h, lo, hi) == (4, 1, 4) else "general"
    if algorithm == "four":
        if (h, lo, hi) != (4, 1, 4):
            raise ValueError("four_move only moves between pegs 1 and 4 of Path_4")
        node: Node = (FOUR, False, 1, n)
    elif algorithm == "general":
        _check_task(Block.of_size(n), lo, hi, PegInterval(1, h))
        node = (GEN, False, 1, n, lo, hi, 1, h)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return node if s < d else _toggle(node)


def solve(h: int, n: int, s: int, d: int, algorithm: str = "auto") -> Iterator[Move]:
    """Stream moves taking ``n`` disks from peg ``s`` to peg ``d`` of Path_h.

    ``algorithm`` is ``"general"``, ``"four"`` (Path_4 end to end only) or
    ``"auto"``, which picks ``"four"`` whenever it applies. Tasks with
    ``s > d`` are solved by inverting the ``d -> s`` solution.
    """
    return _run(_root(h, n, s, d, algorithm))


def sequence_length(h: int, n: int, s: int, d: int, algorithm: str = "auto") -> int:
    """Length of :func:`solve`'s output without generating it."""
    from . import counts

    node = _root(h, n, s, d, algorithm)
    if node[0] == FOUR:
        return counts.count_t(n)
    if node[3] < node[2]:
        return 0
    return counts.count_g(h, n, min(s, d), max(s, d))
