"""Disks, blocks, configurations and legality-checked move sequences on Path_h.

Pegs are numbered ``1..h`` from left to right and a disk may only move to a
neighbouring peg. Disks are identified with their sizes ``1..n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Block",
    "EMPTY",
    "Configuration",
    "Move",
    "IllegalMove",
    "NotTopmost",
    "SmallerBelow",
    "NonAdjacentPegs",
    "EmptySourcePeg",
    "round_half_up",
    "round_sqrt_2n",
    "perfect",
    "apply_move",
    "apply_sequence",
    "invert",
    "format_moves",
    "write_moves",
    "read_moves",
]


def round_half_up(x: Fraction | int) -> int:
    """Nearest integer, ties rounded up (``round(2.5) == 3``)."""
    return math.floor(Fraction(x) + Fraction(1, 2))


def round_sqrt_2n(n: int) -> int:
    """``round(sqrt(2n))`` computed exactly with integer square roots."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    # m = floor(sqrt(2n) + 1/2)  <=>  2m - 1 <= sqrt(8n)
    return (math.isqrt(8 * n) + 1) // 2


@dataclass(frozen=True)
class Block:
    """Disks of consecutive sizes ``lo..hi``; empty when ``hi < lo``.

    All empty blocks compare equal to :data:`EMPTY`.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.hi < self.lo:
            object.__setattr__(self, "lo", 1)
            object.__setattr__(self, "hi", 0)
        elif self.lo < 1:
            raise ValueError(f"disk sizes start at 1, got block [{self.lo}, {self.hi}]")

    @classmethod
    def of_size(cls, n: int, lo: int = 1) -> Block:
        return cls(lo, lo + n - 1)

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.hi >= self.lo

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, disk: object) -> bool:
        return isinstance(disk, int) and self.lo <= disk <= self.hi

    @property
    def min(self) -> int:
        if not self:
            raise ValueError("empty block has no smallest disk")
        return self.lo

    @property
    def max(self) -> int:
        if not self:
            raise ValueError("empty block has no largest disk")
        return self.hi

    def lighter_than(self, other: Block) -> bool:
        return self.max < other.min

    def __repr__(self) -> str:
        return f"Block({self.lo}, {self.hi})" if self else "Block(empty)"


EMPTY = Block(1, 0)


class Move(NamedTuple):
    """One disk transfer; ``disk`` is carried so sequences are self-describing."""

    disk: int
    src: int
    dst: int

    def reversed(self) -> Move:
        return Move(self.disk, self.dst, self.src)

    def __str__(self) -> str:
        return f"{self.disk} {self.src} {self.dst}"


class IllegalMove(ValueError):
    """A move that breaks a rule of the puzzle.

    ``index`` is the 0-based position within a sequence, when known; the
    message counts moves from 1.
    """

    rule = "illegal move"

    def __init__(self, move: Move, detail: str = "", index: int | None = None):
        self.move = move
        self.index = index
        self.detail = detail
        where = f"move {index + 1} " if index is not None else "move "
        msg = f"{where}({move}): {self.rule}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotTopmost(IllegalMove):
    rule = "NotTopmost: disk is not the topmost disk of its source peg"


class SmallerBelow(IllegalMove):
    rule = "SmallerBelow: destination peg's top disk is smaller"


class NonAdjacentPegs(IllegalMove):
    rule = "NonAdjacentPegs: pegs are not neighbours on the path"


class EmptySourcePeg(IllegalMove):
    rule = "EmptySourcePeg: source peg holds no disks"


@dataclass(frozen=True)
class Configuration:
    """A legal distribution of disks ``1..n`` over ``h`` pegs.

    ``pegs[i - 1]`` lists the disks on peg ``i`` from bottom to top.
    """

    h: int
    pegs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.h < 2:
            raise ValueError(f"need at least 2 pegs, got h={self.h}")
        pegs = tuple(tuple(p) for p in self.pegs)
        object.__setattr__(self, "pegs", pegs)
        if len(pegs) != self.h:
            raise ValueError(f"expected {self.h} pegs, got {len(pegs)}")
        seen = sorted(d for p in pegs for d in p)
        if seen != list(range(1, len(seen) + 1)):
            raise ValueError("disks must be exactly 1..n, each on one peg")
        for i, p in enumerate(pegs, 1):
            if any(a <= b for a, b in zip(p, p[1:])):
                raise ValueError(f"peg {i} is not strictly decreasing bottom to top: {p}")

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.pegs)

    def peg(self, i: int) -> tuple[int, ...]:
        _check_peg(i, self.h)
        return self.pegs[i - 1]

    def top(self, i: int) -> int | None:
        p = self.peg(i)
        return p[-1] if p else None

    def assignment(self) -> tuple[int, ...]:
        """The map disk -> peg as a tuple indexed by ``disk - 1``."""
        where = [0] * self.n
        for i, p in enumerate(self.pegs, 1):
            for d in p:
                where[d - 1] = i
        return tuple(where)

    @classmethod
    def from_assignment(cls, h: int, assignment: Sequence[int]) -> Configuration:
        """Inverse of :meth:`assignment`; per-peg order is forced by size."""
        pegs: list[list[int]] = [[] for _ in range(h)]
        for disk in range(len(assignment), 0, -1):
            i = assignment[disk - 1]
            _check_peg(i, h)
            pegs[i - 1].append(disk)
        return cls(h, tuple(tuple(p) for p in pegs))

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, p)) or "-" for p in self.pegs)


def _check_peg(i: int, h: int) -> None:
    if not 1 <= i <= h:
        raise ValueError(f"peg index {i} out of range 1..{h}")


def perfect(h: int, i: int, n: int) -> Configuration:
    """All ``n`` disks stacked on peg ``i`` of ``h`` pegs."""
    if n < 0:
        raise ValueError(f"disk count must be non-negative, got {n}")
    if h < 2:
        raise ValueError(f"need at least 2 pegs, got h={h}")
    _check_peg(i, h)
    pegs = [()] * h
    pegs[i - 1] = tuple(range(n, 0, -1))
    return Configuration(h, tuple(pegs))


def _check(pegs: list[list[int]], h: int, move: Move, index: int | None) -> None:
    disk, src, dst = move
    if not (1 <= src <= h and 1 <= dst <= h) or abs(src - dst) != 1:
        raise NonAdjacentPegs(move, f"h={h}", index)
    source = pegs[src - 1]
    if not source:
        raise EmptySourcePeg(move, f"peg {src} is empty", index)
    if source[-1] != disk:
        raise NotTopmost(move, f"top of peg {src} is {source[-1]}", index)
    target = pegs[dst - 1]
    if target and target[-1] < disk:
        raise SmallerBelow(move, f"top of peg {dst} is {target[-1]}", index)


def apply_move(c: Configuration, move: Move) -> Configuration:
    pegs = [list(p) for p in c.pegs]
    _check(pegs, c.h, move, None)
    pegs[move.dst - 1].append(pegs[move.src - 1].pop())
    return Configuration(c.h, tuple(tuple(p) for p in pegs))


def apply_sequence(c: Configuration, moves: Iterable[Move]) -> Configuration:
    """Replay ``moves`` from ``c``; raise on the first illegal move.

    The raised :class:`IllegalMove` carries the move's 0-based ``index``.
    Works in O(1) memory beyond the configuration, so ``moves`` may be a
    long lazy stream.
    """
    pegs = [list(p) for p in c.pegs]
    h = c.h
    for index, move in enumerate(moves):
        move = Move(*move)
        _check(pegs, h, move, index)
        pegs[move.dst - 1].append(pegs[move.src - 1].pop())
    return Configuration(h, tuple(tuple(p) for p in pegs))


def invert(moves: Iterable[Move]) -> list[Move]:
    """Reverse the order of ``moves`` and reverse each move."""
    return [Move(*m).reversed() for m in reversed(list(moves))]


def format_moves(moves: Iterable[Move]) -> Iterator[str]:
    for m in moves:
        yield f"{m[0]} {m[1]} {m[2]}\n"


def write_moves(moves: Iterable[Move], out: IO[str]) -> int:
    """Write ``moves`` one per line as ``<disk> <from> <to>``; return the count."""
    count = 0
    for line in format_moves(moves):
        out.write(line)
        count += 1
    return count


def read_moves(lines: Iterable[str]) -> Iterator[Move]:
    """Parse the line format written by :func:`write_moves`; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected '<disk> <from> <to>', got {line.rstrip()!r}")
        try:
            disk, src, dst = (int(f) for f in fields)
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {line.rstrip()!r}") from None
        yield Move(disk, src, dst)
