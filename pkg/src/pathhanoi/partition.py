"""Splitting a block into the ``h - 1`` sub-blocks the multi-peg solvers move.

``remainder(h, n)`` decides how many of the ``n`` disks are left for the
later (larger) blocks; ``partition(h, B)`` applies it once per peg.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import Block, round_sqrt_2n

__all__ = ["remainder", "ceil_power_term", "PartitionResult", "partition", "block_sizes", "shift_identity"]


def _ceil_root(num: int, den: int, p: int) -> int:
    """Smallest integer ``k >= 0`` with ``k**p * den >= num``."""
    if num <= 0:
        return 0
    # float estimate, then exact integer correction
    k = max(0, math.ceil(math.exp((math.log(num) - math.log(den)) / p)))
    while k > 0 and (k - 1) ** p * den >= num:
        k -= 1
    while k**p * den < num:
        k += 1
    return k


def ceil_power_term(h: int, n: int) -> int:
    """``ceil(((h-2)!)**a / (h-3)! * n**a)`` with ``a = (h-3)/(h-2)``, exactly.

    Raising the quantity to the power ``h - 2`` clears every root, so the
    ceiling is the least ``k`` with ``k**(h-2) * ((h-3)!)**(h-2) >=
    ((h-2)! * n)**(h-3)``.
    """
    if h < 3:
        raise ValueError(f"h must be >= 3, got {h}")
    p = h - 2
    num = (math.factorial(h - 2) * n) ** (h - 3)
    den = math.factorial(h - 3) ** p
    return _ceil_root(num, den, p)


def remainder(h: int, n: int) -> int:
    """Number of disks assigned to the blocks after the first one."""
    if h < 3:
        raise ValueError(f"remainder needs h >= 3, got {h}")
    if n < 1:
        raise ValueError(f"remainder needs n >= 1, got {n}")
    if n < h:
        return max(n - 1, 1)
    if h == 4:
        return min(n, round_sqrt_2n(n))
    return min(n, ceil_power_term(h, n))


@lru_cache(maxsize=None)
def block_sizes(h: int, n: int) -> tuple[int, ...]:
    """Sizes ``(n~_1, ..., n~_{h-1})`` of ``partition(h, [1, n])``."""
    if h < 2:
        raise ValueError(f"partition needs h >= 2, got {h}")
    if n < 1:
        raise ValueError("cannot partition an empty block")
    if h == 2 and n > 1:
        raise ValueError(f"partition(2, B) needs |B| <= 1, got {n}")
    sizes = []
    left = n
    for j in range(1, h - 1):
        m = remainder(h - j + 1, left)
        sizes.append(left - m)
        left = m
    # left == 1 here; the last block is the largest disk alone
    sizes.append(left)
    return tuple(sizes)


@dataclass(frozen=True)
class PartitionResult:
    blocks: tuple[Block, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(b.size for b in self.blocks)

    def suffix_size(self, i: int) -> int:
        """``n(i)``: total size of blocks ``i..h-1`` (1-based)."""
        if not 1 <= i <= len(self.blocks):
            raise ValueError(f"block index {i} out of range 1..{len(self.blocks)}")
        return sum(self.sizes[i - 1 :])

    def suffix(self, i: int) -> Block:
        """``B(i)``: the union of blocks ``i..h-1`` as one block."""
        n_i = self.suffix_size(i)
        return Block(self.blocks[-1].hi - n_i + 1, self.blocks[-1].hi)

    def __getitem__(self, j: int) -> Block:
        """1-based access, ``result[j] == B_j``."""
        if not 1 <= j <= len(self.blocks):
            raise IndexError(f"block index {j} out of range 1..{len(self.blocks)}")
        return self.blocks[j - 1]

    def __len__(self) -> int:
        return len(self.blocks)


def partition(h: int, block: Block) -> PartitionResult:
    """Split a non-empty ``block`` into ``h - 1`` consecutive, lighter-first blocks."""
    if not block:
        raise ValueError("cannot partition an empty block")
    blocks = []
    lo = block.lo
    for size in block_sizes(h, block.size):
        blocks.append(Block(lo, lo + size - 1))
        lo += size
    return PartitionResult(tuple(blocks))


def shift_identity(h: int, n: int, i: int, j: int) -> bool:
    """Whether ``n~_{j+i-1}(h, n) == n~_j(h-i+1, n(i))``."""
    if not 1 <= i <= h - 1:
        raise ValueError(f"need 1 <= i <= h-1, got i={i}, h={h}")
    if not 1 <= j <= h - i:
        raise ValueError(f"need 1 <= j <= h-i, got j={j}, h-i={h - i}")
    sizes = block_sizes(h, n)
    n_i = sum(sizes[i - 1 :])
    return sizes[j + i - 2] == block_sizes(h - i + 1, n_i)[j - 1]
