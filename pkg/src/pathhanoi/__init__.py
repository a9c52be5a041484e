"""Tower of Hanoi on the path graph Path_h: solvers, exact counts, BFS oracle and bounds."""

from .core import (
    EMPTY,
    Block,
    Configuration,
    EmptySourcePeg,
    IllegalMove,
    Move,
    NonAdjacentPegs,
    NotTopmost,
    SmallerBelow,
    apply_move,
    apply_sequence,
    format_moves,
    invert,
    perfect,
    read_moves,
    write_moves,
)
from .counts import CheckReport, check_identities, count_f, count_f_restricted, count_g, count_t
from .partition import PartitionResult, block_sizes, partition, remainder
from .solvers import (
    PegInterval,
    farthest_move,
    four_move,
    general_move,
    sequence_length,
    solve,
    three_move,
)

__all__ = [
    "EMPTY",
    "Block",
    "Configuration",
    "Move",
    "IllegalMove",
    "NotTopmost",
    "SmallerBelow",
    "NonAdjacentPegs",
    "EmptySourcePeg",
    "apply_move",
    "apply_sequence",
    "format_moves",
    "invert",
    "perfect",
    "read_moves",
    "write_moves",
    "PartitionResult",
    "block_sizes",
    "partition",
    "remainder",
    "PegInterval",
    "three_move",
    "four_move",
    "farthest_move",
    "general_move",
    "solve",
    "sequence_length",
    "CheckReport",
    "check_identities",
    "count_t",
    "count_f",
    "count_g",
    "count_f_restricted",
]
