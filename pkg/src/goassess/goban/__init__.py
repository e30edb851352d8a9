from .board import (
    BOARD_SIZE,
    PASS,
    BoardState,
    Color,
    Coord,
    IllegalMoveError,
    Move,
    apply_move,
    is_legal,
    legal_moves,
    stone_count,
)
from .coords import CoordError, format_gtp, format_sgf_point, parse_gtp, parse_sgf_point
from .sgf import GameRecord, SgfError, parse_sgf, replay_record, serialize_sgf

__all__ = [
    "BOARD_SIZE",
    "PASS",
    "BoardState",
    "Color",
    "Coord",
    "CoordError",
    "GameRecord",
    "IllegalMoveError",
    "Move",
    "SgfError",
    "apply_move",
    "format_gtp",
    "format_sgf_point",
    "is_legal",
    "legal_moves",
    "parse_gtp",
    "parse_sgf",
    "parse_sgf_point",
    "replay_record",
    "serialize_sgf",
    "stone_count",
]
