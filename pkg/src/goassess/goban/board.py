"""19x19 Go board rules: placement, capture, simple ko, suicide.

Board states are immutable snapshots; applying a move returns a new state.
The rule set is the common core of Japanese/Chinese rules: positional
simple ko, suicide illegal, no superko.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

BOARD_SIZE = 19
EMPTY, BLACK_STONE, WHITE_STONE = 0, 1, 2


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def opponent(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK

    @property
    def stone(self) -> int:
        return BLACK_STONE if self is Color.BLACK else WHITE_STONE

    @property
    def letter(self) -> str:
        return "B" if self is Color.BLACK else "W"


class IllegalMoveError(Exception):
    """Move rejected by the rules; ``reason`` is one of
    occupied / suicide / ko / wrong_color / off_board."""

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True, order=True)
class Coord:
    """Board intersection, or the distinguished PASS value (col=row=-1)."""

    col: int
    row: int

    def __post_init__(self) -> None:
        if self.col == -1 and self.row == -1:
            return
        if not (0 <= self.col < BOARD_SIZE and 0 <= self.row < BOARD_SIZE):
            raise ValueError(f"coordinate off board: ({self.col}, {self.row})")

    @property
    def is_pass(self) -> bool:
        return self.col == -1

    @property
    def index(self) -> int:
        return self.row * BOARD_SIZE + self.col


PASS = Coord(-1, -1)


@dataclass(frozen=True)
class Move:
    color: Color
    coord: Coord
    number: int

    def __post_init__(self) -> None:
        if self.number < 1:
            raise ValueError(f"move number must be positive, got {self.number}")


# Fixed-seed Zobrist table: hashes are stable across processes and runs.
_zrng = random.Random(0x60BA55E55EED)
_ZOBRIST = [[_zrng.getrandbits(64) for _ in range(2)] for _ in range(BOARD_SIZE * BOARD_SIZE)]
_ZOBRIST_WHITE_TO_MOVE = _zrng.getrandbits(64)


def _hash_grid(grid: tuple[int, ...], to_move: Color) -> int:
    h = 0
    for idx, cell in enumerate(grid):
        if cell != EMPTY:
            h ^= _ZOBRIST[idx][cell - 1]
    if to_move is Color.WHITE:
        h ^= _ZOBRIST_WHITE_TO_MOVE
    return h


def _neighbors(index: int) -> list[int]:
    col, row = index % BOARD_SIZE, index // BOARD_SIZE
    out = []
    if col > 0:
        out.append(index - 1)
    if col < BOARD_SIZE - 1:
        out.append(index + 1)
    if row > 0:
        out.append(index - BOARD_SIZE)
    if row < BOARD_SIZE - 1:
        out.append(index + BOARD_SIZE)
    return out


def _group_and_liberties(grid: list[int] | tuple[int, ...], start: int) -> tuple[set[int], set[int]]:
    color = grid[start]
    group = {start}
    liberties: set[int] = set()
    frontier = [start]
    while frontier:
        idx = frontier.pop()
        for nb in _neighbors(idx):
            cell = grid[nb]
            if cell == EMPTY:
                liberties.add(nb)
            elif cell == color and nb not in group:
                group.add(nb)
                frontier.append(nb)
    return group, liberties


@dataclass(frozen=True)
class BoardState:
    grid: tuple[int, ...]
    to_move: Color
    ko_point: Coord | None
    captures_black: int  # stones captured by Black
    captures_white: int
    position_hash: int

    @classmethod
    def empty(cls, to_move: Color = Color.BLACK) -> "BoardState":
        grid = (EMPTY,) * (BOARD_SIZE * BOARD_SIZE)
        return cls(grid, to_move, None, 0, 0, _hash_grid(grid, to_move))

    def stone_at(self, coord: Coord) -> int:
        return self.grid[coord.index]

    def stones(self, color: Color) -> list[Coord]:
        want = color.stone
        return [
            Coord(i % BOARD_SIZE, i // BOARD_SIZE)
            for i, cell in enumerate(self.grid)
            if cell == want
        ]

    def with_setup_stones(self, coords: list[Coord], color: Color, to_move: Color) -> "BoardState":
        """Place handicap/setup stones on empty points (no capture logic)."""
        grid = list(self.grid)
        for coord in coords:
            if grid[coord.index] != EMPTY:
                raise IllegalMoveError(f"setup stone on occupied point {coord}", "occupied")
            grid[coord.index] = color.stone
        new_grid = tuple(grid)
        return BoardState(new_grid, to_move, None, self.captures_black, self.captures_white,
                          _hash_grid(new_grid, to_move))


def apply_move(state: BoardState, move: Move) -> BoardState:
    """Apply one move, returning the next state. Raises IllegalMoveError."""
    if move.color is not state.to_move:
        raise IllegalMoveError(
            f"{move.color.value} played but {state.to_move.value} to move", "wrong_color"
        )
    next_color = state.to_move.opponent

    if move.coord.is_pass:
        return BoardState(
            state.grid, next_color, None, state.captures_black, state.captures_white,
            _hash_grid(state.grid, next_color),
        )

    idx = move.coord.index
    if state.grid[idx] != EMPTY:
        raise IllegalMoveError(f"point {move.coord} occupied", "occupied")
    if state.ko_point is not None and move.coord == state.ko_point:
        raise IllegalMoveError(f"ko recapture at {move.coord} forbidden", "ko")

    grid = list(state.grid)
    grid[idx] = move.color.stone
    opponent_stone = move.color.opponent.stone

    captured: set[int] = set()
    for nb in _neighbors(idx):
        if grid[nb] == opponent_stone and nb not in captured:
            group, liberties = _group_and_liberties(grid, nb)
            if not liberties:
                captured |= group
    for c in captured:
        grid[c] = EMPTY

    own_group, own_liberties = _group_and_liberties(grid, idx)
    if not own_liberties:
        raise IllegalMoveError(f"suicide at {move.coord}", "suicide")

    ko_point: Coord | None = None
    if len(captured) == 1 and len(own_group) == 1 and len(own_liberties) == 1:
        only = next(iter(captured))
        ko_point = Coord(only % BOARD_SIZE, only // BOARD_SIZE)

    captures_black = state.captures_black
    captures_white = state.captures_white
    if move.color is Color.BLACK:
        captures_black += len(captured)
    else:
        captures_white += len(captured)

    new_grid = tuple(grid)
    return BoardState(
        new_grid, next_color, ko_point, captures_black, captures_white,
        _hash_grid(new_grid, next_color),
    )


def is_legal(state: BoardState, coord: Coord, color: Color) -> bool:
    if coord.is_pass:
        return True
    if color is not state.to_move:
        return False
    idx = coord.index
    if state.grid[idx] != EMPTY:
        return False
    if state.ko_point is not None and coord == state.ko_point:
        return False
    # Fast liberty check without copying the whole grid when possible.
    grid = list(state.grid)
    grid[idx] = color.stone
    opponent_stone = color.opponent.stone
    captures_any = False
    for nb in _neighbors(idx):
        if grid[nb] == opponent_stone:
            _, libs = _group_and_liberties(grid, nb)
            if not libs:
                captures_any = True
                break
    if captures_any:
        return True
    _, own_libs = _group_and_liberties(grid, idx)
    return bool(own_libs)


def legal_moves(state: BoardState, color: Color) -> frozenset[Coord]:
    """All coords (plus PASS) playable by ``color`` in ``state``."""
    if color is not state.to_move:
        return frozenset()
    moves = {PASS}
    for row in range(BOARD_SIZE):
        for col in range(BOARD_SIZE):
            coord = Coord(col, row)
            if is_legal(state, coord, color):
                moves.add(coord)
    return frozenset(moves)


def stone_count(state: BoardState) -> int:
    return sum(1 for cell in state.grid if cell != EMPTY)
