"""Analysis-engine abstraction: one session per engine conversation.

A session owns a local board mirror used for legality checks and as the
context for validating analysis replies. Calls on one session must not be
interleaved; distinct sessions are independent.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from ..goban import BoardState, Color, Coord, IllegalMoveError, Move, apply_move, is_legal


class EngineError(Exception):
    pass


class EngineConnectError(EngineError):
    pass


class EngineTimeoutError(EngineError):
    pass


class EngineReplyError(EngineError):
    """Malformed or unusable engine reply."""


class EngineRejectedMove(EngineError):
    pass


@dataclass(frozen=True)
class Suggestion:
    coord: Coord
    sn: int  # MCTS simulation count
    wr: float  # win rate for the side to move

    def __post_init__(self) -> None:
        if self.sn < 0:
            raise ValueError(f"simulation count must be >= 0, got {self.sn}")
        if not 0.0 <= self.wr <= 1.0:
            raise ValueError(f"win rate must be in [0, 1], got {self.wr}")


@dataclass(frozen=True)
class MoveAnalysis:
    """Top-5 engine suggestions for the ply about to be played."""

    move_no: int
    color: Color
    suggestions: tuple[Suggestion, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.suggestions) <= 5:
            raise ValueError(f"need 1..5 suggestions, got {len(self.suggestions)}")
        sns = [s.sn for s in self.suggestions]
        if sns != sorted(sns, reverse=True):
            raise ValueError("suggestions must be sorted by sn descending")
        coords = [s.coord for s in self.suggestions]
        if len(set(coords)) != len(coords):
            raise ValueError("suggestion coordinates must be distinct")

    @classmethod
    def from_raw(
        cls,
        move_no: int,
        color: Color,
        raw: list[Suggestion],
        board: BoardState | None = None,
    ) -> "MoveAnalysis":
        """Clean an engine reply: sort by sn, drop duplicates and (when a
        board is given) illegal coords, cap at the 5 highest-sn entries."""
        ordered = sorted(raw, key=lambda s: (-s.sn, s.coord))
        seen: set[Coord] = set()
        kept: list[Suggestion] = []
        for s in ordered:
            if s.coord in seen:
                continue
            if board is not None and not s.coord.is_pass and not is_legal(board, s.coord, color):
                continue
            seen.add(s.coord)
            kept.append(s)
            if len(kept) == 5:
                break
        if not kept:
            raise EngineReplyError("no usable suggestions in engine reply")
        return cls(move_no=move_no, color=color, suggestions=tuple(kept))


@dataclass(frozen=True)
class EngineConfig:
    kind: str = "stub"  # stub | gtp | http
    simulation_setting: int = 20000
    komi: float = 7.5
    seed: int = 0  # stub only
    endpoint: str = ""  # http only
    command: tuple[str, ...] = ()  # gtp only
    analysis_command: str = "top_moves"  # gtp extension verb, engine specific
    timeout: float = 10.0

    def __post_init__(self) -> None:
        if self.kind not in ("stub", "gtp", "http"):
            raise ValueError(f"unknown engine kind {self.kind!r}")
        if self.simulation_setting <= 0:
            raise ValueError("simulation_setting must be positive")


class EngineSession(ABC):
    """Stateful conversation with one engine over one game."""

    def __init__(self, config: EngineConfig):
        self.config = config
        self.board = BoardState.empty()
        self.move_no = 1  # ply about to be played

    def play_move(self, move: Move) -> None:
        """Advance the engine with ``move``; the local mirror only moves
        when the engine accepted, so a failure leaves the session unchanged."""
        if move.number != self.move_no:
            raise EngineRejectedMove(
                f"expected ply {self.move_no}, got {move.number}"
            )
        try:
            next_board = apply_move(self.board, move)
        except IllegalMoveError as exc:
            raise EngineRejectedMove(str(exc)) from exc
        self._send_move(move)
        self.board = next_board
        self.move_no += 1

    def request_analysis(self) -> MoveAnalysis:
        return self._analyze(self.move_no, self.board.to_move)

    @abstractmethod
    def _send_move(self, move: Move) -> None: ...

    @abstractmethod
    def _analyze(self, move_no: int, color: Color) -> MoveAnalysis: ...

    def close(self) -> None:  # pragma: no cover - trivial default
        pass

    def __enter__(self) -> "EngineSession":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def open_session(config: EngineConfig) -> EngineSession:
    """Open a session of the configured kind with a cleared board."""
    if config.kind == "stub":
        from .stub import StubSession

        return StubSession(config)
    if config.kind == "gtp":
        from .gtp import GtpSession

        return GtpSession(config)
    from .http import HttpSession

    return HttpSession(config)
