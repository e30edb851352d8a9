"""Deterministic built-in analysis generator for tests and offline runs.

Analyses are a pure function of (seed, position hash, ply); the per-seed
bias makes one color trend toward winning as the game progresses, so
synthetic games are decidable by the verdict methods.
"""

from __future__ import annotations

import hashlib
import random

from ..goban import BoardState, Color, Move, PASS, legal_moves
from .base import EngineConfig, EngineSession, MoveAnalysis, Suggestion

WR_FLOOR, WR_CEIL = 0.2, 0.8


def _rng_for(seed: int, position_hash: int, salt: int = 0) -> random.Random:
    key = seed.to_bytes(8, "big", signed=True) + position_hash.to_bytes(8, "big") \
        + salt.to_bytes(2, "big")
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def seed_bias(seed: int) -> tuple[Color, float]:
    """Favored color and drift magnitude for a stub seed."""
    rng = _rng_for(seed, 0, salt=1)
    favored = Color.BLACK if rng.random() < 0.5 else Color.WHITE
    magnitude = rng.uniform(0.02, 0.22)
    return favored, magnitude


def stub_analyze(
    seed: int,
    board: BoardState,
    simulation_setting: int = 20000,
    move_no: int = 1,
) -> MoveAnalysis:
    """Deterministic top-5 analysis for the side to move on ``board``."""
    color = board.to_move
    candidates = sorted(c for c in legal_moves(board, color) if not c.is_pass)
    if not candidates:
        return MoveAnalysis(move_no, color, (Suggestion(PASS, simulation_setting, 0.5),))

    rng = _rng_for(seed, board.position_hash)
    picks = rng.sample(candidates, min(5, len(candidates)))

    favored, magnitude = seed_bias(seed)
    drift = magnitude * min(1.0, move_no / 70.0)
    side = drift if color is favored else -drift
    base_wr = 0.5 + side + rng.uniform(-0.08, 0.08)

    # Descending weights with a dominant top entry, scaled so the total
    # stays under the simulation budget even after truncation.
    weights = [1.0]
    for _ in range(len(picks) - 1):
        weights.append(weights[-1] * rng.uniform(0.15, 0.5))
    scale = simulation_setting * rng.uniform(0.75, 0.98) / sum(weights)
    suggestions = []
    for coord, weight in zip(picks, weights):
        wr = min(WR_CEIL, max(WR_FLOOR, base_wr + rng.uniform(-0.03, 0.03)))
        suggestions.append(Suggestion(coord, int(weight * scale), round(wr, 5)))
    return MoveAnalysis(move_no, color, tuple(suggestions))


class StubSession(EngineSession):
    def __init__(self, config: EngineConfig):
        super().__init__(config)
        self.board = BoardState.empty()

    def _send_move(self, move: Move) -> None:
        pass  # nothing beyond the local mirror

    def _analyze(self, move_no: int, color: Color) -> MoveAnalysis:
        return stub_analyze(
            self.config.seed, self.board, self.config.simulation_setting, move_no
        )
