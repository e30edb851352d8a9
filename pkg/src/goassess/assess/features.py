"""Per-move feature extraction against the engine's top-5 suggestions.

For every played move we record whether it matched one of the five
suggested points, the matched suggestion's simulation count and win rate
(falling back to the top suggestion on a miss), and the running top-move
rate under three weight profiles.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..engines import MoveAnalysis
from ..goban import Color, Move


@dataclass(frozen=True)
class TmrProfile:
    """Weights for the top-move-rate: one per suggestion rank, plus the
    mismatch weight which enters with a minus sign."""

    rank_weights: tuple[float, float, float, float, float]
    miss_weight: float


# Profile 1 counts plain matches; 2 decays by rank and penalizes misses;
# 3 decays by rank and rewards misses (negative weight flips the sign).
TMR_PROFILES: tuple[TmrProfile, TmrProfile, TmrProfile] = (
    TmrProfile((1.0, 1.0, 1.0, 1.0, 1.0), 0.0),
    TmrProfile((1.0, 0.8, 0.6, 0.4, 0.2), 0.1),
    TmrProfile((1.0, 0.8, 0.6, 0.4, 0.2), -0.1),
)


@dataclass(frozen=True)
class TmrState:
    """Cumulative match counters for one color."""

    color: Color
    rank_matches: tuple[int, int, int, int, int] = (0, 0, 0, 0, 0)
    misses: int = 0

    @property
    def total(self) -> int:
        return sum(self.rank_matches) + self.misses

    def record(self, matched_rank: int | None) -> "TmrState":
        if matched_rank is None:
            return replace(self, misses=self.misses + 1)
        counts = list(self.rank_matches)
        counts[matched_rank - 1] += 1
        return replace(self, rank_matches=tuple(counts))


def compute_tmr(state: TmrState, profile: TmrProfile) -> float:
    """Top-move rate in percent:
    100 * [sum_i (matches_i / n) * w_i  -  (misses / n) * w_miss]."""
    n = state.total
    if n == 0:
        raise ValueError("top-move rate undefined before any analyzed move")
    matched = sum(
        (count / n) * weight
        for count, weight in zip(state.rank_matches, profile.rank_weights)
    )
    return 100.0 * (matched - (state.misses / n) * profile.miss_weight)


def tmr_triple(state: TmrState) -> tuple[float, float, float]:
    return tuple(compute_tmr(state, p) for p in TMR_PROFILES)  # type: ignore[return-value]


@dataclass(frozen=True)
class MoveFeatures:
    move_no: int
    color: Color
    matched_rank: int | None  # 1..5, or None on a miss
    sn: int
    wr: float
    tmr_after: tuple[float, float, float]


def extract_features(
    analysis: MoveAnalysis, actual: Move, state: TmrState
) -> tuple[MoveFeatures, TmrState]:
    """Match ``actual`` against ``analysis`` and advance the TMR counters.

    On a match at rank k the k-th suggestion's (sn, wr) are taken; on a
    miss the top suggestion's values stand in, keeping every input defined.
    """
    if analysis.color is not actual.color:
        raise ValueError(
            f"analysis is for {analysis.color.value}, move is {actual.color.value}"
        )
    if analysis.move_no != actual.number:
        raise ValueError(f"analysis is for ply {analysis.move_no}, move is ply {actual.number}")
    if state.color is not actual.color:
        raise ValueError(f"counter state is for {state.color.value}")

    matched_rank: int | None = None
    chosen = analysis.suggestions[0]
    for rank, suggestion in enumerate(analysis.suggestions, start=1):
        if suggestion.coord == actual.coord:
            matched_rank = rank
            chosen = suggestion
            break

    new_state = state.record(matched_rank)
    features = MoveFeatures(
        move_no=actual.number,
        color=actual.color,
        matched_rank=matched_rank,
        sn=chosen.sn,
        wr=chosen.wr,
        tmr_after=tmr_triple(new_state),
    )
    return features, new_state
