"""Whole-game linguistic commentary.

Collects, per color, the three highest- and lowest-simulation moves, the
win-rate extrema and mean, and the profile-1 top-move rate, then renders
the fixed sentence skeleton ending in the overall-game-situation line.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .assess import FAVORABLE_BLACK, FAVORABLE_WHITE, MoveFeatures, OgsVerdict
from .goban import Color


@dataclass(frozen=True)
class MoveValue:
    move_no: int
    value: float


@dataclass(frozen=True)
class ColorSummary:
    color: Color
    highest_sn: tuple[MoveValue, MoveValue, MoveValue]
    lowest_sn: tuple[MoveValue, MoveValue, MoveValue]
    highest_wr: MoveValue
    lowest_wr: MoveValue
    average_wr: float
    tmr: float  # profile-1 top-move rate at the final analyzed move


@dataclass(frozen=True)
class Commentary:
    black: ColorSummary
    white: ColorSummary
    ogs: str  # FavorableToBlack | FavorableToWhite | UncertainSituation

    def __post_init__(self) -> None:
        for summary in (self.black, self.white):
            highs = [mv.value for mv in summary.highest_sn]
            lows = [mv.value for mv in summary.lowest_sn]
            if highs != sorted(highs, reverse=True):
                raise ValueError("highest-sn values must be non-increasing")
            if lows != sorted(lows):
                raise ValueError("lowest-sn values must be non-decreasing")
            if not summary.lowest_wr.value <= summary.average_wr <= summary.highest_wr.value:
                raise ValueError("average win rate outside [lowest, highest]")


def _summarize_color(moves: list[MoveFeatures], color: Color) -> ColorSummary:
    if len(moves) < 3:
        raise ValueError(f"need at least 3 analyzed {color.value} moves, got {len(moves)}")
    # Ties break toward the earlier move number.
    by_sn_desc = sorted(moves, key=lambda m: (-m.sn, m.move_no))
    by_sn_asc = sorted(moves, key=lambda m: (m.sn, m.move_no))
    by_wr_desc = sorted(moves, key=lambda m: (-m.wr, m.move_no))
    by_wr_asc = sorted(moves, key=lambda m: (m.wr, m.move_no))
    final = max(moves, key=lambda m: m.move_no)
    return ColorSummary(
        color=color,
        highest_sn=tuple(MoveValue(m.move_no, m.sn) for m in by_sn_desc[:3]),
        lowest_sn=tuple(MoveValue(m.move_no, m.sn) for m in by_sn_asc[:3]),
        highest_wr=MoveValue(by_wr_desc[0].move_no, by_wr_desc[0].wr),
        lowest_wr=MoveValue(by_wr_asc[0].move_no, by_wr_asc[0].wr),
        average_wr=sum(m.wr for m in moves) / len(moves),
        tmr=final.tmr_after[0],
    )


def summarize(features: list[MoveFeatures], ogs: OgsVerdict) -> Commentary:
    """Build the commentary record from every analyzed move of both colors."""
    black = [f for f in features if f.color is Color.BLACK]
    white = [f for f in features if f.color is Color.WHITE]
    return Commentary(
        black=_summarize_color(black, Color.BLACK),
        white=_summarize_color(white, Color.WHITE),
        ogs=_ogs_phrase_key(ogs.verdict),
    )


def _ogs_phrase_key(verdict: str) -> str:
    # Undecided collapses into the uncertain phrase: the closing line's
    # vocabulary is closed over three values.
    if verdict in (FAVORABLE_BLACK, FAVORABLE_WHITE):
        return verdict
    return "UncertainSituation"


def format_percent(value: float) -> str:
    """Two decimals, half-up: 0.5445 -> '54.45%'. Input is a fraction for
    win rates; pass percentages through ``format_percent_points``."""
    return format_percent_points(value * 100.0)


def format_percent_points(points: float) -> str:
    quantized = Decimal(repr(points)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    return f"{quantized}%"


def _move_token(color: Color, mv: MoveValue, value: str) -> str:
    return f"{color.letter}{mv.move_no} ({value})"


def _color_paragraph(s: ColorSummary) -> str:
    c = s.color
    name = "Black" if c is Color.BLACK else "White"
    high = [_move_token(c, mv, str(int(mv.value))) for mv in s.highest_sn]
    low = [_move_token(c, mv, str(int(mv.value))) for mv in s.lowest_sn]
    return (
        f"{name}: The first 3 highest simulation numbers occurred at Moves "
        f"{high[0]}, {high[1]}, and {high[2]}. "
        f"The last 3 lowest simulation numbers occurred at Moves "
        f"{low[0]}, {low[1]}, and {low[2]}. "
        f"The information of estimated possible win rate: "
        f"The highest win rate is {_move_token(c, s.highest_wr, format_percent(s.highest_wr.value))}, "
        f"the lowest win rate is {_move_token(c, s.lowest_wr, format_percent(s.lowest_wr.value))}, "
        f"and the average win rate is {format_percent(s.average_wr)}. "
        f"Top-move rate is {format_percent_points(s.tmr)}."
    )


_OGS_PHRASES = {
    FAVORABLE_BLACK: "favorable to Black",
    FAVORABLE_WHITE: "favorable to White",
    "UncertainSituation": "uncertain situation",
}


def render_text(commentary: Commentary) -> str:
    """The fixed three-paragraph commentary text."""
    return "\n".join(
        [
            _color_paragraph(commentary.black),
            _color_paragraph(commentary.white),
            f"Overall game situation is {_OGS_PHRASES[commentary.ogs]}.",
        ]
    )
