"""Per-move situation inference and whole-game verdicts.

Assessment starts once more than ten moves have been played. Each record
carries the six crisp inputs, the defuzzified situation value on [0, 100],
and one of the five linguistic labels. Two verdict methods decide the
overall game situation: Method 1 reads the last record, Method 2 reads the
last five non-uncertain records (scanning backward past uncertain ones).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..fml import FuzzySystem, infer
from ..goban import Color
from .features import MoveFeatures
from .knowledge import CGS_LABELS

# Records are only emitted for plies strictly greater than this.
ASSESSMENT_START_MOVE = 10

FAVORABLE_BLACK = "FavorableToBlack"
FAVORABLE_WHITE = "FavorableToWhite"
UNCERTAIN = "UncertainSituation"
UNDECIDED = "Undecided"


@dataclass(frozen=True)
class CgsRecord:
    move_no: int
    inputs: dict[str, float]
    crisp: float
    label: str
    clamped: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.label not in CGS_LABELS:
            raise ValueError(f"unknown situation label {self.label!r}")


def label_side(label: str) -> Color | None:
    if label.startswith("Black"):
        return Color.BLACK
    if label.startswith("White"):
        return Color.WHITE
    return None


def winner_from_result(result: str | None) -> Color | None:
    """Winner encoded in an SGF-style result ("B+R", "W+0.5"); None if absent
    or undecided (draws, voids)."""
    if not result:
        return None
    head = result.strip().upper()
    if head.startswith("B+"):
        return Color.BLACK
    if head.startswith("W+"):
        return Color.WHITE
    return None


def assess_move(
    black_latest: MoveFeatures | None,
    white_latest: MoveFeatures | None,
    system: FuzzySystem,
    move_no: int,
) -> CgsRecord | None:
    """Situation record for ``move_no``, or None while warming up.

    Crisp inputs come from each color's most recent features (profile-1
    top-move rate feeds the TMR inputs). Values outside a variable's
    domain are clamped to the boundary and flagged.
    """
    if move_no <= ASSESSMENT_START_MOVE:
        return None
    if black_latest is None or white_latest is None:
        raise ValueError("both colors need analyzed moves before assessment")

    raw = {
        "BSN": float(black_latest.sn),
        "WSN": float(white_latest.sn),
        "BWR": black_latest.wr,
        "WWR": white_latest.wr,
        "BTMR": black_latest.tmr_after[0],
        "WTMR": white_latest.tmr_after[0],
    }
    declared = {v.name for v in system.input_variables}
    inputs: dict[str, float] = {}
    clamped: list[str] = []
    for name, value in raw.items():
        if name not in declared:
            continue
        var = system.variable(name)
        bounded = min(var.domain_right, max(var.domain_left, value))
        if bounded != value:
            clamped.append(name)
        inputs[name] = bounded

    result = infer(system, inputs)
    return CgsRecord(
        move_no=move_no,
        inputs=raw,
        crisp=result.crisp,
        label=result.label,
        clamped=tuple(clamped),
    )


@dataclass(frozen=True)
class OgsVerdict:
    method: int
    verdict: str  # FavorableToBlack | FavorableToWhite | UncertainSituation | Undecided
    correct: bool | None = None


def _verdict_for_side(side: Color | None) -> str:
    if side is Color.BLACK:
        return FAVORABLE_BLACK
    if side is Color.WHITE:
        return FAVORABLE_WHITE
    return UNCERTAIN


def decide_ogs_method1(series: list[CgsRecord], result: str | None = None) -> OgsVerdict:
    """Verdict from the last record's label."""
    if not series:
        raise ValueError("empty situation series")
    side = label_side(series[-1].label)
    verdict = _verdict_for_side(side)
    winner = winner_from_result(result)
    correct = None if winner is None else side is winner
    return OgsVerdict(method=1, verdict=verdict, correct=correct)


def decide_ogs_method2(series: list[CgsRecord], result: str | None = None) -> OgsVerdict:
    """Verdict from the last five non-uncertain records.

    Uncertain records are skipped while scanning backward; if fewer than
    five non-uncertain records exist in the whole series the verdict is
    Undecided. The reported side is the window's majority; correctness
    holds when any window record matches the actual winner.
    """
    if not series:
        raise ValueError("empty situation series")
    window: list[Color] = []
    for record in reversed(series):
        side = label_side(record.label)
        if side is None:
            continue
        window.append(side)
        if len(window) == 5:
            break

    winner = winner_from_result(result)
    if len(window) < 5:
        correct = None if winner is None else False
        return OgsVerdict(method=2, verdict=UNDECIDED, correct=correct)

    blacks = sum(1 for side in window if side is Color.BLACK)
    whites = len(window) - blacks
    if blacks > whites:
        verdict = FAVORABLE_BLACK
    elif whites > blacks:
        verdict = FAVORABLE_WHITE
    else:
        verdict = UNCERTAIN
    correct = None if winner is None else any(side is winner for side in window)
    return OgsVerdict(method=2, verdict=verdict, correct=correct)
