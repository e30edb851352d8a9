"""Batch replay of SGF games through the assessment pipeline.

Each move is analyzed before it is played, matched against the analysis,
assessed once more than ten moves are on the board, and fed to the engine.
A finished replay yields a GameReport with the full situation series, both
verdict methods, and the rendered commentary.
"""

from __future__ import annotations

import csv
import json
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .assess import (
    CgsRecord,
    FML_1,
    FML_2,
    MoveFeatures,
    OgsVerdict,
    TmrState,
    assess_move,
    decide_ogs_method1,
    decide_ogs_method2,
    extract_features,
    load_shipped_system,
)
from .engines import EngineConfig, EngineError, open_session
from .goban import Color, GameRecord, parse_sgf
from .summary import Commentary, render_text, summarize


@dataclass(frozen=True)
class GameReport:
    game_id: str
    fml_variant: str
    result: str | None
    final_wr: dict[str, float]  # last analyzed win rate per color
    tmr: dict[str, tuple[float, float, float]]  # final profile triple per color
    features: tuple[MoveFeatures, ...]
    cgs_series: tuple[CgsRecord, ...]
    method1: OgsVerdict
    method2: OgsVerdict
    commentary: Commentary | None
    commentary_text: str
    metadata: dict[str, tuple[str, ...]] = field(default_factory=dict)
    partial: bool = False
    # Wall-clock seconds; excluded from equality so identical replays compare equal.
    elapsed: float = field(default=0.0, compare=False)

    def to_jsonable(self) -> dict:
        return {
            "game_id": self.game_id,
            "fml_variant": self.fml_variant,
            "result": self.result,
            "final_wr": self.final_wr,
            "tmr": {k: list(v) for k, v in self.tmr.items()},
            "features": [
                {
                    "move_no": f.move_no,
                    "color": f.color.value,
                    "matched_rank": f.matched_rank,
                    "sn": f.sn,
                    "wr": f.wr,
                    "tmr": list(f.tmr_after),
                }
                for f in self.features
            ],
            "cgs_series": [
                {
                    "move_no": r.move_no,
                    "inputs": r.inputs,
                    "crisp": r.crisp,
                    "label": r.label,
                    "clamped": list(r.clamped),
                }
                for r in self.cgs_series
            ],
            "method1": {"verdict": self.method1.verdict, "correct": self.method1.correct},
            "method2": {"verdict": self.method2.verdict, "correct": self.method2.correct},
            "commentary_text": self.commentary_text,
            "metadata": {k: list(v) for k, v in sorted(self.metadata.items())},
            "partial": self.partial,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), indent=2, sort_keys=True) + "\n"


def replay_record(
    record: GameRecord,
    engine_config: EngineConfig,
    fml_variant: str = FML_2,
    game_id: str = "game",
    ogs_method: int = 2,
) -> GameReport:
    """Run one parsed game through the pipeline.

    ``ogs_method`` picks which verdict feeds the commentary's closing line
    (both verdicts are always computed and reported)."""
    started = time.monotonic()
    system = load_shipped_system(fml_variant)
    session = open_session(engine_config)
    states = {Color.BLACK: TmrState(Color.BLACK), Color.WHITE: TmrState(Color.WHITE)}
    latest: dict[Color, MoveFeatures | None] = {Color.BLACK: None, Color.WHITE: None}
    features: list[MoveFeatures] = []
    series: list[CgsRecord] = []
    partial = False

    try:
        for move in record.moves:
            analysis = session.request_analysis()
            feats, states[move.color] = extract_features(analysis, move, states[move.color])
            features.append(feats)
            latest[move.color] = feats
            cgs = assess_move(latest[Color.BLACK], latest[Color.WHITE], system, move.number)
            if cgs is not None:
                series.append(cgs)
            session.play_move(move)
    except EngineError:
        partial = True
    finally:
        session.close()

    method1 = (
        decide_ogs_method1(series, record.result)
        if series
        else OgsVerdict(1, "Undecided", False if record.result else None)
    )
    method2 = (
        decide_ogs_method2(series, record.result)
        if series
        else OgsVerdict(2, "Undecided", False if record.result else None)
    )

    commentary: Commentary | None = None
    text = ""
    by_color = {
        Color.BLACK: [f for f in features if f.color is Color.BLACK],
        Color.WHITE: [f for f in features if f.color is Color.WHITE],
    }
    if all(len(v) >= 3 for v in by_color.values()):
        commentary = summarize(features, method1 if ogs_method == 1 else method2)
        text = render_text(commentary)

    final_wr = {c.value: moves[-1].wr for c, moves in by_color.items() if moves}
    tmr = {c.value: moves[-1].tmr_after for c, moves in by_color.items() if moves}
    return GameReport(
        game_id=game_id,
        fml_variant=fml_variant,
        result=record.result,
        final_wr=final_wr,
        tmr=tmr,
        features=tuple(features),
        cgs_series=tuple(series),
        method1=method1,
        method2=method2,
        commentary=commentary,
        commentary_text=text,
        metadata=dict(record.metadata),
        partial=partial,
        elapsed=time.monotonic() - started,
    )


def replay_game(
    sgf_path: str | Path,
    engine_config: EngineConfig,
    fml_variant: str = FML_2,
    ogs_method: int = 2,
) -> GameReport:
    path = Path(sgf_path)
    record = parse_sgf(path.read_text())
    return replay_record(
        record, engine_config, fml_variant, game_id=path.stem, ogs_method=ogs_method
    )


@dataclass(frozen=True)
class ExperimentRun:
    name: str
    engine: EngineConfig
    fml_variant: str = FML_2
    ogs_method: int = 2
    games: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.fml_variant not in (FML_1, FML_2):
            raise ValueError(f"run {self.name!r}: bad fml_variant {self.fml_variant!r}")
        if self.ogs_method not in (1, 2):
            raise ValueError(f"run {self.name!r}: ogs_method must be 1 or 2")
        if not self.games:
            raise ValueError(f"run {self.name!r}: empty game set")


@dataclass(frozen=True)
class ExperimentConfig:
    runs: tuple[ExperimentRun, ...]

    def __post_init__(self) -> None:
        names = [run.name for run in self.runs]
        if len(set(names)) != len(names):
            raise ValueError("run names must be unique")

    @classmethod
    def from_json(cls, text: str, base_dir: Path | None = None) -> "ExperimentConfig":
        data = json.loads(text)
        runs = []
        for raw in data["runs"]:
            engine_raw = dict(raw.get("engine", {}))
            if "simulation_setting" in raw:
                engine_raw.setdefault("simulation_setting", raw["simulation_setting"])
            if "command" in engine_raw:
                engine_raw["command"] = tuple(engine_raw["command"])
            games = [
                str((base_dir / g) if base_dir and not Path(g).is_absolute() else Path(g))
                for g in raw["games"]
            ]
            runs.append(
                ExperimentRun(
                    name=raw["name"],
                    engine=EngineConfig(**engine_raw),
                    fml_variant=raw.get("fml_variant", FML_2),
                    ogs_method=int(raw.get("ogs_method", 2)),
                    games=tuple(games),
                )
            )
        return cls(runs=tuple(runs))


@dataclass(frozen=True)
class RunResult:
    name: str
    fml_variant: str
    ogs_method: int
    reports: tuple[GameReport, ...]

    @property
    def accuracy(self) -> float | None:
        """Correct verdicts over games with a known result (None if none)."""
        verdicts = [
            (r.method1 if self.ogs_method == 1 else r.method2).correct
            for r in self.reports
        ]
        known = [v for v in verdicts if v is not None]
        if not known:
            return None
        return sum(known) / len(known)


@dataclass(frozen=True)
class ExperimentResults:
    runs: tuple[RunResult, ...]

    def cross_table(self) -> dict[str, dict[int, float | None]]:
        """Mean accuracy per (fml_variant, method) cell over matching runs."""
        cells: dict[str, dict[int, list[float]]] = {
            FML_1: {1: [], 2: []},
            FML_2: {1: [], 2: []},
        }
        for run in self.runs:
            acc = run.accuracy
            if acc is not None:
                cells[run.fml_variant][run.ogs_method].append(acc)
        return {
            variant: {
                method: (sum(vals) / len(vals) if vals else None)
                for method, vals in methods.items()
            }
            for variant, methods in cells.items()
        }

    def render_cross_table(self) -> str:
        table = self.cross_table()
        lines = [f"{'':8}{'Method 1':>12}{'Method 2':>12}"]
        for variant in (FML_1, FML_2):
            cells = [
                f"{table[variant][m]:.3f}" if table[variant][m] is not None else "-"
                for m in (1, 2)
            ]
            lines.append(f"{variant:8}{cells[0]:>12}{cells[1]:>12}")
        return "\n".join(lines)


def run_experiments(config: ExperimentConfig) -> ExperimentResults:
    """Replay every run's game set; results join in config order so the
    output is deterministic."""
    results = []
    for run in config.runs:
        reports = tuple(
            replay_game(path, run.engine, run.fml_variant, ogs_method=run.ogs_method)
            for path in run.games
        )
        results.append(
            RunResult(
                name=run.name,
                fml_variant=run.fml_variant,
                ogs_method=run.ogs_method,
                reports=reports,
            )
        )
    return ExperimentResults(runs=tuple(results))


CURVE_COLUMNS = (
    "move_no", "color", "sn", "wr", "tmr1", "tmr2", "tmr3", "cgs_crisp", "cgs_label",
)


def export_curves(report: GameReport, destination: str | Path) -> Path:
    """Per-move table (one row per analyzed move) for plotting simulation
    and win-rate curves. Numeric fields use full precision (repr).
    A report without analyzed moves yields a header-only file and a warning."""
    if not report.features:
        warnings.warn(f"report {report.game_id!r} has no analyzed moves; writing header only")
    destination = Path(destination)
    destination.parent.mkdir(parents=True, exist_ok=True)
    by_move = {r.move_no: r for r in report.cgs_series}
    with destination.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CURVE_COLUMNS)
        for f in report.features:
            record = by_move.get(f.move_no)
            writer.writerow(
                [
                    f.move_no,
                    f.color.value,
                    f.sn,
                    repr(f.wr),
                    repr(f.tmr_after[0]),
                    repr(f.tmr_after[1]),
                    repr(f.tmr_after[2]),
                    repr(record.crisp) if record else "",
                    record.label if record else "",
                ]
            )
    return destination
