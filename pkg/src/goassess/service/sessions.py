"""Live game sessions: board + engine + assessment state + event log.

A session is single-writer: the service serializes move handling per
session. Every accepted move produces one assessment frame that is
persisted and handed to the caller for broadcast; a rejected move leaves
both the session and its log untouched.
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from ..assess import (
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
from ..engines import EngineConfig, EngineSession, MoveAnalysis, Suggestion, open_session
from ..goban import Color, Coord, Move, format_gtp, parse_gtp
from ..summary import Commentary, render_text, summarize
from .eventlog import EventLog, EventLogEntry, read_log


class SessionError(Exception):
    pass


class SessionFinished(SessionError):
    pass


def suggestions_json(analysis: MoveAnalysis) -> list[dict]:
    return [
        {"vertex": format_gtp(s.coord), "sn": s.sn, "wr": s.wr}
        for s in analysis.suggestions
    ]


def analysis_from_json(move_no: int, color: Color, entries: list[dict]) -> MoveAnalysis:
    return MoveAnalysis(
        move_no,
        color,
        tuple(Suggestion(parse_gtp(e["vertex"]), int(e["sn"]), float(e["wr"])) for e in entries),
    )


def cgs_json(record: CgsRecord | None) -> dict | None:
    if record is None:
        return None
    return {
        "move_no": record.move_no,
        "inputs": record.inputs,
        "crisp": record.crisp,
        "label": record.label,
        "clamped": list(record.clamped),
    }


def verdict_json(verdict: OgsVerdict) -> dict:
    return {"method": verdict.method, "verdict": verdict.verdict, "correct": verdict.correct}


@dataclass(frozen=True)
class AssessmentFrame:
    """Everything a client needs after one move: the move itself, the
    mover's matched features, the running rates, the situation record
    (once past the warm-up), and the next mover's suggestions."""

    move_no: int
    move: Move
    suggestions: MoveAnalysis  # for the next mover
    sn: int
    wr: float
    matched_rank: int | None
    tmr: tuple[float, float, float]
    cgs: CgsRecord | None
    timestamp: float

    def to_json(self) -> dict:
        return {
            "type": "frame",
            "move_no": self.move_no,
            "move": {"color": self.move.color.value, "vertex": format_gtp(self.move.coord)},
            "suggestions": suggestions_json(self.suggestions),
            "sn": self.sn,
            "wr": self.wr,
            "matched_rank": self.matched_rank,
            "tmr": list(self.tmr),
            "cgs": cgs_json(self.cgs),
            "timestamp": self.timestamp,
        }


@dataclass
class GameSession:
    id: str
    engine_config: EngineConfig
    fml_variant: str
    engine: EngineSession
    log: EventLog
    pending_analysis: MoveAnalysis
    tmr: dict[Color, TmrState] = field(
        default_factory=lambda: {c: TmrState(c) for c in Color}
    )
    latest: dict[Color, MoveFeatures | None] = field(
        default_factory=lambda: {Color.BLACK: None, Color.WHITE: None}
    )
    features: list[MoveFeatures] = field(default_factory=list)
    cgs_series: list[CgsRecord] = field(default_factory=list)
    frames: list[AssessmentFrame] = field(default_factory=list)
    status: str = "open"  # open | finished
    finish_payload: dict | None = None

    @classmethod
    def create(cls, engine_config: EngineConfig, fml_variant: str, data_dir: Path,
               clock=time.time) -> "GameSession":
        """Open the engine, then persist the created event. Engine failure
        leaves nothing on disk."""
        if fml_variant not in (FML_1, FML_2):
            raise SessionError(f"unknown FML variant {fml_variant!r}")
        load_shipped_system(fml_variant)  # fail fast on packaging problems
        engine = open_session(engine_config)
        initial = engine.request_analysis()
        session_id = uuid.uuid4().hex
        data_dir.mkdir(parents=True, exist_ok=True)
        log = EventLog(data_dir / f"{session_id}.log")
        log.append(
            "created",
            {
                "id": session_id,
                "engine": {
                    "kind": engine_config.kind,
                    "simulation_setting": engine_config.simulation_setting,
                    "komi": engine_config.komi,
                    "seed": engine_config.seed,
                    "endpoint": engine_config.endpoint,
                    "command": list(engine_config.command),
                    "analysis_command": engine_config.analysis_command,
                    "timeout": engine_config.timeout,
                },
                "fml_variant": fml_variant,
                "initial_suggestions": suggestions_json(initial),
            },
            clock(),
        )
        return cls(
            id=session_id,
            engine_config=engine_config,
            fml_variant=fml_variant,
            engine=engine,
            log=log,
            pending_analysis=initial,
        )

    @property
    def move_no(self) -> int:
        return len(self.features) + 1  # ply about to be played

    @property
    def board(self):
        return self.engine.board

    def submit(self, move: Move, clock=time.time) -> AssessmentFrame:
        """Apply one move: engine first (rejections leave no trace), then
        features, situation, persistence, and the next analysis."""
        if self.status != "open":
            raise SessionFinished(f"session {self.id} is finished")
        system = load_shipped_system(self.fml_variant)
        analysis = self.pending_analysis
        self.engine.play_move(move)  # raises EngineError subclasses; state unchanged

        feats, new_state = extract_features(analysis, move, self.tmr[move.color])
        cgs = assess_move(
            feats if move.color is Color.BLACK else self.latest[Color.BLACK],
            feats if move.color is Color.WHITE else self.latest[Color.WHITE],
            system,
            move.number,
        )
        next_analysis = self.engine.request_analysis()
        frame = AssessmentFrame(
            move_no=move.number,
            move=move,
            suggestions=next_analysis,
            sn=feats.sn,
            wr=feats.wr,
            matched_rank=feats.matched_rank,
            tmr=feats.tmr_after,
            cgs=cgs,
            timestamp=clock(),
        )

        self.log.append(
            "move",
            {"number": move.number, "color": move.color.value, "vertex": format_gtp(move.coord)},
            frame.timestamp,
        )
        self.log.append("frame", frame.to_json(), frame.timestamp)

        self.tmr[move.color] = new_state
        self.latest[move.color] = feats
        self.features.append(feats)
        if cgs is not None:
            self.cgs_series.append(cgs)
        self.frames.append(frame)
        self.pending_analysis = next_analysis
        return frame

    def finish(self, result: str | None, clock=time.time) -> dict:
        """Close the session: verdicts, commentary when summarizable, log."""
        if self.status != "open":
            raise SessionFinished(f"session {self.id} is already finished")
        if self.cgs_series:
            method1 = decide_ogs_method1(self.cgs_series, result)
            method2 = decide_ogs_method2(self.cgs_series, result)
        else:
            unset = False if result else None
            method1 = OgsVerdict(1, "Undecided", unset)
            method2 = OgsVerdict(2, "Undecided", unset)

        commentary: Commentary | None = None
        text = None
        per_color = {
            c: [f for f in self.features if f.color is c] for c in Color
        }
        if all(len(v) >= 3 for v in per_color.values()):
            commentary = summarize(self.features, method2)
            text = render_text(commentary)

        payload = {
            "type": "commentary",
            "result": result,
            "ogs": commentary.ogs if commentary else method2.verdict,
            "text": text,
            "verdicts": {
                "method1": verdict_json(method1),
                "method2": verdict_json(method2),
            },
            "timestamp": clock(),
        }
        self.log.append("finished", payload, payload["timestamp"])
        self.status = "finished"
        self.finish_payload = payload
        return payload

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "fml_variant": self.fml_variant,
            "komi": self.engine_config.komi,
            "move_no": self.move_no,
            "to_move": self.board.to_move.value,
            "board": {
                "black": [format_gtp(c) for c in self.board.stones(Color.BLACK)],
                "white": [format_gtp(c) for c in self.board.stones(Color.WHITE)],
            },
            "captures": {
                "black": self.board.captures_black,
                "white": self.board.captures_white,
            },
            "suggestions": suggestions_json(self.pending_analysis),
            "last_frame": self.frames[-1].to_json() if self.frames else None,
            "cgs": cgs_json(self.cgs_series[-1]) if self.cgs_series else None,
            "commentary": self.finish_payload,
        }


@dataclass(frozen=True)
class ReplayedSession:
    """Session state rebuilt purely from a log file."""

    id: str
    fml_variant: str
    frames: tuple[AssessmentFrame, ...]
    cgs_series: tuple[CgsRecord, ...]
    moves: tuple[Move, ...]
    status: str
    finish_payload: dict | None


def replay_log(path: Path) -> ReplayedSession:
    """Deterministically rebuild a session from its event log.

    Engine analyses are taken from the log (never re-queried), while all
    derived values (features, rates, situation records) are recomputed
    through the same pipeline the live session used.
    """
    entries = read_log(path)
    if entries[0].kind != "created":
        raise_entry_error(entries[0], "log must start with a created event")
    created = entries[0].payload
    fml_variant = created["fml_variant"]
    system = load_shipped_system(fml_variant)

    pending = analysis_from_json(1, Color.BLACK, created["initial_suggestions"])
    tmr = {c: TmrState(c) for c in Color}
    latest: dict[Color, MoveFeatures | None] = {Color.BLACK: None, Color.WHITE: None}
    features: list[MoveFeatures] = []
    series: list[CgsRecord] = []
    frames: list[AssessmentFrame] = []
    moves: list[Move] = []
    status = "open"
    finish_payload: dict | None = None

    index = 1
    while index < len(entries):
        entry = entries[index]
        if entry.kind == "move":
            move = Move(
                Color(entry.payload["color"]),
                parse_gtp(entry.payload["vertex"]),
                entry.payload["number"],
            )
            if index + 1 >= len(entries) or entries[index + 1].kind != "frame":
                raise_entry_error(entry, f"move {move.number} has no frame event")
            frame_payload = entries[index + 1].payload
            feats, tmr[move.color] = extract_features(pending, move, tmr[move.color])
            cgs = assess_move(
                feats if move.color is Color.BLACK else latest[Color.BLACK],
                feats if move.color is Color.WHITE else latest[Color.WHITE],
                system,
                move.number,
            )
            next_color = move.color.opponent
            pending = analysis_from_json(
                move.number + 1, next_color, frame_payload["suggestions"]
            )
            frame = AssessmentFrame(
                move_no=move.number,
                move=move,
                suggestions=pending,
                sn=feats.sn,
                wr=feats.wr,
                matched_rank=feats.matched_rank,
                tmr=feats.tmr_after,
                cgs=cgs,
                timestamp=frame_payload["timestamp"],
            )
            latest[move.color] = feats
            features.append(feats)
            if cgs is not None:
                series.append(cgs)
            frames.append(frame)
            moves.append(move)
            index += 2
        elif entry.kind == "finished":
            status = "finished"
            finish_payload = entry.payload
            index += 1
        else:
            raise_entry_error(entry, f"unexpected {entry.kind} event")

    return ReplayedSession(
        id=created["id"],
        fml_variant=fml_variant,
        frames=tuple(frames),
        cgs_series=tuple(series),
        moves=tuple(moves),
        status=status,
        finish_payload=finish_payload,
    )


def raise_entry_error(entry: EventLogEntry, message: str) -> None:
    from .eventlog import LogIntegrityError

    raise LogIntegrityError(f"event {entry.seq}: {message}")
