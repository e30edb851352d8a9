"""Append-only per-game event log (one JSON object per line).

Entries carry contiguous sequence numbers from 1; replaying a log must
reconstruct the exact session state, so everything a session consumed
(engine config, analyses, moves, results) is recorded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

KINDS = ("created", "move", "frame", "finished")


class LogIntegrityError(Exception):
    pass


@dataclass(frozen=True)
class EventLogEntry:
    seq: int
    kind: str
    payload: dict
    timestamp: float


class EventLog:
    """Writer/reader for one game's log file."""

    def __init__(self, path: Path):
        self.path = path
        self._next_seq = 1

    def append(self, kind: str, payload: dict, timestamp: float) -> EventLogEntry:
        if kind not in KINDS:
            raise ValueError(f"unknown event kind {kind!r}")
        entry = EventLogEntry(self._next_seq, kind, payload, timestamp)
        line = json.dumps(
            {"seq": entry.seq, "kind": kind, "t": timestamp, "payload": payload},
            sort_keys=True,
        )
        with self.path.open("a") as handle:
            handle.write(line + "\n")
            handle.flush()
        self._next_seq += 1
        return entry


def read_log(path: Path) -> list[EventLogEntry]:
    """Load and validate a log; raises LogIntegrityError on gaps or damage."""
    if not path.exists():
        raise LogIntegrityError(f"no log at {path}")
    entries: list[EventLogEntry] = []
    expected = 1
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise LogIntegrityError(
                f"{path}:{lineno}: damaged entry where sequence {expected} was expected: {exc}"
            ) from exc
        seq = data.get("seq")
        if seq != expected:
            raise LogIntegrityError(
                f"{path}:{lineno}: sequence {expected} missing (found {seq!r})"
            )
        entries.append(EventLogEntry(seq, data["kind"], data["payload"], data["t"]))
        expected += 1
    if not entries:
        raise LogIntegrityError(f"{path}: empty log, sequence 1 missing")
    return entries
