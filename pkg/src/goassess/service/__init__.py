from .app import create_app
from .eventlog import EventLog, EventLogEntry, LogIntegrityError, read_log
from .sessions import (
    AssessmentFrame,
    GameSession,
    ReplayedSession,
    SessionError,
    SessionFinished,
    replay_log,
)

__all__ = [
    "AssessmentFrame",
    "EventLog",
    "EventLogEntry",
    "GameSession",
    "LogIntegrityError",
    "ReplayedSession",
    "SessionError",
    "SessionFinished",
    "create_app",
    "read_log",
    "replay_log",
]
