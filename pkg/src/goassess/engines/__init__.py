from .base import (
    EngineConfig,
    EngineConnectError,
    EngineError,
    EngineRejectedMove,
    EngineReplyError,
    EngineSession,
    EngineTimeoutError,
    MoveAnalysis,
    Suggestion,
    open_session,
)
from .stub import StubSession, seed_bias, stub_analyze

__all__ = [
    "EngineConfig",
    "EngineConnectError",
    "EngineError",
    "EngineRejectedMove",
    "EngineReplyError",
    "EngineSession",
    "EngineTimeoutError",
    "MoveAnalysis",
    "StubSession",
    "Suggestion",
    "open_session",
    "seed_bias",
    "stub_analyze",
]
