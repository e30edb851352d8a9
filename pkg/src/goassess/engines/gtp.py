"""GTP subprocess adapter.

Standard GTP v2 verbs drive setup and play (boardsize, clear_board, komi,
play, quit). Analysis is not part of GTP v2, so the verb used to fetch the
top-move list is configurable per engine (``analysis_command``); the reply
is parsed as whitespace-separated (vertex, simulations, winrate) triples.
"""

from __future__ import annotations

import queue
import subprocess
import threading

from ..goban import Color, Move, format_gtp, parse_gtp
from .base import (
    EngineConfig,
    EngineConnectError,
    EngineReplyError,
    EngineSession,
    EngineTimeoutError,
    MoveAnalysis,
    Suggestion,
)


class GtpSession(EngineSession):
    def __init__(self, config: EngineConfig):
        super().__init__(config)
        if not config.command:
            raise EngineConnectError("gtp engine needs a command line")
        try:
            self._proc = subprocess.Popen(
                list(config.command),
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise EngineConnectError(f"cannot spawn engine: {exc}") from exc
        self._lines: queue.Queue[str | None] = queue.Queue()
        self._reader = threading.Thread(target=self._pump, daemon=True)
        self._reader.start()
        self.sent: list[str] = []  # raw command lines, for diagnostics
        self._command("boardsize 19")
        self._command("clear_board")
        self._command(f"komi {config.komi}")

    def _pump(self) -> None:
        assert self._proc.stdout is not None
        for line in self._proc.stdout:
            self._lines.put(line.rstrip("\n"))
        self._lines.put(None)

    def _command(self, command: str) -> str:
        if self._proc.stdin is None or self._proc.poll() is not None:
            raise EngineConnectError("engine process is gone")
        line = command + "\n"
        self.sent.append(line)
        try:
            self._proc.stdin.write(line)
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise EngineConnectError(f"engine pipe closed: {exc}") from exc
        # GTP replies are "= payload" or "? error", terminated by a blank line.
        payload: list[str] = []
        status: str | None = None
        while True:
            try:
                received = self._lines.get(timeout=self.config.timeout)
            except queue.Empty:
                raise EngineTimeoutError(f"no reply to {command!r}") from None
            if received is None:
                raise EngineConnectError("engine closed its output")
            if status is None:
                if not received:
                    continue
                if received[0] not in "=?":
                    raise EngineReplyError(f"bad GTP reply line {received!r}")
                status = received[0]
                payload.append(received[1:].lstrip(" "))
            elif received == "":
                break
            else:
                payload.append(received)
        text = "\n".join(payload).strip()
        if status == "?":
            raise EngineReplyError(f"engine error for {command!r}: {text}")
        return text

    def _send_move(self, move: Move) -> None:
        self._command(f"play {move.color.value} {format_gtp(move.coord)}")

    def _analyze(self, move_no: int, color: Color) -> MoveAnalysis:
        reply = self._command(f"{self.config.analysis_command} {color.value}")
        tokens = reply.split()
        if not tokens or len(tokens) % 3 != 0:
            raise EngineReplyError(f"analysis reply is not (vertex sn wr) triples: {reply!r}")
        raw = []
        for i in range(0, len(tokens), 3):
            try:
                raw.append(
                    Suggestion(parse_gtp(tokens[i]), int(tokens[i + 1]), float(tokens[i + 2]))
                )
            except ValueError as exc:
                raise EngineReplyError(f"bad analysis entry at {tokens[i:i+3]}: {exc}") from exc
        return MoveAnalysis.from_raw(move_no, color, raw, board=self.board)

    def close(self) -> None:
        if self._proc.poll() is None:
            try:
                self._command("quit")
            except Exception:
                pass
            self._proc.terminate()
        self._proc.wait(timeout=5)
