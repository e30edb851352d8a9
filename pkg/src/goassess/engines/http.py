"""Remote HTTP engine adapter.

Wire schema: POST <endpoint> with
  {"command": "play", "color": "black"|"white", "vertex": "<GTP vertex>"}
    -> {"result": true|false}
  {"command": "analyze", "color": "black"|"white"}
    -> {"suggestions": [{"vertex": "B1", "sn": 12983, "wr": 0.46114}, ...]}

The endpoint is expected to serve one fresh game; there is no clear/komi
verb in the schema, so game management is the remote side's concern.
Opening a session probes the endpoint with an analyze request.
"""

from __future__ import annotations

import httpx

from ..goban import Color, CoordError, Move, format_gtp, parse_gtp
from .base import (
    EngineConfig,
    EngineConnectError,
    EngineRejectedMove,
    EngineReplyError,
    EngineSession,
    EngineTimeoutError,
    MoveAnalysis,
    Suggestion,
)


class HttpSession(EngineSession):
    def __init__(self, config: EngineConfig, client: httpx.Client | None = None):
        super().__init__(config)
        if not config.endpoint:
            raise EngineConnectError("http engine needs an endpoint")
        self._client = client or httpx.Client(timeout=config.timeout)
        self._owns_client = client is None
        self._post({"command": "analyze", "color": self.board.to_move.value})  # reachability probe

    def _post(self, body: dict) -> dict:
        try:
            response = self._client.post(self.config.endpoint, json=body)
        except httpx.TimeoutException as exc:
            raise EngineTimeoutError(f"engine timed out: {exc}") from exc
        except httpx.HTTPError as exc:
            raise EngineConnectError(f"engine unreachable: {exc}") from exc
        if response.status_code != 200:
            raise EngineReplyError(f"engine returned HTTP {response.status_code}")
        try:
            return response.json()
        except ValueError as exc:
            raise EngineReplyError(f"engine reply is not JSON: {exc}") from exc

    def _send_move(self, move: Move) -> None:
        reply = self._post(
            {"command": "play", "color": move.color.value, "vertex": format_gtp(move.coord)}
        )
        if reply.get("result") is not True:
            raise EngineRejectedMove(f"engine rejected {format_gtp(move.coord)}: {reply}")

    def _analyze(self, move_no: int, color: Color) -> MoveAnalysis:
        reply = self._post({"command": "analyze", "color": color.value})
        entries = reply.get("suggestions")
        if not isinstance(entries, list):
            raise EngineReplyError(f"analyze reply lacks suggestions: {reply}")
        raw = []
        for entry in entries:
            try:
                raw.append(
                    Suggestion(parse_gtp(entry["vertex"]), int(entry["sn"]), float(entry["wr"]))
                )
            except (KeyError, TypeError, ValueError, CoordError) as exc:
                raise EngineReplyError(f"bad suggestion entry {entry!r}: {exc}") from exc
        return MoveAnalysis.from_raw(move_no, color, raw, board=self.board)

    def close(self) -> None:
        if self._owns_client:
            self._client.close()
