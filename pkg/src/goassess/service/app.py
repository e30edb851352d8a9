"""Streaming assessment service.

HTTP surface:
    POST /games                     create a session
    POST /games/{id}/moves          submit a move  {"color", "vertex"}
    POST /games/{id}/finish         finish         {"result"}
    GET  /games/{id}                state snapshot
    GET  /games/{id}/frames         frame history
    WS   /games/{id}/stream         frame/commentary/gap messages

Move handling is serialized per session; subscribers receive frames over
bounded queues and never block the writer. A subscriber that falls behind
has its queue flushed and receives a gap notice telling it to resync from
the snapshot endpoint.
"""

from __future__ import annotations

import asyncio
from pathlib import Path

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from pydantic import BaseModel, Field

from ..assess import FML_2
from ..engines import (
    EngineConfig,
    EngineError,
    EngineConnectError,
    EngineRejectedMove,
    EngineTimeoutError,
)
from ..goban import Color, Move
from ..goban.coords import CoordError, parse_gtp
from .sessions import GameSession, SessionError, SessionFinished

GAP_MESSAGE = {"type": "gap", "resync": True}


class EngineBody(BaseModel):
    kind: str = "stub"
    simulation_setting: int = 20000
    komi: float = 7.5
    seed: int = 0
    endpoint: str = ""
    command: list[str] = Field(default_factory=list)
    analysis_command: str = "top_moves"
    timeout: float = 10.0


class CreateBody(BaseModel):
    engine: EngineBody = Field(default_factory=EngineBody)
    fml_variant: str = FML_2


class MoveBody(BaseModel):
    color: str
    vertex: str


class FinishBody(BaseModel):
    result: str | None = None


class _SessionHandle:
    def __init__(self, session: GameSession, queue_size: int):
        self.session = session
        self.lock = asyncio.Lock()
        self.queue_size = queue_size
        self.subscribers: set[asyncio.Queue] = set()

    def broadcast(self, message: dict) -> None:
        for queue in self.subscribers:
            try:
                queue.put_nowait(message)
            except asyncio.QueueFull:
                while not queue.empty():
                    queue.get_nowait()
                queue.put_nowait(GAP_MESSAGE)


def create_app(data_dir: str | Path = "goassess-games", queue_size: int = 256) -> FastAPI:
    data_dir = Path(data_dir)
    app = FastAPI(title="goassess service")
    handles: dict[str, _SessionHandle] = {}

    def _handle(game_id: str) -> _SessionHandle:
        handle = handles.get(game_id)
        if handle is None:
            raise HTTPException(status_code=404, detail=f"no session {game_id}")
        return handle

    @app.post("/games", status_code=201)
    async def create_game(body: CreateBody):
        try:
            config = EngineConfig(
                kind=body.engine.kind,
                simulation_setting=body.engine.simulation_setting,
                komi=body.engine.komi,
                seed=body.engine.seed,
                endpoint=body.engine.endpoint,
                command=tuple(body.engine.command),
                analysis_command=body.engine.analysis_command,
                timeout=body.engine.timeout,
            )
            session = GameSession.create(config, body.fml_variant, data_dir)
        except (EngineConnectError, EngineTimeoutError) as exc:
            raise HTTPException(status_code=502, detail=str(exc))
        except (ValueError, SessionError, EngineError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        handles[session.id] = _SessionHandle(session, queue_size)
        return session.snapshot()

    @app.get("/games/{game_id}")
    async def get_game(game_id: str):
        return _handle(game_id).session.snapshot()

    @app.get("/games/{game_id}/frames")
    async def get_frames(game_id: str):
        session = _handle(game_id).session
        return {"frames": [frame.to_json() for frame in session.frames]}

    @app.post("/games/{game_id}/moves")
    async def submit_move(game_id: str, body: MoveBody):
        handle = _handle(game_id)
        async with handle.lock:
            session = handle.session
            try:
                color = Color(body.color.lower())
                coord = parse_gtp(body.vertex)
                move = Move(color, coord, session.move_no)
            except (ValueError, CoordError) as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            try:
                frame = session.submit(move)
            except SessionFinished as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            except EngineRejectedMove as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            except (EngineConnectError, EngineTimeoutError) as exc:
                raise HTTPException(status_code=502, detail=str(exc))
            message = frame.to_json()
            handle.broadcast(message)
            return message

    @app.post("/games/{game_id}/finish")
    async def finish_game(game_id: str, body: FinishBody):
        handle = _handle(game_id)
        async with handle.lock:
            try:
                payload = handle.session.finish(body.result)
            except SessionFinished as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            handle.broadcast(payload)
            return payload

    @app.websocket("/games/{game_id}/stream")
    async def stream(websocket: WebSocket, game_id: str):
        handle = handles.get(game_id)
        if handle is None:
            await websocket.close(code=4404)
            return
        await websocket.accept()
        queue: asyncio.Queue = asyncio.Queue(maxsize=handle.queue_size)
        handle.subscribers.add(queue)
        try:
            while True:
                message = await queue.get()
                await websocket.send_json(message)
        except WebSocketDisconnect:
            pass
        finally:
            handle.subscribers.discard(queue)

    return app
