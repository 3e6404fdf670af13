"""HTTP/JSON facade: stateless analysis plus play-against-the-engine
sessions for the web UI.

Sessions are in-memory with TTL eviction; engine replies are bundled
into the response that triggered them, so the protocol stays plain
request/response.  Heaps travel in the client's original order
everywhere; a ``canonical`` array is included for debugging.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .core import normalize
from .strategy import engine_move, violated_rule
from .wire import (
    analysis_to_json,
    apply_raw,
    move_from_json,
    move_to_canonical,
    move_to_json,
)
from .wythoff import wythoff_classify

DEFAULT_SESSION_TTL = 3600.0


class Session:
    def __init__(self, sid: str, heaps: list[int], engine_side: str):
        self.id = sid
        self.k = len(heaps)
        self.heaps = list(heaps)
        self.engine_side = engine_side  # "first" | "second"
        self.history: list[dict[str, Any]] = []
        self.lock = threading.Lock()
        self.last_touch = time.monotonic()

    @property
    def finished(self) -> bool:
        return not any(self.heaps)

    def mover_at(self, turn: int) -> str:
        first = "engine" if self.engine_side == "first" else "human"
        second = "human" if first == "engine" else "engine"
        return first if turn % 2 == 0 else second

    @property
    def to_move(self) -> str | None:
        return None if self.finished else self.mover_at(len(self.history))

    @property
    def winner(self) -> str | None:
        if not self.finished:
            return None
        return self.history[-1]["mover"] if self.history else None

    def record(self, mover: str, move_json: dict) -> None:
        self.heaps = apply_raw(self.heaps, move_from_json(move_json, self.k))
        self.history.append(
            {"mover": mover, "move": move_json, "heaps": list(self.heaps)}
        )

    def play_engine_turns(self) -> None:
        """Let the engine move whenever it is its turn."""
        while not self.finished and self.to_move == "engine":
            position, perm = normalize(self.heaps)
            move, _ = engine_move(position)
            self.record("engine", move_to_json(move, perm))

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "k": self.k,
            "heaps": list(self.heaps),
            "canonical": sorted(self.heaps),
            "engine_side": self.engine_side,
            "status": "finished" if self.finished else "in-progress",
            "winner": self.winner,
            "to_move": self.to_move,
            "turn": len(self.history),
            "history": list(self.history),
        }


class SessionStore:
    def __init__(self, ttl: float):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _sweep(self) -> None:
        now = time.monotonic()
        expired = [
            sid
            for sid, session in self._sessions.items()
            if now - session.last_touch > self.ttl
        ]
        for sid in expired:
            del self._sessions[sid]

    def create(self, heaps: list[int], engine_side: str) -> Session:
        with self._lock:
            self._sweep()
            sid = secrets.token_urlsafe(9)
            session = Session(sid, heaps, engine_side)
            self._sessions[sid] = session
            return session

    def get(self, sid: str) -> Session | None:
        with self._lock:
            self._sweep()
            session = self._sessions.get(sid)
            if session is not None:
                session.last_touch = time.monotonic()
            return session


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


async def _json_body(request: Request) -> Any:
    try:
        return json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError):
        return None


def _parse_heaps(body: Any) -> tuple[list[int] | None, JSONResponse | None]:
    """Validate {k, heaps}; returns (heaps, None) or (None, error response)."""
    if not isinstance(body, dict):
        return None, _error(400, "request body must be a JSON object")
    heaps = body.get("heaps")
    if not isinstance(heaps, list) or any(
        not isinstance(h, int) or isinstance(h, bool) or h < 0 for h in heaps
    ):
        return None, _error(400, "'heaps' must be a list of nonnegative integers")
    k = body.get("k", len(heaps))
    if not isinstance(k, int) or isinstance(k, bool):
        return None, _error(400, "'k' must be an integer")
    if k != len(heaps):
        return None, _error(400, f"'heaps' must have length k={k}")
    if k < 3:
        return None, _error(
            422,
            "this game needs k >= 3 heaps; use POST /wythoff/analyze for "
            "the two-heap game",
        )
    return heaps, None


def create_app(
    session_ttl: float = DEFAULT_SESSION_TTL, assets_dir: str | None = None
) -> FastAPI:
    app = FastAPI(title="triheap", version="0.1.0", docs_url=None, redoc_url=None)
    store = SessionStore(ttl=session_ttl)
    app.state.sessions = store

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.post("/analyze")
    async def analyze_position(request: Request):
        body = await _json_body(request)
        heaps, err = _parse_heaps(body)
        if err is not None:
            return err
        try:
            return analysis_to_json(heaps)
        except OverflowError as exc:
            return _error(400, str(exc))

    @app.post("/wythoff/analyze")
    async def analyze_wythoff(request: Request):
        body = await _json_body(request)
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        heaps = body.get("heaps")
        if (
            not isinstance(heaps, list)
            or len(heaps) != 2
            or any(not isinstance(h, int) or isinstance(h, bool) or h < 0 for h in heaps)
        ):
            return _error(400, "'heaps' must be a list of two nonnegative integers")
        x, y = heaps
        verdict = wythoff_classify(x, y)
        return {
            "verdict": verdict,
            "heaps": [x, y],
            "pair_index": abs(y - x) if verdict == "P" else None,
        }

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await _json_body(request)
        heaps, err = _parse_heaps(body)
        if err is not None:
            return err
        engine_side = body.get("engine_side", "second")
        if engine_side not in ("first", "second"):
            return _error(400, "'engine_side' must be 'first' or 'second'")
        if not any(heaps):
            return _error(422, "cannot start a finished game (all heaps empty)")
        session = store.create(heaps, engine_side)
        with session.lock:
            session.play_engine_turns()
            return session.to_json()

    @app.get("/sessions/{sid}")
    async def get_session(sid: str):
        session = store.get(sid)
        if session is None:
            return _error(404, "unknown or expired session")
        with session.lock:
            return session.to_json()

    @app.post("/sessions/{sid}/move")
    async def play_move(sid: str, request: Request):
        session = store.get(sid)
        if session is None:
            return _error(404, "unknown or expired session")
        body = await _json_body(request)
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        with session.lock:
            if session.finished:
                return _error(409, "the game is finished")
            if session.to_move != "human":
                return _error(409, "not your turn")
            turn = body.get("turn")
            if turn is not None and turn != len(session.history):
                return _error(
                    409, f"stale turn {turn}; the session is at turn "
                    f"{len(session.history)}"
                )
            try:
                move = move_from_json(body.get("move"), session.k)
            except ValueError as exc:
                return _error(400, str(exc))
            position, perm = normalize(session.heaps)
            rule = violated_rule(position, move_to_canonical(move, perm))
            if rule is not None:
                return _error(422, rule)
            session.record("human", move_to_json(move))
            session.play_engine_turns()
            return session.to_json()

    if assets_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=assets_dir, html=True), name="ui")

    return app
