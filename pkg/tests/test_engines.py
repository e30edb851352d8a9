"""Engine gateway: stub determinism, GTP wire bytes, HTTP wire schema."""

import json
import sys
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from goassess.engines import (
    EngineConfig,
    EngineConnectError,
    EngineRejectedMove,
    EngineReplyError,
    MoveAnalysis,
    Suggestion,
    open_session,
    stub_analyze,
)
from goassess.goban import BoardState, Color, Coord, Move, PASS, format_gtp, is_legal, parse_gtp

# A scripted GTP engine living in a subprocess: replies "= ..." to every
# command and serves a canned analysis, echoing everything it was sent to
# stderr-free stdout protocol only.
FAKE_GTP = r"""
import sys
analysis = "B1 12983 0.46114 H3 2811 0.42173 C1 1813 0.40786 G2 835 0.41851 F1 712 0.35764"
for line in sys.stdin:
    command = line.strip()
    if not command:
        continue
    if command.startswith("top_moves"):
        sys.stdout.write("= " + analysis + "\n\n")
    elif command == "quit":
        sys.stdout.write("=\n\n")
        sys.stdout.flush()
        break
    elif command.startswith("play") and "Z9" in command:
        sys.stdout.write("? illegal move\n\n")
    else:
        sys.stdout.write("=\n\n")
    sys.stdout.flush()
"""


def gtp_config(**kw):
    return EngineConfig(
        kind="gtp", command=(sys.executable, "-c", FAKE_GTP), timeout=10.0, **kw
    )


class TestStub:
    def test_deterministic(self):
        board = BoardState.empty()
        first = stub_analyze(42, board, 20000, 1)
        second = stub_analyze(42, board, 20000, 1)
        assert first == second

    def test_opening_matches_frozen_golden(self):
        from pathlib import Path

        golden = json.loads(
            (Path(__file__).parent / "data" / "stub_opening_seed42.json").read_text()
        )
        analysis = stub_analyze(42, BoardState.empty(), 20000, 1)
        emitted = [
            {"vertex": format_gtp(s.coord), "sn": s.sn, "wr": s.wr}
            for s in analysis.suggestions
        ]
        assert emitted == golden

    def test_midgame_suggestions_all_legal(self):
        from goassess.goban import legal_moves

        session = open_session(EngineConfig(kind="stub", seed=9))
        for number in range(1, 15):
            analysis = session.request_analysis()
            allowed = legal_moves(session.board, session.board.to_move)
            for suggestion in analysis.suggestions:
                assert suggestion.coord in allowed
            session.play_move(
                Move(session.board.to_move, analysis.suggestions[0].coord, number)
            )

    def test_five_distinct_legal_sorted(self):
        board = BoardState.empty()
        analysis = stub_analyze(42, board, 20000, 1)
        assert len(analysis.suggestions) == 5
        sns = [s.sn for s in analysis.suggestions]
        assert sns == sorted(sns, reverse=True)
        assert all(s.sn <= 20000 for s in analysis.suggestions)
        assert sum(sns) <= 20000
        coords = {s.coord for s in analysis.suggestions}
        assert len(coords) == 5
        for coord in coords:
            assert is_legal(board, coord, Color.BLACK)

    def test_wr_within_bounds(self):
        board = BoardState.empty()
        for seed in range(25):
            for s in stub_analyze(seed, board, 20000, 1).suggestions:
                assert 0.2 <= s.wr <= 0.8

    def test_sessions_with_same_seed_identical(self):
        a = open_session(EngineConfig(kind="stub", seed=42))
        b = open_session(EngineConfig(kind="stub", seed=42))
        stream_a, stream_b = [], []
        for number in range(1, 6):
            ana_a, ana_b = a.request_analysis(), b.request_analysis()
            stream_a.append(ana_a)
            stream_b.append(ana_b)
            move = Move(a.board.to_move, ana_a.suggestions[0].coord, number)
            a.play_move(move)
            b.play_move(move)
        assert stream_a == stream_b

    def test_rejects_illegal_then_unchanged(self):
        session = open_session(EngineConfig(kind="stub", seed=1))
        move = Move(Color.BLACK, Coord(3, 3), 1)
        session.play_move(move)
        before = session.board
        with pytest.raises(EngineRejectedMove):
            session.play_move(Move(Color.WHITE, Coord(3, 3), 2))  # occupied
        assert session.board == before
        assert session.move_no == 2

    def test_pass_only_position_suggests_pass(self):
        # White covers everything except two one-point eyes, so every
        # placement is suicide for Black and only PASS remains.
        from goassess.goban import BOARD_SIZE, legal_moves

        eyes = {Coord(0, 0), Coord(18, 18)}
        stones = [
            Coord(c, r)
            for r in range(BOARD_SIZE)
            for c in range(BOARD_SIZE)
            if Coord(c, r) not in eyes
        ]
        board = BoardState.empty().with_setup_stones(stones, Color.WHITE, Color.BLACK)
        assert legal_moves(board, Color.BLACK) == frozenset({PASS})
        analysis = stub_analyze(5, board, 1000, 1)
        assert len(analysis.suggestions) == 1
        assert analysis.suggestions[0].coord == PASS


class TestMoveAnalysisCleaning:
    def test_six_entries_truncated_to_five(self):
        raw = [Suggestion(Coord(i, 0), 1000 - i, 0.5) for i in range(6)]
        cleaned = MoveAnalysis.from_raw(1, Color.BLACK, raw)
        assert len(cleaned.suggestions) == 5
        assert cleaned.suggestions[0].sn == 1000

    def test_duplicates_dropped(self):
        raw = [
            Suggestion(Coord(0, 0), 900, 0.5),
            Suggestion(Coord(0, 0), 800, 0.4),
            Suggestion(Coord(1, 0), 700, 0.5),
        ]
        cleaned = MoveAnalysis.from_raw(1, Color.BLACK, raw)
        assert [s.sn for s in cleaned.suggestions] == [900, 700]

    def test_illegal_suggestions_dropped_with_board(self):
        board = BoardState.empty()
        board = board.with_setup_stones([Coord(0, 0)], Color.WHITE, Color.BLACK)
        raw = [Suggestion(Coord(0, 0), 900, 0.5), Suggestion(Coord(1, 1), 800, 0.5)]
        cleaned = MoveAnalysis.from_raw(1, Color.BLACK, raw, board=board)
        assert [s.coord for s in cleaned.suggestions] == [Coord(1, 1)]

    def test_nothing_usable_is_reply_error(self):
        board = BoardState.empty().with_setup_stones([Coord(0, 0)], Color.WHITE, Color.BLACK)
        with pytest.raises(EngineReplyError):
            MoveAnalysis.from_raw(1, Color.BLACK, [Suggestion(Coord(0, 0), 1, 0.5)], board)

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            MoveAnalysis(1, Color.BLACK, ())
        with pytest.raises(ValueError):
            MoveAnalysis(
                1, Color.BLACK,
                (Suggestion(Coord(0, 0), 1, 0.5), Suggestion(Coord(1, 0), 2, 0.5)),
            )


class TestGtp:
    def test_handshake_commands(self):
        session = open_session(gtp_config(komi=7.5))
        assert session.sent[:3] == ["boardsize 19\n", "clear_board\n", "komi 7.5\n"]
        session.close()

    def test_play_wire_bytes(self):
        session = open_session(gtp_config())
        session.play_move(Move(Color.BLACK, parse_gtp("Q16"), 1))
        session.play_move(Move(Color.WHITE, parse_gtp("F7"), 2))
        assert "play white F7\n" in session.sent
        session.close()

    def test_analysis_parsed(self):
        session = open_session(gtp_config())
        analysis = session.request_analysis()
        assert analysis.suggestions[0].coord == parse_gtp("B1")
        assert analysis.suggestions[0].sn == 12983
        assert analysis.suggestions[0].wr == 0.46114
        assert len(analysis.suggestions) == 5
        session.close()

    def test_spawn_failure(self):
        with pytest.raises(EngineConnectError):
            open_session(EngineConfig(kind="gtp", command=("/nonexistent/engine",)))


class _EngineHandler(BaseHTTPRequestHandler):
    requests_seen: list[dict] = []
    analysis = [
        {"vertex": "B1", "sn": 12983, "wr": 0.46114},
        {"vertex": "H3", "sn": 2811, "wr": 0.42173},
    ]

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        body = json.loads(self.rfile.read(length))
        type(self).requests_seen.append(body)
        if body["command"] == "play":
            payload = {"result": body["vertex"] != "Z1"}
        else:
            payload = {"suggestions": self.analysis}
        data = json.dumps(payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, *args):
        pass


@pytest.fixture
def http_engine():
    server = HTTPServer(("127.0.0.1", 0), _EngineHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    _EngineHandler.requests_seen = []
    yield f"http://127.0.0.1:{server.server_port}/engine"
    server.shutdown()


class TestHttp:
    def test_play_wire_schema(self, http_engine):
        session = open_session(EngineConfig(kind="http", endpoint=http_engine))
        session.play_move(Move(Color.BLACK, parse_gtp("Q16"), 1))
        session.play_move(Move(Color.WHITE, parse_gtp("F7"), 2))
        plays = [r for r in _EngineHandler.requests_seen if r["command"] == "play"]
        assert plays[-1] == {"command": "play", "color": "white", "vertex": "F7"}
        session.close()

    def test_analysis_schema(self, http_engine):
        session = open_session(EngineConfig(kind="http", endpoint=http_engine))
        analysis = session.request_analysis()
        assert analysis.suggestions[0].coord == parse_gtp("B1")
        assert analysis.suggestions[0].sn == 12983
        session.close()

    def test_unreachable_endpoint(self):
        config = EngineConfig(
            kind="http", endpoint="http://127.0.0.1:1/engine", timeout=0.5
        )
        with pytest.raises(EngineConnectError):
            open_session(config)

    def test_transport_failure_leaves_board_unchanged(self, http_engine, monkeypatch):
        session = open_session(EngineConfig(kind="http", endpoint=http_engine))
        session.play_move(Move(Color.BLACK, parse_gtp("Q16"), 1))
        before = session.board

        def broken(body):
            raise EngineReplyError("engine returned HTTP 500")

        monkeypatch.setattr(session, "_post", broken)
        with pytest.raises(EngineReplyError):
            session.play_move(Move(Color.WHITE, parse_gtp("F7"), 2))
        assert session.board == before  # state echo shows no advance
        assert session.move_no == 2
        session.close()
