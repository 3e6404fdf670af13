import threading

import pytest
from fastapi.testclient import TestClient

from triheap.service import create_app


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


class TestHealth:
    def test_ok(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestAnalyzeEndpoint:
    def test_p_position(self, client):
        response = client.post("/analyze", json={"k": 4, "heaps": [3, 3, 4, 4]})
        assert response.status_code == 200
        record = response.json()
        assert record["verdict"] == "P"
        assert record["class_index"] == 2
        assert record["winning_move"] is None

    def test_n_position_diagonal(self, client):
        response = client.post("/analyze", json={"k": 4, "heaps": [7, 7, 7, 8]})
        record = response.json()
        assert record["verdict"] == "N"
        assert record["winning_move"] == {"type": "diagonal", "t": 6}
        assert record["result"] == [1, 1, 1, 2]

    def test_move_in_request_order(self, client):
        response = client.post("/analyze", json={"k": 4, "heaps": [6, 3, 3, 3]})
        record = response.json()
        assert record["heaps"] == [6, 3, 3, 3]
        move = record["winning_move"]
        assert move == {"type": "subset", "amounts": [1, 0, 0, 0]}
        assert record["result"] == [5, 3, 3, 3]

    def test_k2_rejected_with_pointer(self, client):
        response = client.post("/analyze", json={"k": 2, "heaps": [1, 2]})
        assert response.status_code == 422
        assert "/wythoff/analyze" in response.json()["error"]

    def test_malformed_bodies(self, client):
        assert client.post("/analyze", content=b"not json").status_code == 400
        assert client.post("/analyze", json={"heaps": "nope"}).status_code == 400
        assert (
            client.post("/analyze", json={"k": 4, "heaps": [1, 2, 3]}).status_code
            == 400
        )
        assert (
            client.post("/analyze", json={"k": 3, "heaps": [1, -2, 3]}).status_code
            == 400
        )


class TestWythoffEndpoint:
    def test_p_pair(self, client):
        response = client.post("/wythoff/analyze", json={"heaps": [12, 20]})
        assert response.json() == {
            "verdict": "P",
            "heaps": [12, 20],
            "pair_index": 8,
        }

    def test_n_pair(self, client):
        response = client.post("/wythoff/analyze", json={"heaps": [12, 21]})
        assert response.json()["verdict"] == "N"

    def test_malformed(self, client):
        assert (
            client.post("/wythoff/analyze", json={"heaps": [1, 2, 3]}).status_code
            == 400
        )


class TestSessions:
    def test_engine_first_finishes_immediately_from_n_position(self, client):
        response = client.post(
            "/sessions", json={"k": 4, "heaps": [1, 1, 1, 1], "engine_side": "first"}
        )
        assert response.status_code == 200
        session = response.json()
        assert session["status"] == "finished"
        assert session["winner"] == "engine"
        assert session["heaps"] == [0, 0, 0, 0]
        assert session["history"][0]["mover"] == "engine"
        assert session["history"][0]["move"] == {"type": "diagonal", "t": 1}

    def test_get_roundtrip(self, client):
        created = client.post(
            "/sessions", json={"k": 3, "heaps": [2, 3, 4], "engine_side": "second"}
        ).json()
        fetched = client.get(f"/sessions/{created['id']}").json()
        assert fetched == created

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/nope").status_code == 404
        assert (
            client.post(
                "/sessions/nope/move", json={"move": {"type": "diagonal", "t": 1}}
            ).status_code
            == 404
        )

    def test_human_move_gets_engine_reply(self, client):
        session = client.post(
            "/sessions", json={"k": 4, "heaps": [7, 7, 7, 8], "engine_side": "second"}
        ).json()
        assert session["to_move"] == "human"
        # a deliberately weak human move; the engine must answer with a
        # move into a cold position
        response = client.post(
            f"/sessions/{session['id']}/move",
            json={"move": {"type": "subset", "amounts": [1, 0, 0, 0]}, "turn": 0},
        )
        assert response.status_code == 200
        updated = response.json()
        assert updated["turn"] == 2
        assert updated["history"][0]["mover"] == "human"
        assert updated["history"][1]["mover"] == "engine"
        from triheap import Position, is_p_position

        assert is_p_position(Position(tuple(sorted(updated["heaps"]))))

    def test_illegal_move_422_names_rule(self, client):
        session = client.post(
            "/sessions", json={"k": 4, "heaps": [1, 1, 1, 2], "engine_side": "second"}
        ).json()
        response = client.post(
            f"/sessions/{session['id']}/move",
            json={"move": {"type": "subset", "amounts": [1, 1, 1, 1]}},
        )
        assert response.status_code == 422
        assert "at most k-1 heaps" in response.json()["error"]

    def test_diagonal_bigger_than_smallest_heap_422(self, client):
        session = client.post(
            "/sessions", json={"k": 3, "heaps": [2, 5, 5], "engine_side": "second"}
        ).json()
        response = client.post(
            f"/sessions/{session['id']}/move",
            json={"move": {"type": "diagonal", "t": 3}},
        )
        assert response.status_code == 422
        assert "smallest heap" in response.json()["error"]

    def test_finished_session_rejects_moves(self, client):
        session = client.post(
            "/sessions", json={"k": 4, "heaps": [1, 1, 1, 1], "engine_side": "first"}
        ).json()
        response = client.post(
            f"/sessions/{session['id']}/move",
            json={"move": {"type": "diagonal", "t": 1}},
        )
        assert response.status_code == 409

    def test_stale_turn_409(self, client):
        session = client.post(
            "/sessions", json={"k": 3, "heaps": [3, 4, 5], "engine_side": "second"}
        ).json()
        ok = client.post(
            f"/sessions/{session['id']}/move",
            json={"move": {"type": "diagonal", "t": 1}, "turn": 0},
        )
        assert ok.status_code == 200
        stale = client.post(
            f"/sessions/{session['id']}/move",
            json={"move": {"type": "diagonal", "t": 1}, "turn": 0},
        )
        assert stale.status_code == 409

    def test_empty_start_rejected(self, client):
        response = client.post(
            "/sessions", json={"k": 3, "heaps": [0, 0, 0], "engine_side": "first"}
        )
        assert response.status_code == 422

    def test_engine_always_lands_cold_from_n_positions(self, client):
        # play a short scripted game; every engine reply from an
        # N-position must be a P-position
        from triheap import Position, is_p_position

        session = client.post(
            "/sessions", json={"k": 3, "heaps": [5, 7, 9], "engine_side": "second"}
        ).json()
        sid = session["id"]
        heaps = session["heaps"]
        turn = session["turn"]
        moves = [
            {"type": "subset", "amounts": [1, 0, 0]},
            {"type": "subset", "amounts": [0, 1, 0]},
            {"type": "diagonal", "t": 1},
        ]
        for move in moves:
            amounts = move.get("amounts")
            if move["type"] == "diagonal" and min(heaps) < move["t"]:
                break
            if amounts and any(a > h for a, h in zip(amounts, heaps)):
                break
            response = client.post(
                f"/sessions/{sid}/move", json={"move": move, "turn": turn}
            )
            assert response.status_code == 200
            session = response.json()
            heaps = session["heaps"]
            turn = session["turn"]
            if session["status"] == "finished":
                break
            engine_entries = [
                h for h in session["history"] if h["mover"] == "engine"
            ]
            last_engine_heaps = engine_entries[-1]["heaps"]
            assert is_p_position(Position(tuple(sorted(last_engine_heaps))))


class TestHistoryReplay:
    def test_history_replays_to_current_position(self, client):
        session = client.post(
            "/sessions", json={"k": 4, "heaps": [9, 4, 6, 5], "engine_side": "second"}
        ).json()
        sid = session["id"]
        for move in [
            {"type": "subset", "amounts": [2, 0, 0, 0]},
            {"type": "diagonal", "t": 1},
        ]:
            response = client.post(
                f"/sessions/{sid}/move",
                json={"move": move, "turn": client.get(f"/sessions/{sid}").json()["turn"]},
            )
            if response.status_code != 200:
                break
            session = response.json()
        heaps = [9, 4, 6, 5]
        for entry in session["history"]:
            move = entry["move"]
            if move["type"] == "diagonal":
                heaps = [h - move["t"] for h in heaps]
            else:
                heaps = [h - a for h, a in zip(heaps, move["amounts"])]
            assert heaps == entry["heaps"]
        assert heaps == session["heaps"]


class TestConcurrency:
    def test_concurrent_moves_one_wins(self, client):
        session = client.post(
            "/sessions", json={"k": 3, "heaps": [4, 5, 6], "engine_side": "second"}
        ).json()
        sid = session["id"]
        results = []

        def submit():
            response = client.post(
                f"/sessions/{sid}/move",
                json={"move": {"type": "diagonal", "t": 1}, "turn": 0},
            )
            results.append(response.status_code)

        threads = [threading.Thread(target=submit) for _ in range(2)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert sorted(results) == [200, 409]


class TestTtlEviction:
    def test_sessions_expire(self):
        import time

        with TestClient(create_app(session_ttl=0.05)) as client:
            session = client.post(
                "/sessions",
                json={"k": 3, "heaps": [1, 2, 3], "engine_side": "second"},
            ).json()
            assert client.get(f"/sessions/{session['id']}").status_code == 200
            time.sleep(0.15)
            assert client.get(f"/sessions/{session['id']}").status_code == 404


class TestStaticAssets:
    def test_assets_mounted(self, tmp_path):
        (tmp_path / "index.html").write_text("<!doctype html><title>ui</title>")
        with TestClient(create_app(assets_dir=str(tmp_path))) as client:
            response = client.get("/")
            assert response.status_code == 200
            assert "ui" in response.text
            # API endpoints still take precedence
            assert client.get("/health").json() == {"status": "ok"}
