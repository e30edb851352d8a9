#!/usr/bin/env python3
"""Record a real service conversation as a fixture for the frontend tests.

Drives a 30-move seeded stub game through the HTTP API and captures every
payload the browser client would see.

    python3 tools/record_frontend_fixture.py
"""

import json
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from conftest import stub_selfplay_record  # noqa: E402

from goassess.goban import format_gtp  # noqa: E402
from goassess.service import create_app  # noqa: E402

OUT = ROOT / "frontend" / "tests" / "fixtures" / "session30.json"


def main() -> None:
    record = stub_selfplay_record(42, 30)
    with tempfile.TemporaryDirectory() as tmp:
        app = create_app(data_dir=Path(tmp))
        with TestClient(app) as client:
            created = client.post(
                "/games", json={"engine": {"kind": "stub", "seed": 42}}
            ).json()
            game_id = created["id"]
            frames = []
            rejected = None
            for move in record.moves:
                response = client.post(
                    f"/games/{game_id}/moves",
                    json={"color": move.color.value, "vertex": format_gtp(move.coord)},
                )
                frames.append(response.json())
                if rejected is None:
                    # capture one rejection payload for the error-path test
                    bad = client.post(
                        f"/games/{game_id}/moves",
                        json={"color": move.color.value, "vertex": format_gtp(move.coord)},
                    )
                    rejected = {"status": bad.status_code, "body": bad.json()}
            mid_snapshot = client.get(f"/games/{game_id}").json()
            commentary = client.post(
                f"/games/{game_id}/finish", json={"result": "W+R"}
            ).json()
            final_snapshot = client.get(f"/games/{game_id}").json()
            history = client.get(f"/games/{game_id}/frames").json()

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(
        {
            "created": created,
            "frames": frames,
            "rejected": rejected,
            "mid_snapshot": mid_snapshot,
            "commentary": commentary,
            "final_snapshot": final_snapshot,
            "history": history,
        },
        indent=2,
    ) + "\n")
    print(f"wrote {OUT} ({len(frames)} frames)")


if __name__ == "__main__":
    main()
