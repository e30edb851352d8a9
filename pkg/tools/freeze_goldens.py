#!/usr/bin/env python3
"""Record the frozen test fixtures: the 120-move synthetic game, its
commentary golden, and the seed-42 opening analysis golden.

Run from the repository root:
    python3 tools/freeze_goldens.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from conftest import stub_selfplay_record, write_sgf  # noqa: E402

from goassess.engines import EngineConfig, open_session  # noqa: E402
from goassess.goban import format_gtp  # noqa: E402
from goassess.replay import replay_record  # noqa: E402

DATA = ROOT / "tests" / "data"


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    record = stub_selfplay_record(42, 120, result="W+R")
    write_sgf(record, DATA / "synthetic_120.sgf")
    report = replay_record(record, EngineConfig(kind="stub", seed=42), "FML-2", "synthetic_120")
    (DATA / "synthetic_120.commentary.txt").write_text(report.commentary_text + "\n")
    print(f"synthetic_120: {len(report.cgs_series)} records, "
          f"m1={report.method1.verdict}/{report.method1.correct} "
          f"m2={report.method2.verdict}/{report.method2.correct}")

    session = open_session(EngineConfig(kind="stub", seed=42))
    analysis = session.request_analysis()
    golden = [
        {"vertex": format_gtp(s.coord), "sn": s.sn, "wr": s.wr}
        for s in analysis.suggestions
    ]
    (DATA / "stub_opening_seed42.json").write_text(json.dumps(golden, indent=2) + "\n")
    print("opening analysis:", golden[0])


if __name__ == "__main__":
    main()
