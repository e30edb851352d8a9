"""Command-line interface.

    goassess replay <sgf> [--engine stub|gtp|http] [--seed N]
                    [--simulations N] [--fml 1|2] [--out DIR]
    goassess experiment <config.json> [--out DIR]
    goassess report <run-dir>
    goassess curves <report.json> --out DIR
    goassess serve [--host H] [--port P] [--data-dir DIR]

Exit codes: 0 success, 1 usage, 2 input error, 3 engine error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .assess import FML_1, FML_2
from .engines import EngineConfig, EngineError
from .goban import SgfError
from .replay import (
    ExperimentConfig,
    ExperimentResults,
    GameReport,
    RunResult,
    export_curves,
    replay_game,
    run_experiments,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_ENGINE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _engine_config(args: argparse.Namespace) -> EngineConfig:
    return EngineConfig(
        kind=args.engine,
        simulation_setting=args.simulations,
        seed=args.seed,
        endpoint=args.endpoint,
        command=tuple(args.command.split()) if args.command else (),
    )


def _write_report(report: GameReport, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / f"{report.game_id}.report.json").write_text(report.to_json())
    export_curves(report, out_dir / f"{report.game_id}.curves.csv")
    if report.commentary_text:
        (out_dir / f"{report.game_id}.commentary.txt").write_text(
            report.commentary_text + "\n"
        )


def _cmd_replay(args: argparse.Namespace) -> int:
    try:
        report = replay_game(
            args.sgf, _engine_config(args), FML_1 if args.fml == "1" else FML_2
        )
    except (OSError, SgfError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    if args.out:
        _write_report(report, Path(args.out))
    print(f"{report.game_id}: {len(report.features)} moves analyzed, "
          f"{len(report.cgs_series)} situation records"
          + (" (partial)" if report.partial else ""))
    print(f"method 1: {report.method1.verdict} correct={report.method1.correct}")
    print(f"method 2: {report.method2.verdict} correct={report.method2.correct}")
    if report.commentary_text:
        print(report.commentary_text)
    return EXIT_OK


def _player_analytics(results: ExperimentResults) -> list[dict]:
    """Per-player aggregates: mean profile-1 rate and per-rank match counts."""
    rows: dict[tuple[str, str], dict] = {}
    for run in results.runs:
        for report in run.reports:
            for color, color_key, rank_key in (("black", "PB", "BR"), ("white", "PW", "WR")):
                if color not in report.tmr:
                    continue
                meta = report.metadata
                name = meta.get(color_key, (f"{report.game_id}:{color}",))[0]
                rank = meta.get(rank_key, ("",))[0]
                row = rows.setdefault(
                    (name, rank),
                    {"player": name, "rank": rank, "games": 0, "tmr_sum": 0.0,
                     "matches": [0] * 5, "misses": 0},
                )
                row["games"] += 1
                row["tmr_sum"] += report.tmr[color][0]
                for f in report.features:
                    if f.color.value != color:
                        continue
                    if f.matched_rank is None:
                        row["misses"] += 1
                    else:
                        row["matches"][f.matched_rank - 1] += 1
    out = []
    for row in rows.values():
        out.append(
            {
                "player": row["player"],
                "rank": row["rank"],
                "games": row["games"],
                "mean_tmr1": row["tmr_sum"] / row["games"],
                **{f"rank{i + 1}": row["matches"][i] for i in range(5)},
                "miss": row["misses"],
            }
        )
    return sorted(out, key=lambda r: r["player"])


def _write_run_results(results: ExperimentResults, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = {
        "runs": [
            {
                "name": run.name,
                "fml_variant": run.fml_variant,
                "ogs_method": run.ogs_method,
                "accuracy": run.accuracy,
                "games": len(run.reports),
            }
            for run in results.runs
        ],
        "cross_table": results.cross_table(),
    }
    (out_dir / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    (out_dir / "cross_table.txt").write_text(results.render_cross_table() + "\n")
    for run in results.runs:
        run_dir = out_dir / run.name
        for report in run.reports:
            _write_report(report, run_dir)
    analytics = _player_analytics(results)
    if analytics:
        with (out_dir / "player_tmr.csv").open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=list(analytics[0]))
            writer.writeheader()
            writer.writerows(analytics)


def _cmd_experiment(args: argparse.Namespace) -> int:
    config_path = Path(args.config)
    try:
        config = ExperimentConfig.from_json(
            config_path.read_text(), base_dir=config_path.parent
        )
        for run in config.runs:
            for game in run.games:
                if not Path(game).exists():
                    raise FileNotFoundError(f"run {run.name!r}: missing game {game}")
    except (OSError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        results = run_experiments(config)
    except EngineError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except SgfError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        _write_run_results(results, Path(args.out))
    print(results.render_cross_table())
    return EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    summary_path = Path(args.run_dir) / "summary.json"
    try:
        summary = json.loads(summary_path.read_text())
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    table = summary["cross_table"]
    lines = [f"{'':8}{'Method 1':>12}{'Method 2':>12}"]
    for variant in (FML_1, FML_2):
        cells = []
        for method in ("1", "2"):
            value = table.get(variant, {}).get(method)
            cells.append(f"{value:.3f}" if value is not None else "-")
        lines.append(f"{variant:8}{cells[0]:>12}{cells[1]:>12}")
    print("\n".join(lines))
    for run in summary["runs"]:
        acc = f"{run['accuracy']:.3f}" if run["accuracy"] is not None else "-"
        print(f"{run['name']}: {run['fml_variant']} method {run['ogs_method']} "
              f"accuracy {acc} over {run['games']} games")
    return EXIT_OK


def _cmd_curves(args: argparse.Namespace) -> int:
    try:
        data = json.loads(Path(args.report).read_text())
    except (OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    destination = out_dir / f"{data['game_id']}.curves.csv"
    by_move = {r["move_no"]: r for r in data["cgs_series"]}
    with destination.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["move_no", "color", "sn", "wr", "tmr1", "tmr2", "tmr3", "cgs_crisp", "cgs_label"]
        )
        for f in data["features"]:
            record = by_move.get(f["move_no"])
            writer.writerow(
                [
                    f["move_no"], f["color"], f["sn"], repr(f["wr"]),
                    repr(f["tmr"][0]), repr(f["tmr"][1]), repr(f["tmr"][2]),
                    repr(record["crisp"]) if record else "",
                    record["label"] if record else "",
                ]
            )
    print(f"wrote {destination}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.data_dir), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="goassess", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    replay = sub.add_parser("replay", help="replay one SGF through the pipeline")
    replay.add_argument("sgf")
    replay.add_argument("--engine", choices=("stub", "gtp", "http"), default="stub")
    replay.add_argument("--seed", type=int, default=0)
    replay.add_argument("--simulations", type=int, default=20000)
    replay.add_argument("--fml", choices=("1", "2"), default="2")
    replay.add_argument("--endpoint", default="")
    replay.add_argument("--command", default="", help="gtp engine command line")
    replay.add_argument("--out", default="")
    replay.set_defaults(func=_cmd_replay)

    experiment = sub.add_parser("experiment", help="run a suite from a config file")
    experiment.add_argument("config")
    experiment.add_argument("--out", default="")
    experiment.set_defaults(func=_cmd_experiment)

    report = sub.add_parser("report", help="print the accuracy cross table of a run dir")
    report.add_argument("run_dir")
    report.set_defaults(func=_cmd_report)

    curves = sub.add_parser("curves", help="export per-move curves from a report")
    curves.add_argument("report")
    curves.add_argument("--out", required=True)
    curves.set_defaults(func=_cmd_curves)

    serve = sub.add_parser("serve", help="run the streaming assessment service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8572)
    serve.add_argument("--data-dir", default="goassess-games")
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
