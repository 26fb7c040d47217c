"""Command-line front end: run one scenario, sweep placements, or rebuild
the reference average-fidelity tables.

Exit codes: 0 success, 2 configuration error, 3 numeric-domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .graphs import Graph, build_butterfly, build_path, read_edge_list
from .noise import NoiseDomainError, NoiseSpec
from .runner import (
    ConfigError,
    ScenarioConfig,
    evaluate_reference_tables,
    export,
    export_sweep,
    run_scenario,
    sweep_placements,
)
from .walk import WalkOperator

# Canonical channel parameters used when a family is selected without
# explicit values; the same settings drive the bundled reference curves.
DEFAULT_NOISE_PARAMS = {
    "rtn": {"a": 0.1, "gamma": 0.01},
    "oun": {"lam": 1.0, "gamma": 0.05},
    "nmad": {"g": 0.001, "gamma": 5.0},
}

# CLI flag destinations and the matching flat scenario-file keys.
_SCENARIO_KEYS = {
    "seed_path": "seed_path", "wings": "wings", "graph_file": "graph_file",
    "sender": "sender", "receiver": "receiver", "steps": "steps",
    "noise": "noise", "rtn_a": "rtn.a", "rtn_gamma": "rtn.gamma",
    "oun_lambda": "oun.lambda", "oun_gamma": "oun.gamma",
    "nmad_g": "nmad.g", "nmad_gamma": "nmad.gamma",
    "receiver_convention": "receiver_convention", "noise_mode": "noise_mode",
    "peak_threshold": "peak_threshold", "out_csv": "out_csv", "out_json": "out_json",
}

_DEFAULTS = {
    "wings": 0, "steps": 200, "noise": "none",
    "receiver_convention": "outgoing", "noise_mode": "snapshot",
    "peak_threshold": 0.8,
}


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed-path", type=int, metavar="N",
                   help="build the walk graph as a butterfly grown from the N-vertex path")
    p.add_argument("--wings", type=int, metavar="K",
                   help="number of wings to attach to the seed (default 0)")
    p.add_argument("--graph-file", metavar="PATH",
                   help="read the walk graph from an edge-list file instead")


def _add_noise_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--noise", choices=("none", "rtn", "oun", "nmad"),
                   help="noise channel family (default none)")
    p.add_argument("--rtn-a", type=float, metavar="A", help="telegraph coupling strength (default 0.1)")
    p.add_argument("--rtn-gamma", type=float, metavar="G", help="telegraph fluctuation rate (default 0.01)")
    p.add_argument("--oun-lambda", type=float, metavar="L", help="Ornstein-Uhlenbeck relaxation parameter (default 1)")
    p.add_argument("--oun-gamma", type=float, metavar="G", help="Ornstein-Uhlenbeck noise bandwidth (default 0.05)")
    p.add_argument("--nmad-g", type=float, metavar="G", help="amplitude-damping spectral width (default 0.001)")
    p.add_argument("--nmad-gamma", type=float, metavar="G", help="amplitude-damping emission rate (default 5)")
    p.add_argument("--noise-mode", choices=("snapshot", "stepwise"),
                   help="snapshot (default): channel at time t acts on the clean state at t; "
                        "stepwise: channel compounds after every step (comparison only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwbutterfly",
        description="Coined quantum walks on butterfly graphs: state-transfer "
                    "fidelity and coherence, with and without non-Markovian noise.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a single sender/receiver scenario")
    run.add_argument("--scenario", metavar="PATH",
                     help="JSON scenario file with flat keys matching the flags "
                          "(flags override file fields)")
    _add_graph_args(run)
    run.add_argument("--sender", type=int, metavar="S")
    run.add_argument("--receiver", type=int, metavar="R")
    run.add_argument("--steps", type=int, metavar="T", help="walk horizon (default 200)")
    _add_noise_args(run)
    run.add_argument("--receiver-convention", choices=("incoming", "outgoing"),
                     help="arc orientation of the receiver state (default outgoing, "
                          "which reproduces the reference tables)")
    run.add_argument("--peak-threshold", type=float, metavar="X",
                     help="fidelity level counted as a peak (default 0.8)")
    run.add_argument("--out-csv", metavar="PATH", help="write the per-step series here")
    run.add_argument("--out-json", metavar="PATH", help="write the run summary here")
    run.add_argument("--dump-operators", action="store_true",
                     help="print the coin, shift and evolution matrices")

    sweep = sub.add_parser("sweep", help="rank every ordered sender/receiver pair")
    _add_graph_args(sweep)
    sweep.add_argument("--steps", type=int, metavar="T")
    _add_noise_args(sweep)
    sweep.add_argument("--receiver-convention", choices=("incoming", "outgoing"))
    sweep.add_argument("--peak-threshold", type=float, metavar="X")
    sweep.add_argument("--out-json", metavar="PATH", help="write the ranked summaries here")

    tables = sub.add_parser("tables", help="recompute the reference average-fidelity tables")
    tables.add_argument("--steps", type=int, default=200, metavar="T")
    tables.add_argument("--receiver-convention", choices=("incoming", "outgoing"),
                        default="outgoing")
    return parser


def _load_scenario_file(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"scenario: cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"scenario: {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"scenario: {path} must hold a JSON object")
    known = set(_SCENARIO_KEYS.values())
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"scenario: unknown field(s) {', '.join(unknown)} in {path}")
    return raw


def _resolve(args: argparse.Namespace, scenario: dict) -> dict:
    """Merge CLI flags over scenario-file fields over hard defaults."""
    merged = {}
    for dest, key in _SCENARIO_KEYS.items():
        value = getattr(args, dest, None)
        if value is None:
            value = scenario.get(key)
        if value is None:
            value = _DEFAULTS.get(dest)
        merged[dest] = value
    return merged


def _build_graph(opts: dict) -> Graph:
    if opts.get("graph_file") is not None:
        if opts.get("seed_path") is not None:
            raise ConfigError("graph: give either --graph-file or --seed-path, not both")
        try:
            return read_edge_list(opts["graph_file"])
        except OSError as exc:
            raise ConfigError(f"graph-file: {exc}") from exc
        except ValueError as exc:
            raise ConfigError(f"graph-file: {exc}") from exc
    if opts.get("seed_path") is None:
        raise ConfigError("graph: one of --seed-path or --graph-file is required")
    try:
        return build_butterfly(build_path(opts["seed_path"]), int(opts["wings"]))
    except ValueError as exc:
        raise ConfigError(f"graph: {exc}") from exc


def _build_noise(opts: dict) -> NoiseSpec:
    family = opts["noise"]
    if family == "none":
        return NoiseSpec.none()
    params = dict(DEFAULT_NOISE_PARAMS[family])
    overrides = {
        "rtn": {"a": "rtn_a", "gamma": "rtn_gamma"},
        "oun": {"lam": "oun_lambda", "gamma": "oun_gamma"},
        "nmad": {"g": "nmad_g", "gamma": "nmad_gamma"},
    }[family]
    for name, dest in overrides.items():
        if opts.get(dest) is not None:
            params[name] = float(opts[dest])
    try:
        return NoiseSpec(family=family, **params)
    except ValueError as exc:
        raise ConfigError(f"noise: {exc}") from exc


def _format_entry(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _dump_operators(walk: WalkOperator, out) -> None:
    for name, mat in (("coin", walk.coin), ("shift", walk.shift),
                      ("evolution", walk.evolution)):
        print(f"# {name} {mat.shape[0]}x{mat.shape[1]}", file=out)
        for row in mat:
            print(" ".join(_format_entry(z) for z in row), file=out)


def _print_summary(summary, out) -> None:
    print(f"average fidelity  {summary.average_fidelity:.6f}", file=out)
    print(f"max fidelity      {summary.max_fidelity:.6f} at t={summary.argmax_t} (earliest)",
          file=out)
    peaks = ", ".join(str(t) for t in summary.peak_times) or "none"
    print(f"peaks >= {summary.peak_threshold:g}      t = {peaks}", file=out)


def _cmd_run(args: argparse.Namespace, out) -> int:
    scenario = _load_scenario_file(args.scenario) if args.scenario else {}
    opts = _resolve(args, scenario)
    graph = _build_graph(opts)
    for field in ("sender", "receiver"):
        if opts[field] is None:
            raise ConfigError(f"{field}: required (flag --{field} or scenario file)")
    cfg = ScenarioConfig(
        graph=graph, sender=int(opts["sender"]), receiver=int(opts["receiver"]),
        steps=int(opts["steps"]), noise=_build_noise(opts),
        receiver_convention=opts["receiver_convention"],
        noise_mode=opts["noise_mode"], peak_threshold=float(opts["peak_threshold"]))
    result = run_scenario(cfg)
    if args.dump_operators:
        _dump_operators(WalkOperator.assemble(graph, cfg.sender, cfg.receiver), out)
    print(f"graph: {graph.n} vertices, {graph.m} edges; "
          f"sender {cfg.sender} -> receiver {cfg.receiver}; steps {cfg.steps}; "
          f"noise {cfg.noise.family}", file=out)
    _print_summary(result.summary, out)
    export(result,
           csv_path=opts["out_csv"] if opts["out_csv"] else None,
           json_path=opts["out_json"] if opts["out_json"] else None)
    for label, path in (("series", opts["out_csv"]), ("summary", opts["out_json"])):
        if path:
            print(f"wrote {label} to {path}", file=out)
    return 0


def _cmd_sweep(args: argparse.Namespace, out) -> int:
    opts = _resolve(args, {})
    graph = _build_graph(opts)
    summaries = sweep_placements(
        graph, steps=int(opts["steps"]), noise=_build_noise(opts),
        receiver_convention=opts["receiver_convention"],
        noise_mode=opts["noise_mode"], peak_threshold=float(opts["peak_threshold"]))
    print(f"graph: {graph.n} vertices, {graph.m} edges; steps {opts['steps']}; "
          f"noise {opts['noise']}; {len(summaries)} ordered pairs", file=out)
    print("rank  s -> r   avg fidelity   max fidelity   at t", file=out)
    for i, s in enumerate(summaries, start=1):
        print(f"{i:4d}  {s.sender} -> {s.receiver}   {s.average_fidelity:12.6f}"
              f"   {s.max_fidelity:12.6f}   {s.argmax_t}", file=out)
    if opts["out_json"]:
        export_sweep(summaries, opts["out_json"])
        print(f"wrote summaries to {opts['out_json']}", file=out)
    return 0


def _cmd_tables(args: argparse.Namespace, out) -> int:
    results = evaluate_reference_tables(steps=args.steps,
                                        receiver_convention=args.receiver_convention)
    worst = 0.0
    for table, rows in results:
        print(f"== {table.label} (steps={args.steps}, "
              f"receiver convention {args.receiver_convention})", file=out)
        print("   s -> r    computed    reference   residual", file=out)
        for s, r, computed, expected, residual in rows:
            worst = max(worst, abs(residual))
            print(f"   {s} -> {r}   {computed:9.6f}   {expected:9.6f}   {residual:+.6f}",
                  file=out)
    print(f"worst |residual| = {worst:.6f}", file=out)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "run":
            return _cmd_run(args, out)
        if args.command == "sweep":
            return _cmd_sweep(args, out)
        return _cmd_tables(args, out)
    except NoiseDomainError as exc:
        print(f"numeric-domain error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
