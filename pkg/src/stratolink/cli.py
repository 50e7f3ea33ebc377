"""Command-line entry point: ``stratolink {backhaul,access,plan}``.

Exit codes: 0 success, 1 internal error, 2 usage or configuration error.
Outputs are computed in full before anything touches the output directory,
and each file lands via a temp-file rename.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import os
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

from .network import (HYBRID, CdfSeries, access_cdfs, default_terminal, default_workers,
                      plan_min_nodes, sweep_backhaul)
from .scenario import (SPEC_VERSION, U64_MAX, Band, Condition, ConfigError, NodeKind, Scenario,
                       dump_scenario, read_config, scenario_from_dict)

log = logging.getLogger("stratolink")

SEED_ENV = "STRATOLINK_SEED"
BAND_TOKENS = {"fso": Band.FSO, "thz": Band.THZ, "ka": Band.KA, "s": Band.S, HYBRID: HYBRID}
WEATHER_TOKENS = {c.value.lower(): c for c in Condition}
TERMINAL_TOKENS = {"handheld": NodeKind.HANDHELD, "vsat": NodeKind.VSAT,
                   "uav": NodeKind.UAV, "bs": NodeKind.TERRESTRIAL_BS}


class UsageError(Exception):
    pass


def _token_list(table: dict, what: str):
    def parse(text: str) -> list:
        out = []
        for tok in text.lower().split(","):
            tok = tok.strip()
            if tok not in table:
                raise argparse.ArgumentTypeError(
                    f"unknown {what} {tok!r} (valid: {', '.join(table)})")
            out.append(tok)
        return out
    return parse


def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v <= U64_MAX:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="scenario JSON file (built-in defaults if omitted)")
    common.add_argument("--out", help="output directory")
    common.add_argument("--seed", type=_u64, help=f"master RNG seed (overrides scenario and ${SEED_ENV})")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="stratolink", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("backhaul", parents=[common], help="end-to-end FSO chain capacity sweep")
    p.set_defaults(func=cmd_backhaul)

    p = sub.add_parser("access", parents=[common], help="Monte Carlo access/fronthaul rate CDFs")
    p.add_argument("--band", type=_token_list(BAND_TOKENS, "band"), default=["hybrid"],
                   help="comma list of fso|thz|ka|s|hybrid")
    p.add_argument("--weather", type=_token_list(WEATHER_TOKENS, "weather"), default=["clear"],
                   help="comma list of clear|cloud|fog|rain")
    p.add_argument("--terminal", type=_token_list(TERMINAL_TOKENS, "terminal"),
                   help="terminal kind (default: bs for fso/thz/hybrid, vsat for ka, handheld for s)")
    p.add_argument("--trials", type=_positive_int)
    p.add_argument("--per-link", action="store_true",
                   help="report Ka/S rates without sharing among active users")
    p.add_argument("--workers", type=_positive_int, default=None,
                   help="worker processes (default: all processors)")
    p.set_defaults(func=cmd_access)

    p = sub.add_parser("plan", parents=[common], help="minimal HAPS count for a target capacity")
    p.add_argument("--target-gbps", type=_nonneg_float, required=True)
    p.add_argument("--n-max", type=_positive_int, default=10)
    p.add_argument("--distance", type=_nonneg_float,
                   help="ground station to disaster distance in km (default: scenario disaster centre)")
    p.set_defaults(func=cmd_plan)
    return parser


# ---------------------------------------------------------------------------
# helpers

def resolve(args) -> tuple[Scenario, int, str]:
    """Scenario, effective seed, and the scenario content hash."""
    raw = read_config(args.scenario) if args.scenario else {}
    scenario = scenario_from_dict(raw)
    if args.seed is not None:
        seed = args.seed
    elif "rng_seed" in raw:
        seed = scenario.rng_seed
    elif os.environ.get(SEED_ENV):
        try:
            seed = _u64(os.environ[SEED_ENV])
        except argparse.ArgumentTypeError as exc:
            raise ConfigError(SEED_ENV, str(exc)) from None
    else:
        seed = 0
    digest = hashlib.sha256(dump_scenario(scenario).encode()).hexdigest()
    return scenario, seed, digest


def format_float(x: float) -> str:
    return repr(float(x))


def cdf_to_csv(series: CdfSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rate_bps", "cum_prob"])
    for x, p in zip(series.samples, series.probabilities):
        w.writerow([format_float(x), format_float(p)])
    return buf.getvalue()


def read_cdf_csv(path) -> CdfSeries:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return CdfSeries(np.array([float(r["rate_bps"]) for r in rows]),
                     np.array([float(r["cum_prob"]) for r in rows]))


def read_backhaul_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        return [{"distance_km": float(r["distance_km"]), "n_haps": int(r["n_haps"]),
                 "end_to_end_gbps": float(r["end_to_end_gbps"]),
                 "bottleneck_hop": int(r["bottleneck_hop"])} for r in csv.DictReader(fh)]


def write_outputs(out_dir: Path, files: dict[str, str]) -> list[str]:
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        fd, tmp = tempfile.mkstemp(dir=out_dir, prefix=f".{name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", newline="") as fh:
                fh.write(text)
            os.replace(tmp, out_dir / name)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
    return sorted(files)


def manifest(args, seed: int, digest: str, outputs: list[str], started: float) -> str:
    return json.dumps({
        "spec_version": SPEC_VERSION,
        "scenario_sha256": digest,
        "seed": seed,
        "command": [Path(sys.argv[0]).name] + list(args.argv),
        "outputs": outputs,
        "wall_clock_s": round(time.perf_counter() - started, 6),
    }, indent=2) + "\n"


def _emit(args, files: dict[str, str], seed: int, digest: str, started: float) -> None:
    if not args.out:
        raise UsageError("--out is required for this command")
    out = Path(args.out)
    names = sorted(files) + ["manifest.json"]
    files = dict(files, **{"manifest.json": manifest(args, seed, digest, names, started)})
    write_outputs(out, files)
    log.info("wrote %d files to %s", len(files), out)


# ---------------------------------------------------------------------------
# commands

def cmd_backhaul(args) -> int:
    started = time.perf_counter()
    if not args.out:
        raise UsageError("--out is required for this command")
    scenario, seed, digest = resolve(args)
    rows = sweep_backhaul(scenario)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["distance_km", "n_haps", "end_to_end_gbps", "bottleneck_hop"])
    for r in rows:
        w.writerow([format_float(r.total_distance_km), r.n_haps,
                    format_float(r.end_to_end_bps / 1e9), r.bottleneck_hop])
    _emit(args, {"backhaul.csv": buf.getvalue()}, seed, digest, started)
    return 0


def cmd_access(args) -> int:
    started = time.perf_counter()
    if not args.out:
        raise UsageError("--out is required for this command")
    scenario, seed, digest = resolve(args)
    trials = args.trials or scenario.trials
    workers = args.workers or default_workers()
    if args.terminal and len(args.terminal) != 1:
        raise UsageError("--terminal takes a single kind")

    groups: dict = {}
    for tok in dict.fromkeys(args.band):
        band = BAND_TOKENS[tok]
        members = [Band.FSO, Band.THZ, HYBRID] if band == HYBRID else [band]
        kind = TERMINAL_TOKENS[args.terminal[0]] if args.terminal else default_terminal(band)
        groups.setdefault(kind, [])
        groups[kind] += [m for m in members if m not in groups[kind]]

    token_of = {v: k for k, v in BAND_TOKENS.items()}
    files = {}
    for wtok in dict.fromkeys(args.weather):
        for kind, bands in groups.items():
            series = access_cdfs(scenario, bands, kind, WEATHER_TOKENS[wtok], trials=trials,
                                 seed=seed, shared=not args.per_link, workers=workers)
            for b, s in series.items():
                files[f"cdf_{token_of[b]}_{wtok}.csv"] = cdf_to_csv(s)
    _emit(args, files, seed, digest, started)
    return 0


def cmd_plan(args) -> int:
    started = time.perf_counter()
    scenario, seed, digest = resolve(args)
    distance = scenario.disaster_center_arc_km if args.distance is None else args.distance
    if not distance > 0:
        raise UsageError("distance must be > 0")
    result = plan_min_nodes(distance, args.target_gbps * 1e9, args.n_max, scenario)
    print(result.n_haps if result.feasible else "INFEASIBLE")
    if args.out:
        payload = json.dumps({
            "distance_km": distance, "target_gbps": args.target_gbps, "n_max": args.n_max,
            "feasible": result.feasible, "n_haps": result.n_haps,
            "capacity_gbps": result.capacity_bps / 1e9,
        }, indent=2) + "\n"
        _emit(args, {"plan.json": payload}, seed, digest, started)
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 2 on bad usage, 0 for --help
        return exc.code if isinstance(exc.code, int) else 2
    args.argv = argv
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"stratolink: configuration error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"stratolink: {exc}", file=sys.stderr)
        return 2
    except Exception:
        log.exception("internal error")
        return 1


if __name__ == "__main__":
    sys.exit(main())
