"""FSO / THz / hybrid fronthaul rate quantiles per weather condition."""
import argparse

from stratolink.network import HYBRID, access_cdfs, default_workers
from stratolink.scenario import Band, Condition, NodeKind, Scenario, load_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenario")
    ap.add_argument("--terminal", default="TerrestrialBS", choices=["TerrestrialBS", "Uav"])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=default_workers())
    args = ap.parse_args()
    scenario = load_scenario(args.scenario) if args.scenario else Scenario()
    print(f"{'weather':8s} {'series':7s} {'p10':>10s} {'median':>10s} {'p90':>10s}  (Gbps)")
    for cond in Condition:
        series = access_cdfs(scenario, [Band.FSO, Band.THZ, HYBRID], NodeKind(args.terminal), cond,
                             trials=args.trials, workers=args.workers)
        for band, cdf in series.items():
            name = band if band == HYBRID else band.value
            q = [cdf.quantile(p) / 1e9 for p in (0.1, 0.5, 0.9)]
            print(f"{cond.value:8s} {name:7s} " + " ".join(f"{v:10.4g}" for v in q))


if __name__ == "__main__":
    main()
