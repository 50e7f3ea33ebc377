"""Backhaul capacity vs disaster distance for several HAPS counts (clear sky)."""
import argparse

from stratolink.network import sweep_backhaul
from stratolink.scenario import Scenario, load_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenario")
    ap.add_argument("--distances", default="100,200,300,400,500,600,700,800")
    ap.add_argument("--counts", default="3,4,5,6")
    args = ap.parse_args()
    scenario = load_scenario(args.scenario) if args.scenario else Scenario()
    distances = [float(x) for x in args.distances.split(",")]
    counts = [int(x) for x in args.counts.split(",")]
    rows = sweep_backhaul(scenario, distances, counts)
    grid = {(r.n_haps, r.total_distance_km): r.end_to_end_bps / 1e9 for r in rows}
    print("distance_km " + " ".join(f"{n:>4d} HAPS" for n in counts))
    for d in distances:
        print(f"{d:11.0f} " + " ".join(f"{grid[n, d]:9.1f}" for n in counts))


if __name__ == "__main__":
    main()
