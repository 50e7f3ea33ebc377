"""Direct-access rate quantiles: S-band handhelds and Ka-band VSATs, per link and shared."""
import argparse

from stratolink.network import access_cdf, default_workers
from stratolink.scenario import Band, NodeKind, Scenario, load_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenario")
    ap.add_argument("--weather", default="Clear")
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=default_workers())
    args = ap.parse_args()
    scenario = load_scenario(args.scenario) if args.scenario else Scenario()
    print(f"{'link':18s} {'min':>11s} {'median':>11s} {'max':>11s}  (Mbps)")
    for band, kind in ((Band.S, NodeKind.HANDHELD), (Band.KA, NodeKind.VSAT)):
        for shared in (False, True):
            cdf = access_cdf(scenario, band, kind, args.weather, trials=args.trials,
                             shared=shared, workers=args.workers)
            label = f"{band.value}/{'shared' if shared else 'per-link'}"
            vals = (cdf.samples[0], cdf.median, cdf.samples[-1])
            print(f"{label:18s} " + " ".join(f"{v / 1e6:11.4g}" for v in vals))


if __name__ == "__main__":
    main()
