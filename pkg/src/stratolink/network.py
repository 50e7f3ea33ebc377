"""HAPS chain backhaul, Monte Carlo access rates and the node-count planner."""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import geometry
from .atmosphere import attenuation_components
from .link_budget import fso_budget, fso_link, rf_link
from .scenario import (HAPS_ALTITUDE_KM, TERMINAL_ALTITUDE_KM, Band, Condition, LinkBudgetResult,
                       LinkSpec, Node, NodeKind, Scenario, WeatherState, default_linkspec)

FIRST_HAPS_OFFSET_KM = 20.0
HYBRID = "hybrid"
SHARED_BANDS = (Band.KA, Band.S)


# ---------------------------------------------------------------------------
# backhaul chain

def place_chain(total_distance_km: float, n_haps: int,
                first_offset_km: float = FIRST_HAPS_OFFSET_KM,
                altitude_km: float = HAPS_ALTITUDE_KM) -> list[Node]:
    """Ground station at arc 0 followed by ``n_haps`` HAPS, the last one at ``total_distance_km``.

    The first HAPS hovers close to the ground station (``first_offset_km`` or
    ``total / n_haps`` when that is shorter); the rest split the remaining
    distance evenly.
    """
    if n_haps < 1:
        raise ValueError("a chain needs at least one HAPS")
    if not total_distance_km > 0:
        raise ValueError("total distance must be > 0")
    nodes = [Node("gs", NodeKind.GROUND_STATION, 0.0, 0.0)]
    if n_haps == 1:
        arcs = [float(total_distance_km)]
    else:
        first = min(first_offset_km, total_distance_km / n_haps)
        step = (total_distance_km - first) / (n_haps - 1)
        arcs = [first + k * step for k in range(n_haps - 1)] + [float(total_distance_km)]
    for i, arc in enumerate(arcs):
        last = i == len(arcs) - 1
        kind = NodeKind.HAPS_ENDPOINT if last else NodeKind.HAPS_RELAY
        nodes.append(Node("endpoint" if last else f"haps{i + 1}", kind, arc, altitude_km))
    return nodes


@dataclass(frozen=True)
class ChainResult:
    n_haps: int
    total_distance_km: float
    per_hop: tuple[LinkBudgetResult, ...]

    @property
    def end_to_end_bps(self) -> float:
        return min(h.capacity_bps for h in self.per_hop)

    @property
    def bottleneck_hop(self) -> int:
        caps = [h.capacity_bps for h in self.per_hop]
        return caps.index(min(caps))


def chain_capacity(chain: Sequence[Node], weather_central: WeatherState,
                   weather_disaster: WeatherState, spec: LinkSpec | None = None) -> ChainResult:
    """Evaluate every FSO hop of ``chain``; the end-to-end rate is the bottleneck hop.

    The ground hop sees the central-region weather. Inter-HAPS hops only pick
    up attenuation if their ray dips below the weather ceiling, and then the
    weather of whichever region (central or disaster) their lowest point is
    nearer to applies.
    """
    spec = spec or default_linkspec(Band.FSO)
    if len(chain) < 2:
        raise ValueError("chain needs at least two nodes")
    far_arc = chain[-1].ground_arc_km
    hops = []
    for i, (a, b) in enumerate(zip(chain[:-1], chain[1:])):
        if i == 0:
            weather = weather_central
        else:
            mid = 0.5 * (a.ground_arc_km + b.ground_arc_km)
            weather = weather_central if mid < 0.5 * far_arc else weather_disaster
        hops.append(fso_budget(a, b, spec, weather))
    n_haps = sum(1 for n in chain if n.kind.is_haps)
    return ChainResult(n_haps, far_arc, tuple(hops))


def scenario_chain_capacity(scenario: Scenario, total_distance_km: float, n_haps: int,
                            weather_disaster: Condition | None = None) -> ChainResult:
    chain = place_chain(total_distance_km, n_haps)
    disaster = scenario.weather_disaster if weather_disaster is None else weather_disaster
    return chain_capacity(chain, scenario.weather(scenario.weather_central),
                          scenario.weather(disaster), scenario.link(Band.FSO))


def sweep_backhaul(scenario: Scenario, distances_km: Iterable[float] | None = None,
                   node_counts: Iterable[int] | None = None) -> list[ChainResult]:
    distances = list(scenario.sweep.distances_km if distances_km is None else distances_km)
    counts = list(scenario.sweep.node_counts if node_counts is None else node_counts)
    if not distances or not counts:
        raise ValueError("sweep axes must be non-empty")
    return [scenario_chain_capacity(scenario, d, n)
            for n in sorted(counts) for d in sorted(distances)]


@dataclass(frozen=True)
class PlanResult:
    n_haps: int | None
    capacity_bps: float

    @property
    def feasible(self) -> bool:
        return self.n_haps is not None


def _clear_capacity(scenario: Scenario, distance_km: float, n: int) -> float:
    clear = scenario.weather(Condition.CLEAR)
    return chain_capacity(place_chain(distance_km, n), clear, clear,
                          scenario.link(Band.FSO)).end_to_end_bps


def plan_min_nodes(total_distance_km: float, target_bps: float, n_max: int,
                   scenario: Scenario | None = None) -> PlanResult:
    """Smallest HAPS count whose clear-sky chain reaches ``target_bps``.

    Bisects on the (empirically monotone) capacity-vs-count curve, then checks
    the answer and its predecessor directly and falls back to a linear scan if
    the curve turned out not to be monotone there.
    """
    if target_bps < 0:
        raise ValueError("target must be >= 0")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    scenario = scenario or Scenario()
    cache: dict[int, float] = {}

    def cap(n: int) -> float:
        if n not in cache:
            cache[n] = _clear_capacity(scenario, total_distance_km, n)
        return cache[n]

    if cap(n_max) < target_bps:
        return PlanResult(None, cap(n_max))
    lo, hi = 1, n_max
    while lo < hi:
        mid = (lo + hi) // 2
        if cap(mid) >= target_bps:
            hi = mid
        else:
            lo = mid + 1
    if cap(lo) >= target_bps and (lo == 1 or cap(lo - 1) < target_bps):
        return PlanResult(lo, cap(lo))
    for n in range(1, n_max + 1):
        if cap(n) >= target_bps:
            return PlanResult(n, cap(n))
    return PlanResult(None, cap(n_max))


# ---------------------------------------------------------------------------
# Monte Carlo access

def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial, keyed on (master seed, trial index)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


@dataclass(frozen=True, eq=False)
class DiskSample:
    along_arc_km: np.ndarray
    cross_km: np.ndarray

    def __len__(self) -> int:
        return len(self.along_arc_km)

    def separation_from(self, arc_km: float) -> np.ndarray:
        """Ground distance to the sub-platform point of a node at ``arc_km`` on the chain line."""
        return np.hypot(self.along_arc_km - arc_km, self.cross_km)


def sample_disk(count: int, radius_km: float, center_arc_km: float,
                rng: np.random.Generator) -> DiskSample:
    """Uniform points in a disk centred on the chain line at ``center_arc_km``."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if radius_km < 0:
        raise ValueError("radius must be >= 0")
    r = radius_km * np.sqrt(rng.random(count))
    phi = 2.0 * np.pi * rng.random(count)
    return DiskSample(center_arc_km + r * np.cos(phi), r * np.sin(phi))


def terminal_altitudes(kind: NodeKind, count: int, rng: np.random.Generator,
                       uav_range_km: tuple[float, float]) -> np.ndarray:
    # always consume the draw so placements stay identical across terminal kinds
    u = rng.random(count)
    if kind is NodeKind.UAV:
        lo, hi = uav_range_km
        return hi - (hi - lo) * u  # (lo, hi]
    return np.full(count, TERMINAL_ALTITUDE_KM.get(kind, 0.0))


def active_users(scenario: Scenario, kind: NodeKind) -> int:
    pop = scenario.populations.get(kind, 0)
    return max(1, math.floor(pop * scenario.activity_factors.get(kind, 1.0)))


def _per_link_rates(sep, h_term, endpoint: Node, band: Band, spec: LinkSpec,
                    weather: WeatherState) -> np.ndarray:
    h_haps = endpoint.altitude_km
    dist = geometry.chord_km(sep, h_term, h_haps)
    blocked = geometry.min_ray_altitude_km(sep, h_term, h_haps) < -1e-9
    _, gas, wx = attenuation_components(sep, h_term, h_haps, band, weather)
    if band is Band.FSO:
        _, _, cap = fso_link(dist, gas + wx, spec)
    else:
        _, _, cap = rf_link(dist, gas + wx, spec)
    return np.where(blocked, 0.0, cap)


def _normalise_bands(bands) -> list:
    out = []
    for b in bands:
        out.append(HYBRID if b == HYBRID else Band(b))
    return out


def _run_trials(scenario: Scenario, kind: NodeKind, condition: Condition, bands: tuple,
                seed: int, trials: range, shared: bool) -> dict:
    weather = scenario.weather(condition)
    endpoint = scenario.endpoint
    n = min(scenario.populations.get(kind, 0), scenario.terminals_per_trial)
    seps, alts = [], []
    for t in trials:
        rng = trial_rng(seed, t)
        disk = sample_disk(n, scenario.disaster_radius_km, scenario.disaster_center_arc_km, rng)
        seps.append(disk.separation_from(endpoint.ground_arc_km))
        alts.append(terminal_altitudes(kind, n, rng, scenario.uav_altitude_km))
    sep = np.concatenate(seps) if seps else np.empty(0)
    h = np.concatenate(alts) if alts else np.empty(0)

    needed = set(b for b in bands if b != HYBRID)
    if HYBRID in bands:
        needed |= {Band.FSO, Band.THZ}
    rates = {}
    for band in needed:
        r = _per_link_rates(sep, h, endpoint, band, scenario.link(band), weather)
        if shared and band in SHARED_BANDS:
            r = r / active_users(scenario, kind)
        rates[band] = r
    if HYBRID in bands:
        rates[HYBRID] = np.maximum(rates[Band.FSO], rates[Band.THZ])
    return {b: rates[b] for b in bands}


def _chunks(trials: int, parts: int) -> list[range]:
    parts = max(1, min(parts, trials))
    bounds = np.linspace(0, trials, parts + 1).astype(int)
    return [range(bounds[i], bounds[i + 1]) for i in range(parts)]


def access_rates(scenario: Scenario, terminal_kind: NodeKind | str, weather: Condition | str,
                 bands: Sequence, trials: int | None = None, seed: int | None = None,
                 shared: bool = True, workers: int = 1) -> dict:
    """Pooled per-terminal rates (bps) for each requested band, on identical placements.

    ``bands`` may contain ``"hybrid"``, which is the per-terminal maximum of the
    FSO and THz rates. Ka- and S-band rates are divided among the active users
    when ``shared`` is set. Output does not depend on ``workers``.
    """
    kind = NodeKind(terminal_kind)
    condition = Condition(weather)
    bands = tuple(_normalise_bands(bands))
    trials = scenario.trials if trials is None else trials
    seed = scenario.rng_seed if seed is None else seed
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if scenario.populations.get(kind, 0) <= 0:
        raise ValueError(f"population of {kind.value} is zero")

    chunks = _chunks(trials, workers)
    if workers <= 1 or len(chunks) == 1:
        parts = [_run_trials(scenario, kind, condition, bands, seed, c, shared) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_trials, scenario, kind, condition, bands, seed, c, shared)
                       for c in chunks]
            parts = [f.result() for f in futures]
    return {b: np.concatenate([p[b] for p in parts]) for b in bands}


@dataclass(frozen=True, eq=False)
class CdfSeries:
    samples: np.ndarray
    probabilities: np.ndarray
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_samples(cls, values, **metadata) -> "CdfSeries":
        x = np.sort(np.asarray(values, dtype=float))
        p = np.arange(1, len(x) + 1, dtype=float) / len(x)
        return cls(x, p, dict(metadata))

    def quantile(self, q: float) -> float:
        return float(np.quantile(self.samples, q))

    @property
    def median(self) -> float:
        return float(np.median(self.samples))

    def value_at(self, p) -> np.ndarray:
        """Smallest sample whose cumulative probability reaches ``p``."""
        idx = np.searchsorted(self.probabilities, np.asarray(p) - 1e-12, side="left")
        return self.samples[np.minimum(idx, len(self.samples) - 1)]


def default_terminal(band) -> NodeKind:
    if band == HYBRID or band in (Band.FSO, Band.THZ):
        return NodeKind.TERRESTRIAL_BS
    return NodeKind.VSAT if Band(band) is Band.KA else NodeKind.HANDHELD


def access_cdfs(scenario: Scenario, bands: Sequence, terminal_kind: NodeKind | str,
                weather: Condition | str, trials: int | None = None, seed: int | None = None,
                shared: bool = True, workers: int = 1) -> dict:
    trials = scenario.trials if trials is None else trials
    seed = scenario.rng_seed if seed is None else seed
    rates = access_rates(scenario, terminal_kind, weather, bands, trials, seed, shared, workers)
    return {
        b: CdfSeries.from_samples(
            r, band=b if b == HYBRID else b.value, weather=Condition(weather).value,
            terminal=NodeKind(terminal_kind).value, trials=trials, seed=seed, shared=shared)
        for b, r in rates.items()
    }


def access_cdf(scenario: Scenario, band, terminal_kind: NodeKind | str | None = None,
               weather: Condition | str = Condition.CLEAR, trials: int | None = None,
               seed: int | None = None, shared: bool = True, workers: int = 1) -> CdfSeries:
    band = _normalise_bands([band])[0]
    kind = default_terminal(band) if terminal_kind is None else terminal_kind
    return access_cdfs(scenario, [band], kind, weather, trials, seed, shared, workers)[band]


def default_workers() -> int:
    return os.cpu_count() or 1
