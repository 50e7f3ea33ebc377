import dataclasses
import random

import numpy as np
import pytest
from scipy import stats

import oracles
from stratolink.link_budget import fso_budget
from stratolink.network import (HYBRID, CdfSeries, ChainResult, access_cdf, access_cdfs, access_rates,
                                chain_capacity, place_chain, plan_min_nodes, sample_disk,
                                scenario_chain_capacity, sweep_backhaul, trial_rng)
from stratolink.scenario import (AtmosphereTables, Band, Condition, LinkBudgetResult, NodeKind, Scenario, WeatherState,
                                 default_linkspec)

CLEAR = WeatherState(Condition.CLEAR)


def arcs(nodes):
    return [n.ground_arc_km for n in nodes if n.kind.is_haps]


def test_place_chain_examples():
    assert arcs(place_chain(800, 3)) == [20.0, 410.0, 800.0]
    one = place_chain(300, 1)
    assert len(one) == 2 and one[-1].kind is NodeKind.HAPS_ENDPOINT and one[-1].ground_arc_km == 300
    five = arcs(place_chain(400, 5))
    assert five[0] == 20.0
    assert np.allclose(np.diff(five), 95.0)
    assert all(n.altitude_km == 20.0 for n in place_chain(400, 5)[1:])
    with pytest.raises(ValueError):
        place_chain(400, 0)


def _hop(cap):
    return LinkBudgetResult(Band.FSO, 0.0, 0.0, cap, 1.0, 0.0, 0.0)


def test_bottleneck_identity():
    r = ChainResult(2, 100.0, (_hop(200e9), _hop(300e9)))
    assert r.end_to_end_bps == 200e9 and r.bottleneck_hop == 0


def test_single_hop_chain():
    chain = place_chain(30, 1)
    res = chain_capacity(chain, CLEAR, CLEAR)
    assert res.end_to_end_bps == fso_budget(chain[0], chain[1], default_linkspec(Band.FSO), CLEAR).capacity_bps


def test_800km_three_haps(default_scenario):
    res = scenario_chain_capacity(default_scenario, 800, 3)
    assert len(res.per_hop) == 3
    assert res.end_to_end_bps == min(h.capacity_bps for h in res.per_hop)
    # the 390 km inter-HAPS hops are the bottleneck; checked against the hand chain
    assert res.end_to_end_bps == pytest.approx(oracles.fso_hand(res.per_hop[1].path_length_km)["capacity"],
                                               rel=1e-9)
    assert 100e9 <= res.end_to_end_bps <= 400e9


def test_ground_hop_uses_central_weather(default_scenario):
    chain = place_chain(800, 3)
    foggy = WeatherState(Condition.FOG)
    assert chain_capacity(chain, foggy, CLEAR).per_hop[0].capacity_bps < \
        chain_capacity(chain, CLEAR, foggy).per_hop[0].capacity_bps
    # stratospheric inter-HAPS hops ignore disaster weather
    assert chain_capacity(chain, CLEAR, foggy).end_to_end_bps == chain_capacity(chain, CLEAR, CLEAR).end_to_end_bps


def test_grazing_hop_picks_up_nearer_region_weather():
    chain = place_chain(1700, 3)  # 840 km hops dip below 10 km
    tall = AtmosphereTables()
    tall.layers_km[Condition.RAIN] = (0.0, 8.0)
    rain = WeatherState(Condition.RAIN, tall)
    central_rain = chain_capacity(chain, rain, CLEAR)
    disaster_rain = chain_capacity(chain, CLEAR, rain)
    assert central_rain.per_hop[1].attenuation_dB > 0 and disaster_rain.per_hop[1].attenuation_dB == \
        chain_capacity(chain, CLEAR, CLEAR).per_hop[1].attenuation_dB
    assert disaster_rain.per_hop[2].attenuation_dB > chain_capacity(chain, CLEAR, CLEAR).per_hop[2].attenuation_dB


def test_sweep_order_and_shape(default_scenario):
    rows = sweep_backhaul(default_scenario)
    keys = [(r.n_haps, r.total_distance_km) for r in rows]
    assert keys == sorted(keys) and len(rows) == 20
    grid = {(r.n_haps, r.total_distance_km): r.end_to_end_bps for r in rows}
    for n in default_scenario.sweep.node_counts:
        caps = [grid[n, d] for d in default_scenario.sweep.distances_km]
        assert all(a >= b for a, b in zip(caps, caps[1:]))
    for d in default_scenario.sweep.distances_km:
        caps = [grid[n, d] for n in default_scenario.sweep.node_counts]
        assert all(a <= b for a, b in zip(caps, caps[1:]))
    assert 225e9 <= max(grid.values()) <= 900e9


def test_sample_disk_basics():
    assert len(sample_disk(0, 50, 800, trial_rng(0, 0))) == 0
    a = sample_disk(100, 50, 800, trial_rng(7, 3))
    b = sample_disk(100, 50, 800, trial_rng(7, 3))
    assert np.array_equal(a.along_arc_km, b.along_arc_km) and np.array_equal(a.cross_km, b.cross_km)
    assert np.all(a.separation_from(800) <= 50 + 1e-12)


def test_sample_disk_uniform_chi2():
    n = 100_000
    d = sample_disk(n, 50.0, 0.0, trial_rng(123, 0)).separation_from(0.0)
    inner = int(np.sum(d <= 25.0))
    _, p = stats.chisquare([inner, n - inner], [n / 4, 3 * n / 4])
    assert p > 1e-3
    # angular uniformity too: quadrant counts
    disk = sample_disk(n, 50.0, 0.0, trial_rng(124, 0))
    q = np.histogram(np.arctan2(disk.cross_km, disk.along_arc_km), bins=4, range=(-np.pi, np.pi))[0]
    assert stats.chisquare(q).pvalue > 1e-3


def test_pinned_terminals_give_degenerate_cdf(default_scenario):
    s = dataclasses.replace(default_scenario, disaster_radius_km=0.0)
    cdf = access_cdf(s, Band.KA, NodeKind.VSAT, Condition.CLEAR, trials=5)
    assert np.unique(cdf.samples).size == 1


def test_ka_vsat_beats_s_handheld(default_scenario):
    ka = access_cdf(default_scenario, Band.KA, NodeKind.VSAT, Condition.CLEAR, trials=50, shared=False)
    s = access_cdf(default_scenario, Band.S, NodeKind.HANDHELD, Condition.CLEAR, trials=50, shared=False)
    assert ka.median > s.median


@pytest.mark.parametrize("cond", list(Condition))
def test_hybrid_cdf_is_rightmost(default_scenario, cond):
    series = access_cdfs(default_scenario, [Band.FSO, Band.THZ, HYBRID], NodeKind.TERRESTRIAL_BS, cond, trials=30)
    p = np.linspace(0.01, 1.0, 100)
    h = series[HYBRID].value_at(p)
    assert np.all(h >= series[Band.FSO].value_at(p))
    assert np.all(h >= series[Band.THZ].value_at(p))


def test_cdf_validity(default_scenario):
    for cdf in access_cdfs(default_scenario, [Band.S, Band.KA], NodeKind.VSAT, Condition.RAIN, trials=20).values():
        assert np.all(np.diff(cdf.samples) >= 0)
        assert np.all(np.diff(cdf.probabilities) >= 0)
        assert cdf.probabilities[0] > 0 and cdf.probabilities[-1] == 1.0
        assert cdf.metadata["trials"] == 20


def test_sharing_divides_by_active_users(default_scenario):
    per = access_rates(default_scenario, NodeKind.HANDHELD, Condition.CLEAR, [Band.S], trials=3, shared=False)
    shared = access_rates(default_scenario, NodeKind.HANDHELD, Condition.CLEAR, [Band.S], trials=3)
    assert np.allclose(shared[Band.S] * 1000, per[Band.S], rtol=1e-12)


def test_access_errors(default_scenario):
    with pytest.raises(ValueError):
        access_cdf(default_scenario, Band.S, NodeKind.HANDHELD, Condition.CLEAR, trials=0)
    empty = dataclasses.replace(default_scenario, populations={NodeKind.HANDHELD: 0})
    with pytest.raises(ValueError):
        access_cdf(empty, Band.S, NodeKind.HANDHELD, Condition.CLEAR, trials=1)


def test_seed_determinism_across_workers(default_scenario):
    args = (default_scenario, NodeKind.UAV, Condition.CLOUD, [Band.FSO, Band.THZ, HYBRID])
    serial = access_rates(*args, trials=40, seed=99, workers=1)
    pooled = access_rates(*args, trials=40, seed=99, workers=3)
    again = access_rates(*args, trials=40, seed=99, workers=1)
    other = access_rates(*args, trials=40, seed=100, workers=1)
    for b in serial:
        assert serial[b].tobytes() == pooled[b].tobytes() == again[b].tobytes()
    assert not np.array_equal(serial[Band.FSO], other[Band.FSO])


def test_uav_altitudes_in_range(default_scenario):
    from stratolink.network import terminal_altitudes
    h = terminal_altitudes(NodeKind.UAV, 10_000, trial_rng(1, 1), (0.1, 3.0))
    assert h.min() > 0.1 and h.max() <= 3.0


def test_median_rate_falls_with_radius(default_scenario):
    medians = []
    for radius in (5.0, 20.0, 50.0, 100.0):
        s = dataclasses.replace(default_scenario, disaster_radius_km=radius)
        medians.append(access_cdf(s, Band.KA, NodeKind.VSAT, Condition.CLEAR, trials=100, seed=5).median)
    assert all(a >= b for a, b in zip(medians, medians[1:]))


def test_planner_trivial_cases(default_scenario):
    assert plan_min_nodes(800, 0.0, 10, default_scenario).n_haps == 1
    res = plan_min_nodes(800, 1e15, 10, default_scenario)
    assert not res.feasible and res.n_haps is None


def _linear_scan(scenario, distance, target, n_max):
    clear = WeatherState(Condition.CLEAR)
    for n in range(1, n_max + 1):
        if chain_capacity(place_chain(distance, n), clear, clear).end_to_end_bps >= target:
            return n
    return None


def test_planner_matches_linear_scan(default_scenario):
    rnd = random.Random(2024)
    for _ in range(20):
        distance = rnd.uniform(50, 1200)
        target = rnd.uniform(0, 800e9)
        assert plan_min_nodes(distance, target, 12, default_scenario).n_haps == \
            _linear_scan(default_scenario, distance, target, 12)


def test_capacity_non_decreasing_in_nodes(default_scenario):
    for d in (100, 400, 800, 1200):
        caps = [scenario_chain_capacity(default_scenario, d, n).end_to_end_bps for n in range(1, 13)]
        assert all(a <= b for a, b in zip(caps, caps[1:]))
