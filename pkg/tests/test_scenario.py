import dataclasses
import json

import pytest
from hypothesis import given, settings, strategies as st

from stratolink.scenario import (Band, Condition, ConfigError, LinkSpec, Node, NodeKind, Scenario,
                                 default_linkspec, dump_scenario, load_scenario, scenario_from_dict,
                                 scenario_to_dict, validate_scenario)


def test_fso_defaults_match_table():
    fso = default_linkspec(Band.FSO)
    assert fso.wavelength_nm == 1550
    assert fso.tx_power_dBm == 17.5
    assert fso.tx_efficiency == fso.rx_efficiency == 0.8
    assert fso.rx_telescope_diameter_m == 0.08
    assert fso.pointing_error_tx_urad == fso.pointing_error_rx_urad == 1.0
    assert fso.full_divergence_urad == 15.0
    assert (fso.responsivity_A_per_W, fso.noise_current_density_A_per_sqrtHz, fso.bandwidth_Hz) == (0.8, 1e-11, 50e9)


@pytest.mark.parametrize("band, f, p, bw, gt, gr", [
    (Band.THZ, 144.0, 17.5, 30e9, 55.0, 55.0),
    (Band.KA, 30.0, 43.2, 400e6, 13.8, 39.7),
    (Band.S, 2.4, 43.2, 100e6, 13.8, 0.0),
])
def test_rf_defaults_match_table(band, f, p, bw, gt, gr):
    spec = default_linkspec(band)
    assert (spec.carrier_GHz, spec.tx_power_dBm, spec.bandwidth_Hz) == (f, p, bw)
    assert (spec.tx_gain_dBi, spec.rx_gain_dBi) == (gt, gr)
    assert spec.noise_psd_dBm_per_Hz == -174.0


def test_every_band_constructs():
    for band in Band:
        spec = default_linkspec(band)
        assert all(getattr(spec, f.name) is not None for f in dataclasses.fields(LinkSpec))


def test_empty_config_gives_defaults(write_config):
    s = load_scenario(write_config({}))
    assert s == Scenario()
    assert s.disaster_radius_km == 50.0
    assert s.rng_seed == 0
    assert [n.ground_arc_km for n in s.chain] == [0.0, 20.0, 410.0, 800.0]
    assert all(n.altitude_km == 20.0 for n in s.chain if n.kind.is_haps)


def test_single_field_override(write_config):
    s = load_scenario(write_config({"spec_version": 1, "links": {"KaBand": {"tx_power_dBm": 40}}}))
    expected = Scenario()
    links = dict(expected.links)
    links[Band.KA] = dataclasses.replace(links[Band.KA], tx_power_dBm=40.0)
    assert s == dataclasses.replace(expected, links=links)


@pytest.mark.parametrize("config, key", [
    ({"disaster_radius_km": -5}, "disaster_radius_km"),
    ({"trials": 0}, "trials"),
    ({"populations": {"HandheldUser": -1}}, "populations.HandheldUser"),
    ({"bogus": 1}, "bogus"),
    ({"links": {"Fso": {"tx_powr_dBm": 1}}}, "links.Fso.tx_powr_dBm"),
    ({"links": {"Lband": {}}}, "links.Lband"),
    ({"atmosphere": {"weather_ceiling_km": 25}}, "atmosphere.weather_ceiling_km"),
    ({"atmosphere": {"specific_attenuation_dB_per_km": {"Fso": {"Rain": -1}}}},
     "atmosphere.specific_attenuation_dB_per_km.Fso.Rain"),
    ({"spec_version": 2}, "spec_version"),
    ({"weather_disaster": "Snow"}, "weather_disaster"),
    ({"links": {"Fso": {"tx_efficiency": 1.5}}}, "links.Fso.tx_efficiency"),
])
def test_validation_names_offending_key(write_config, config, key):
    with pytest.raises(ConfigError) as err:
        load_scenario(write_config(config))
    assert err.value.key == key
    assert key in str(err.value)


def test_non_increasing_arcs_rejected(write_config):
    chain = [
        {"kind": "GroundStation", "ground_arc_km": 0, "altitude_km": 0},
        {"kind": "HapsRelay", "ground_arc_km": 300},
        {"kind": "HapsEndpoint", "ground_arc_km": 300},
    ]
    with pytest.raises(ConfigError) as err:
        load_scenario(write_config({"chain": chain}))
    assert err.value.key == "chain[2].ground_arc_km"


def test_missing_and_malformed_files(tmp_path, write_config):
    with pytest.raises(ConfigError, match="not found"):
        load_scenario(tmp_path / "absent.json")
    with pytest.raises(ConfigError, match="malformed"):
        load_scenario(write_config("{not json"))


def test_round_trip_default(write_config):
    s = Scenario()
    assert load_scenario(write_config(dump_scenario(s))) == s


config_strategy = st.fixed_dictionaries({}, optional={
    "disaster_radius_km": st.floats(-10, 200),
    "disaster_center_arc_km": st.floats(-10, 1000),
    "trials": st.integers(-2, 5000),
    "terminals_per_trial": st.integers(-1, 500),
    "rng_seed": st.integers(-5, 2**64 + 5),
    "populations": st.dictionaries(st.sampled_from([k.value for k in NodeKind]), st.integers(-3, 10**6)),
    "activity_factors": st.dictionaries(st.sampled_from(["HandheldUser", "VsatTerminal"]),
                                        st.floats(-0.5, 1.5)),
    "weather_disaster": st.sampled_from(["Clear", "Cloud", "Fog", "Rain", "Hail"]),
    "uav_altitude_km": st.lists(st.floats(-1, 12), min_size=2, max_size=2),
    "atmosphere": st.fixed_dictionaries({}, optional={
        "weather_ceiling_km": st.floats(-1, 25),
        "layers_km": st.dictionaries(st.sampled_from(["Cloud", "Fog", "Rain"]),
                                     st.lists(st.floats(-1, 22), min_size=2, max_size=2)),
    }),
    "links": st.dictionaries(st.sampled_from([b.value for b in Band]), st.fixed_dictionaries({}, optional={
        "tx_power_dBm": st.floats(-50, 60),
        "bandwidth_Hz": st.floats(-1e6, 1e11),
        "rx_efficiency": st.floats(-0.2, 1.2),
        "full_divergence_urad": st.floats(-5, 100),
    })),
})


@settings(max_examples=150, deadline=None)
@given(config_strategy)
def test_fuzzed_configs_validate_or_fail_cleanly(config):
    """Anything the loader returns satisfies every invariant and survives a round trip."""
    try:
        s = scenario_from_dict(config)
    except ConfigError:
        return
    assert validate_scenario(s) is s
    assert scenario_from_dict(json.loads(dump_scenario(s))) == s


def test_scenario_to_dict_keys_are_accepted():
    d = scenario_to_dict(Scenario())
    assert d["spec_version"] == 1
    assert scenario_from_dict(d) == Scenario()


def test_weather_gamma_missing_entry():
    s = Scenario()
    del s.atmosphere.specific_attenuation[Band.S][Condition.RAIN]
    with pytest.raises(ConfigError, match="SBand.Rain"):
        s.weather(Condition.RAIN).gamma(Band.S)


def test_ground_node_altitude_bound():
    with pytest.raises(ConfigError):
        validate_scenario(dataclasses.replace(Scenario(), chain=(
            Node("gs", NodeKind.GROUND_STATION, 0.0, 0.8),
            Node("e", NodeKind.HAPS_ENDPOINT, 100.0, 20.0))))
