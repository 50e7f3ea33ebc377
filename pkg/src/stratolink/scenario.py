"""Domain types, built-in parameter sets and scenario file handling.

A scenario is a single JSON document. Every key is optional except that
``spec_version`` (when present) must equal 1; omitted keys take the built-in
defaults below. Unknown keys are rejected so that a misspelled physics
parameter can never be silently ignored.
"""
from __future__ import annotations

import dataclasses
import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

SPEC_VERSION = 1
HAPS_ALTITUDE_KM = 20.0
U64_MAX = 2**64 - 1


class ConfigError(ValueError):
    """Invalid scenario configuration. ``key`` is the dotted path of the culprit."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")


class Band(str, enum.Enum):
    FSO = "Fso"
    THZ = "Thz"
    KA = "KaBand"
    S = "SBand"


class Condition(str, enum.Enum):
    CLEAR = "Clear"
    CLOUD = "Cloud"
    FOG = "Fog"
    RAIN = "Rain"


class NodeKind(str, enum.Enum):
    GROUND_STATION = "GroundStation"
    HAPS_RELAY = "HapsRelay"
    HAPS_ENDPOINT = "HapsEndpoint"
    HANDHELD = "HandheldUser"
    VSAT = "VsatTerminal"
    UAV = "Uav"
    TERRESTRIAL_BS = "TerrestrialBS"

    @property
    def is_haps(self) -> bool:
        return self in (NodeKind.HAPS_RELAY, NodeKind.HAPS_ENDPOINT)

    @property
    def is_ground(self) -> bool:
        return self in (NodeKind.GROUND_STATION, NodeKind.HANDHELD,
                        NodeKind.VSAT, NodeKind.TERRESTRIAL_BS)


# Antenna height used when a terminal of that kind is placed on the ground.
TERMINAL_ALTITUDE_KM = {
    NodeKind.HANDHELD: 0.0015,
    NodeKind.VSAT: 0.002,
    NodeKind.TERRESTRIAL_BS: 0.03,
}


@dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    ground_arc_km: float
    altitude_km: float = HAPS_ALTITUDE_KM


@dataclass(frozen=True)
class LinkSpec:
    """Transmitter, receiver and channel parameters of one band.

    ``carrier_GHz`` is ignored for FSO, which uses ``wavelength_nm``. The
    optical fields are present on every band so that all four specs share
    one shape; they only matter for FSO.
    """

    band: Band
    carrier_GHz: float
    tx_power_dBm: float
    bandwidth_Hz: float
    tx_gain_dBi: float = 0.0
    rx_gain_dBi: float = 0.0
    noise_psd_dBm_per_Hz: float = -174.0
    wavelength_nm: float = 1550.0
    tx_efficiency: float = 0.8
    rx_efficiency: float = 0.8
    rx_telescope_diameter_m: float = 0.08
    pointing_error_tx_urad: float = 1.0
    pointing_error_rx_urad: float = 1.0
    full_divergence_urad: float = 15.0
    responsivity_A_per_W: float = 0.8
    noise_current_density_A_per_sqrtHz: float = 1e-11


def default_linkspec(band: Band) -> LinkSpec:
    """Built-in evaluation parameters for ``band``."""
    band = Band(band)
    if band is Band.FSO:
        # 1550 nm carrier; the 50 GHz electrical bandwidth is a receiver calibration constant.
        return LinkSpec(band, carrier_GHz=193414.49, tx_power_dBm=17.5, bandwidth_Hz=50e9)
    if band is Band.THZ:
        return LinkSpec(band, carrier_GHz=144.0, tx_power_dBm=17.5, bandwidth_Hz=30e9,
                        tx_gain_dBi=55.0, rx_gain_dBi=55.0)
    if band is Band.KA:
        return LinkSpec(band, carrier_GHz=30.0, tx_power_dBm=43.2, bandwidth_Hz=400e6,
                        tx_gain_dBi=13.8, rx_gain_dBi=39.7)
    return LinkSpec(band, carrier_GHz=2.4, tx_power_dBm=43.2, bandwidth_Hz=100e6,
                    tx_gain_dBi=13.8, rx_gain_dBi=0.0)


def _default_gamma() -> dict[Band, dict[Condition, float]]:
    return {
        Band.FSO: {Condition.CLEAR: 0.0, Condition.CLOUD: 30.0, Condition.FOG: 100.0, Condition.RAIN: 6.0},
        Band.THZ: {Condition.CLEAR: 0.0, Condition.CLOUD: 1.0, Condition.FOG: 1.0, Condition.RAIN: 10.0},
        Band.KA: {Condition.CLEAR: 0.0, Condition.CLOUD: 0.3, Condition.FOG: 0.3, Condition.RAIN: 3.0},
        Band.S: {Condition.CLEAR: 0.0, Condition.CLOUD: 0.0, Condition.FOG: 0.0, Condition.RAIN: 0.0},
    }


def _default_gaseous() -> dict[Band, float]:
    return {Band.FSO: 0.2, Band.THZ: 0.5, Band.KA: 0.05, Band.S: 0.0}


def _default_layers() -> dict[Condition, tuple[float, float] | None]:
    return {
        Condition.CLEAR: None,
        Condition.CLOUD: (1.0, 3.0),
        Condition.FOG: (0.0, 0.5),
        Condition.RAIN: (0.0, 4.0),
    }


@dataclass(frozen=True)
class AtmosphereTables:
    """Specific attenuations (dB/km) and layer geometry shared by all weather states."""

    specific_attenuation: dict[Band, dict[Condition, float]] = field(default_factory=_default_gamma)
    gaseous_dB_per_km: dict[Band, float] = field(default_factory=_default_gaseous)
    weather_ceiling_km: float = 10.0
    layers_km: dict[Condition, tuple[float, float] | None] = field(default_factory=_default_layers)


@dataclass(frozen=True)
class WeatherState:
    condition: Condition
    tables: AtmosphereTables = field(default_factory=AtmosphereTables)

    @property
    def weather_ceiling_km(self) -> float:
        return self.tables.weather_ceiling_km

    @property
    def fog_ceiling_km(self) -> float:
        layer = self.tables.layers_km.get(Condition.FOG)
        return layer[1] if layer else 0.0

    def gamma(self, band: Band) -> float:
        try:
            return self.tables.specific_attenuation[Band(band)][self.condition]
        except KeyError:
            raise ConfigError(f"atmosphere.specific_attenuation_dB_per_km.{Band(band).value}."
                              f"{self.condition.value}", "missing specific attenuation") from None

    def gaseous(self, band: Band) -> float:
        return self.tables.gaseous_dB_per_km.get(Band(band), 0.0)


@dataclass(frozen=True)
class LinkBudgetResult:
    band: Band
    rx_power_dBm: float
    snr_dB: float
    capacity_bps: float
    path_length_km: float
    tropospheric_segment_km: float
    attenuation_dB: float
    blocked: bool = False


def _default_chain() -> tuple[Node, ...]:
    from .network import place_chain
    return tuple(place_chain(800.0, 3))


def _default_links() -> dict[Band, LinkSpec]:
    return {b: default_linkspec(b) for b in Band}


def _default_populations() -> dict[NodeKind, int]:
    return {NodeKind.HANDHELD: 1_000_000, NodeKind.VSAT: 1000,
            NodeKind.UAV: 100, NodeKind.TERRESTRIAL_BS: 100}


def _default_activity() -> dict[NodeKind, float]:
    return {NodeKind.HANDHELD: 1e-3, NodeKind.VSAT: 1.0,
            NodeKind.UAV: 1.0, NodeKind.TERRESTRIAL_BS: 1.0}


@dataclass(frozen=True)
class Sweep:
    distances_km: tuple[float, ...] = (400.0, 500.0, 600.0, 700.0, 800.0)
    node_counts: tuple[int, ...] = (3, 4, 5, 6)


@dataclass(frozen=True)
class Scenario:
    chain: tuple[Node, ...] = field(default_factory=_default_chain)
    disaster_center_arc_km: float = 800.0
    disaster_radius_km: float = 50.0
    populations: dict[NodeKind, int] = field(default_factory=_default_populations)
    activity_factors: dict[NodeKind, float] = field(default_factory=_default_activity)
    terminals_per_trial: int = 100
    uav_altitude_km: tuple[float, float] = (0.1, 3.0)
    weather_disaster: Condition = Condition.CLEAR
    weather_central: Condition = Condition.CLEAR
    atmosphere: AtmosphereTables = field(default_factory=AtmosphereTables)
    links: dict[Band, LinkSpec] = field(default_factory=_default_links)
    rng_seed: int = 0
    trials: int = 1000
    sweep: Sweep = field(default_factory=Sweep)

    def weather(self, condition: Condition | str) -> WeatherState:
        return WeatherState(Condition(condition), self.atmosphere)

    def link(self, band: Band | str) -> LinkSpec:
        return self.links[Band(band)]

    @property
    def endpoint(self) -> Node:
        return self.chain[-1]


# ---------------------------------------------------------------------------
# validation

def _finite(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ConfigError(key, f"expected a finite number, got {value!r}")
    return float(value)


def _integer(key: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(key, f"expected an integer, got {value!r}")
    return value


def _check(cond: bool, key: str, message: str) -> None:
    if not cond:
        raise ConfigError(key, message)


def validate_linkspec(spec: LinkSpec, key: str = "links") -> None:
    for f in dataclasses.fields(spec):
        if f.name != "band":
            _finite(f"{key}.{f.name}", getattr(spec, f.name))
    _check(spec.carrier_GHz > 0, f"{key}.carrier_GHz", "must be > 0")
    _check(spec.wavelength_nm > 0, f"{key}.wavelength_nm", "must be > 0")
    _check(spec.bandwidth_Hz > 0, f"{key}.bandwidth_Hz", "must be > 0")
    for name in ("tx_efficiency", "rx_efficiency"):
        v = getattr(spec, name)
        _check(0 < v <= 1, f"{key}.{name}", "must lie in (0, 1]")
    _check(spec.full_divergence_urad > 0, f"{key}.full_divergence_urad", "must be > 0")
    _check(spec.rx_telescope_diameter_m > 0, f"{key}.rx_telescope_diameter_m", "must be > 0")
    for name in ("pointing_error_tx_urad", "pointing_error_rx_urad",
                 "responsivity_A_per_W", "noise_current_density_A_per_sqrtHz"):
        _check(getattr(spec, name) >= 0, f"{key}.{name}", "must be >= 0")
    _check(spec.noise_current_density_A_per_sqrtHz > 0,
           f"{key}.noise_current_density_A_per_sqrtHz", "must be > 0")


def validate_node(node: Node, key: str) -> None:
    _finite(f"{key}.ground_arc_km", node.ground_arc_km)
    _finite(f"{key}.altitude_km", node.altitude_km)
    _check(node.ground_arc_km >= 0, f"{key}.ground_arc_km", "must be >= 0")
    _check(node.altitude_km >= 0, f"{key}.altitude_km", "must be >= 0")
    if node.kind.is_ground:
        _check(node.altitude_km <= 0.5, f"{key}.altitude_km", "ground nodes must lie in [0, 0.5] km")
    elif node.kind is NodeKind.UAV:
        _check(0 < node.altitude_km <= 10, f"{key}.altitude_km", "UAV altitude must lie in (0, 10] km")


def validate_atmosphere(atm: AtmosphereTables, key: str = "atmosphere") -> None:
    _check(0 < atm.weather_ceiling_km < HAPS_ALTITUDE_KM, f"{key}.weather_ceiling_km",
           "must lie in (0, 20) km")
    for band in Band:
        _check(band in atm.specific_attenuation,
               f"{key}.specific_attenuation_dB_per_km.{band.value}", "missing band")
        for cond in Condition:
            k = f"{key}.specific_attenuation_dB_per_km.{band.value}.{cond.value}"
            _check(cond in atm.specific_attenuation[band], k, "missing condition")
            _check(_finite(k, atm.specific_attenuation[band][cond]) >= 0, k, "must be >= 0")
        k = f"{key}.gaseous_dB_per_km.{band.value}"
        _check(_finite(k, atm.gaseous_dB_per_km.get(band, 0.0)) >= 0, k, "must be >= 0")
    for cond, layer in atm.layers_km.items():
        k = f"{key}.layers_km.{cond.value}"
        if layer is None:
            continue
        lo, hi = (_finite(k, v) for v in layer)
        _check(0 <= lo < hi < HAPS_ALTITUDE_KM, k, "layer must satisfy 0 <= bottom < top < 20 km")


def validate_scenario(s: Scenario) -> Scenario:
    """Raise ConfigError unless every type invariant of ``s`` holds."""
    _check(len(s.chain) >= 2, "chain", "needs at least a ground station and an end-point HAPS")
    for i, node in enumerate(s.chain):
        validate_node(node, f"chain[{i}]")
    _check(s.chain[0].kind is NodeKind.GROUND_STATION, "chain[0].kind", "must be GroundStation")
    _check(s.chain[-1].kind is NodeKind.HAPS_ENDPOINT, f"chain[{len(s.chain) - 1}].kind",
           "must be HapsEndpoint")
    for i in range(1, len(s.chain)):
        _check(s.chain[i].ground_arc_km > s.chain[i - 1].ground_arc_km,
               f"chain[{i}].ground_arc_km", "ground arcs must be strictly increasing")
        if 0 < i < len(s.chain) - 1:
            _check(s.chain[i].kind is NodeKind.HAPS_RELAY, f"chain[{i}].kind", "must be HapsRelay")
    _check(_finite("disaster_center_arc_km", s.disaster_center_arc_km) >= 0,
           "disaster_center_arc_km", "must be >= 0")
    _check(_finite("disaster_radius_km", s.disaster_radius_km) >= 0,
           "disaster_radius_km", "must be >= 0")
    for kind, n in s.populations.items():
        _check(_integer(f"populations.{kind.value}", n) >= 0, f"populations.{kind.value}", "must be >= 0")
    for kind, a in s.activity_factors.items():
        k = f"activity_factors.{kind.value}"
        _check(0 < _finite(k, a) <= 1, k, "must lie in (0, 1]")
    _check(_integer("terminals_per_trial", s.terminals_per_trial) >= 1,
           "terminals_per_trial", "must be >= 1")
    lo, hi = (_finite("uav_altitude_km", v) for v in s.uav_altitude_km)
    _check(0 < lo < hi <= 10, "uav_altitude_km", "must satisfy 0 < low < high <= 10")
    validate_atmosphere(s.atmosphere)
    for band in Band:
        _check(band in s.links, f"links.{band.value}", "missing band")
        _check(s.links[band].band is band, f"links.{band.value}.band", "band mismatch")
        validate_linkspec(s.links[band], f"links.{band.value}")
    _check(0 <= _integer("rng_seed", s.rng_seed) <= U64_MAX, "rng_seed", "must be an unsigned 64-bit integer")
    _check(_integer("trials", s.trials) >= 1, "trials", "must be >= 1")
    _check(len(s.sweep.distances_km) > 0, "sweep.distances_km", "must be non-empty")
    _check(len(s.sweep.node_counts) > 0, "sweep.node_counts", "must be non-empty")
    for d in s.sweep.distances_km:
        _check(_finite("sweep.distances_km", d) > 0, "sweep.distances_km", "distances must be > 0")
    for n in s.sweep.node_counts:
        _check(_integer("sweep.node_counts", n) >= 1, "sweep.node_counts", "node counts must be >= 1")
    return s


# ---------------------------------------------------------------------------
# JSON <-> Scenario

def _obj(key: str, value: Any) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise ConfigError(key, f"expected an object, got {type(value).__name__}")
    return value


def _enum(cls: type[enum.Enum], key: str, token: Any):
    try:
        return cls(token)
    except ValueError:
        valid = ", ".join(m.value for m in cls)
        raise ConfigError(key, f"unknown value {token!r} (valid: {valid})") from None


def _reject_unknown(key: str, data: Mapping[str, Any], allowed) -> None:
    for k in data:
        if k not in allowed:
            raise ConfigError(f"{key}.{k}" if key else k, "unknown key")


_LINK_FIELDS = {f.name: f for f in dataclasses.fields(LinkSpec) if f.name != "band"}


def _parse_links(data: Any) -> dict[Band, LinkSpec]:
    data = _obj("links", data)
    links = _default_links()
    for token, overrides in data.items():
        band = _enum(Band, f"links.{token}", token)
        overrides = _obj(f"links.{token}", overrides)
        _reject_unknown(f"links.{token}", overrides, _LINK_FIELDS)
        values = {k: _finite(f"links.{token}.{k}", v) for k, v in overrides.items()}
        links[band] = dataclasses.replace(links[band], **values)
    return links


def _parse_atmosphere(data: Any) -> AtmosphereTables:
    data = _obj("atmosphere", data)
    _reject_unknown("atmosphere", data, {"weather_ceiling_km", "specific_attenuation_dB_per_km",
                                         "gaseous_dB_per_km", "layers_km"})
    base = AtmosphereTables()
    gamma = base.specific_attenuation
    for token, table in _obj("atmosphere.specific_attenuation_dB_per_km",
                             data.get("specific_attenuation_dB_per_km", {})).items():
        key = f"atmosphere.specific_attenuation_dB_per_km.{token}"
        band = _enum(Band, key, token)
        for ctoken, v in _obj(key, table).items():
            cond = _enum(Condition, f"{key}.{ctoken}", ctoken)
            gamma[band][cond] = _finite(f"{key}.{ctoken}", v)
    gaseous = base.gaseous_dB_per_km
    for token, v in _obj("atmosphere.gaseous_dB_per_km", data.get("gaseous_dB_per_km", {})).items():
        key = f"atmosphere.gaseous_dB_per_km.{token}"
        gaseous[_enum(Band, key, token)] = _finite(key, v)
    layers = base.layers_km
    for ctoken, v in _obj("atmosphere.layers_km", data.get("layers_km", {})).items():
        key = f"atmosphere.layers_km.{ctoken}"
        cond = _enum(Condition, key, ctoken)
        if v is None:
            layers[cond] = None
        elif isinstance(v, list) and len(v) == 2:
            layers[cond] = (_finite(key, v[0]), _finite(key, v[1]))
        else:
            raise ConfigError(key, "expected [bottom_km, top_km] or null")
    ceiling = _finite("atmosphere.weather_ceiling_km",
                      data.get("weather_ceiling_km", base.weather_ceiling_km))
    return AtmosphereTables(gamma, gaseous, ceiling, layers)


def _parse_chain(data: Any) -> tuple[Node, ...]:
    if not isinstance(data, list):
        raise ConfigError("chain", "expected a list of nodes")
    nodes = []
    for i, item in enumerate(data):
        key = f"chain[{i}]"
        item = _obj(key, item)
        _reject_unknown(key, item, {"id", "kind", "ground_arc_km", "altitude_km"})
        for req in ("kind", "ground_arc_km"):
            if req not in item:
                raise ConfigError(f"{key}.{req}", "required")
        kind = _enum(NodeKind, f"{key}.kind", item["kind"])
        default_alt = HAPS_ALTITUDE_KM if kind.is_haps else 0.0
        nodes.append(Node(
            id=str(item.get("id", f"n{i}")),
            kind=kind,
            ground_arc_km=_finite(f"{key}.ground_arc_km", item["ground_arc_km"]),
            altitude_km=_finite(f"{key}.altitude_km", item.get("altitude_km", default_alt)),
        ))
    return tuple(nodes)


def _parse_kind_map(key: str, data: Any, base: dict, conv) -> dict:
    out = dict(base)
    for token, v in _obj(key, data).items():
        out[_enum(NodeKind, f"{key}.{token}", token)] = conv(f"{key}.{token}", v)
    return out


_TOP_KEYS = {
    "spec_version", "chain", "disaster_center_arc_km", "disaster_radius_km", "populations",
    "activity_factors", "terminals_per_trial", "uav_altitude_km", "weather_disaster",
    "weather_central", "atmosphere", "links", "rng_seed", "trials", "sweep",
}


def scenario_from_dict(data: Mapping[str, Any]) -> Scenario:
    """Build and validate a Scenario from a parsed JSON object."""
    data = _obj("<root>", data)
    _reject_unknown("", data, _TOP_KEYS)
    if "spec_version" in data and data["spec_version"] != SPEC_VERSION:
        raise ConfigError("spec_version", f"unsupported version {data['spec_version']!r}, expected 1")

    kw: dict[str, Any] = {}
    if "chain" in data:
        kw["chain"] = _parse_chain(data["chain"])
    for k in ("disaster_center_arc_km", "disaster_radius_km"):
        if k in data:
            kw[k] = _finite(k, data[k])
    for k in ("terminals_per_trial", "rng_seed", "trials"):
        if k in data:
            kw[k] = _integer(k, data[k])
    if "populations" in data:
        kw["populations"] = _parse_kind_map("populations", data["populations"],
                                            _default_populations(), _integer)
    if "activity_factors" in data:
        kw["activity_factors"] = _parse_kind_map("activity_factors", data["activity_factors"],
                                                 _default_activity(), _finite)
    if "uav_altitude_km" in data:
        v = data["uav_altitude_km"]
        if not (isinstance(v, list) and len(v) == 2):
            raise ConfigError("uav_altitude_km", "expected [low_km, high_km]")
        kw["uav_altitude_km"] = (_finite("uav_altitude_km", v[0]), _finite("uav_altitude_km", v[1]))
    for k in ("weather_disaster", "weather_central"):
        if k in data:
            kw[k] = _enum(Condition, k, data[k])
    if "atmosphere" in data:
        kw["atmosphere"] = _parse_atmosphere(data["atmosphere"])
    if "links" in data:
        kw["links"] = _parse_links(data["links"])
    if "sweep" in data:
        sw = _obj("sweep", data["sweep"])
        _reject_unknown("sweep", sw, {"distances_km", "node_counts"})
        base = Sweep()
        dists = sw.get("distances_km", list(base.distances_km))
        counts = sw.get("node_counts", list(base.node_counts))
        if not isinstance(dists, list) or not isinstance(counts, list):
            raise ConfigError("sweep", "axes must be lists")
        kw["sweep"] = Sweep(tuple(_finite("sweep.distances_km", d) for d in dists),
                            tuple(_integer("sweep.node_counts", n) for n in counts))
    return validate_scenario(Scenario(**kw))


def read_config(path: str | Path) -> dict[str, Any]:
    """Parse the JSON document at ``path`` (no validation)."""
    path = Path(path)
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise ConfigError("scenario", f"file not found: {path}") from None
    except OSError as exc:
        raise ConfigError("scenario", f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("scenario", f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return _obj("<root>", data)


def load_scenario(path: str | Path) -> Scenario:
    return scenario_from_dict(read_config(path))


def scenario_to_dict(s: Scenario) -> dict[str, Any]:
    """Full JSON-ready form of ``s``; ``scenario_from_dict`` inverts it exactly."""
    atm = s.atmosphere
    return {
        "spec_version": SPEC_VERSION,
        "chain": [{"id": n.id, "kind": n.kind.value, "ground_arc_km": n.ground_arc_km,
                   "altitude_km": n.altitude_km} for n in s.chain],
        "disaster_center_arc_km": s.disaster_center_arc_km,
        "disaster_radius_km": s.disaster_radius_km,
        "populations": {k.value: v for k, v in s.populations.items()},
        "activity_factors": {k.value: v for k, v in s.activity_factors.items()},
        "terminals_per_trial": s.terminals_per_trial,
        "uav_altitude_km": list(s.uav_altitude_km),
        "weather_disaster": s.weather_disaster.value,
        "weather_central": s.weather_central.value,
        "atmosphere": {
            "weather_ceiling_km": atm.weather_ceiling_km,
            "specific_attenuation_dB_per_km": {
                b.value: {c.value: g for c, g in table.items()}
                for b, table in atm.specific_attenuation.items()},
            "gaseous_dB_per_km": {b.value: g for b, g in atm.gaseous_dB_per_km.items()},
            "layers_km": {c.value: (list(v) if v else None) for c, v in atm.layers_km.items()},
        },
        "links": {b.value: {k: getattr(spec, k) for k in _LINK_FIELDS} for b, spec in s.links.items()},
        "rng_seed": s.rng_seed,
        "trials": s.trials,
        "sweep": {"distances_km": list(s.sweep.distances_km),
                  "node_counts": list(s.sweep.node_counts)},
    }


def dump_scenario(s: Scenario) -> str:
    return json.dumps(scenario_to_dict(s), indent=2, sort_keys=True)
