"""Per-link received power, SNR and Shannon capacity.

RF bands (THz, Ka, S) use a Friis budget against thermal noise. FSO uses a
geometric-capture / Gaussian pointing-loss optical budget followed by a
direct-detection receiver whose electrical SNR is (R * P_rx)^2 / (i_n^2 * B).
The array functions (``fso_link``, ``rf_link``) take a distance and an
atmospheric loss and broadcast; the Node-level budgets wrap them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .atmosphere import attenuation_components
from .scenario import Band, LinkBudgetResult, LinkSpec, Node, WeatherState

SPEED_OF_LIGHT = 299_792_458.0


def to_db(x):
    return 10.0 * np.log10(x)


def from_db(x_db):
    return 10.0 ** (np.asarray(x_db, dtype=float) / 10.0)


def fspl_dB(freq_GHz, distance_km):
    """Free-space path loss 20 log10(4 pi d f / c)."""
    d = np.asarray(distance_km, dtype=float)
    if np.any(d <= 0):
        raise ValueError("free-space path loss needs distance > 0")
    if np.any(np.asarray(freq_GHz) <= 0):
        raise ValueError("free-space path loss needs frequency > 0")
    return 20.0 * np.log10(4.0 * np.pi * d * 1e3 * np.asarray(freq_GHz) * 1e9 / SPEED_OF_LIGHT)


def shannon_capacity(bandwidth_Hz, snr_linear):
    return np.asarray(bandwidth_Hz, dtype=float) * np.log2(1.0 + np.asarray(snr_linear, dtype=float))


@dataclass(frozen=True)
class FsoLossBreakdown:
    geometric_capture: float
    pointing_loss: float
    optics_efficiency: float
    atmospheric_dB: float

    @property
    def total_linear(self) -> float:
        return (self.geometric_capture * self.pointing_loss * self.optics_efficiency
                * 10.0 ** (-self.atmospheric_dB / 10.0))


def _capture(distance_km, spec: LinkSpec):
    beam_m = spec.full_divergence_urad * 1e-6 * np.asarray(distance_km, dtype=float) * 1e3
    return np.minimum(1.0, (spec.rx_telescope_diameter_m / beam_m) ** 2)


def _pointing(spec: LinkSpec) -> float:
    sigma = math.hypot(spec.pointing_error_tx_urad, spec.pointing_error_rx_urad)
    half = spec.full_divergence_urad / 2.0
    return math.exp(-2.0 * (sigma / half) ** 2)


def fso_losses(distance_km: float, spec: LinkSpec, atmospheric_dB: float = 0.0) -> FsoLossBreakdown:
    if distance_km <= 0:
        raise ValueError("FSO budget needs distance > 0")
    return FsoLossBreakdown(
        geometric_capture=float(_capture(distance_km, spec)),
        pointing_loss=_pointing(spec),
        optics_efficiency=spec.tx_efficiency * spec.rx_efficiency,
        atmospheric_dB=atmospheric_dB,
    )


def fso_link(distance_km, atmospheric_dB, spec: LinkSpec):
    """Returns ``(rx_power_W, snr_linear, capacity_bps)`` arrays."""
    d = np.asarray(distance_km, dtype=float)
    if np.any(d <= 0):
        raise ValueError("FSO budget needs distance > 0")
    p_tx = 1e-3 * 10.0 ** (spec.tx_power_dBm / 10.0)
    gain = (spec.tx_efficiency * spec.rx_efficiency * _capture(d, spec) * _pointing(spec)
            * 10.0 ** (-np.asarray(atmospheric_dB, dtype=float) / 10.0))
    p_rx = p_tx * gain
    snr = (spec.responsivity_A_per_W * p_rx) ** 2 / (
        spec.noise_current_density_A_per_sqrtHz ** 2 * spec.bandwidth_Hz)
    return p_rx, snr, shannon_capacity(spec.bandwidth_Hz, snr)


def noise_power_dBm(spec: LinkSpec) -> float:
    return spec.noise_psd_dBm_per_Hz + 10.0 * math.log10(spec.bandwidth_Hz)


def rf_link(distance_km, atmospheric_dB, spec: LinkSpec):
    """Returns ``(rx_power_dBm, snr_dB, capacity_bps)`` arrays."""
    rx = (spec.tx_power_dBm + spec.tx_gain_dBi + spec.rx_gain_dBi
          - fspl_dB(spec.carrier_GHz, distance_km) - np.asarray(atmospheric_dB, dtype=float))
    snr_dB = rx - noise_power_dBm(spec)
    return rx, snr_dB, shannon_capacity(spec.bandwidth_Hz, from_db(snr_dB))


def _geometry(a: Node, b: Node, band: Band, weather: WeatherState):
    ray = geometry.ray_clearance(a, b)
    if ray.chord_km <= 0:
        raise ValueError(f"link {a.id}->{b.id} has zero length")
    sep = abs(a.ground_arc_km - b.ground_arc_km)
    tropo, gas, wx = attenuation_components(sep, a.altitude_km, b.altitude_km, band, weather)
    return ray, float(tropo), float(gas + wx)


def _blocked(band: Band, ray, tropo: float, atm: float) -> LinkBudgetResult:
    return LinkBudgetResult(band, -math.inf, -math.inf, 0.0, ray.chord_km, tropo, atm, blocked=True)


def fso_budget(a: Node, b: Node, spec: LinkSpec, weather: WeatherState) -> LinkBudgetResult:
    if spec.band is not Band.FSO:
        raise ValueError(f"fso_budget called with a {spec.band.value} spec")
    ray, tropo, atm = _geometry(a, b, Band.FSO, weather)
    if ray.obstructed:
        return _blocked(Band.FSO, ray, tropo, atm)
    p_rx, snr, cap = fso_link(ray.chord_km, atm, spec)
    with np.errstate(divide="ignore"):
        rx_dBm = float(to_db(p_rx * 1e3))
        snr_dB = float(to_db(snr))
    return LinkBudgetResult(Band.FSO, rx_dBm, snr_dB, float(cap), ray.chord_km, tropo, atm)


def rf_budget(a: Node, b: Node, spec: LinkSpec, weather: WeatherState) -> LinkBudgetResult:
    if spec.band is Band.FSO:
        raise ValueError("rf_budget does not handle FSO; use fso_budget")
    ray, tropo, atm = _geometry(a, b, spec.band, weather)
    if ray.obstructed:
        return _blocked(spec.band, ray, tropo, atm)
    rx, snr_dB, cap = rf_link(ray.chord_km, atm, spec)
    return LinkBudgetResult(spec.band, float(rx), float(snr_dB), float(cap), ray.chord_km, tropo, atm)


def link_budget(a: Node, b: Node, spec: LinkSpec, weather: WeatherState) -> LinkBudgetResult:
    if spec.band is Band.FSO:
        return fso_budget(a, b, spec, weather)
    return rf_budget(a, b, spec, weather)


def hybrid_rate(fso: LinkBudgetResult | float, thz: LinkBudgetResult | float) -> float:
    """Selection combining: whichever of the FSO and THz links currently carries more."""
    f = fso.capacity_bps if isinstance(fso, LinkBudgetResult) else fso
    t = thz.capacity_bps if isinstance(thz, LinkBudgetResult) else thz
    return max(f, t)
