"""Layered Beer-Lambert path attenuation.

Each weather condition occupies a horizontal shell with a uniform specific
attenuation; clear-sky gaseous absorption applies to everything below the
weather ceiling. Paths above the ceiling are attenuation-free.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import geometry
from .scenario import AtmosphereTables, Band, Condition, Node, WeatherState


@dataclass(frozen=True)
class PathAttenuation:
    band: Band
    condition: Condition
    tropospheric_km: float
    gaseous_dB: float
    weather_dB: float

    @property
    def total_dB(self) -> float:
        return self.gaseous_dB + self.weather_dB


def condition_layer(condition: Condition, tables: AtmosphereTables | None = None) -> tuple[float, float] | None:
    """Altitude interval (km) occupied by ``condition``; None for clear sky."""
    tables = tables or AtmosphereTables()
    return tables.layers_km.get(Condition(condition))


def attenuation_components(arc_sep_km, h1_km, h2_km, band: Band, weather: WeatherState):
    """Vectorised ``(tropospheric_km, gaseous_dB, weather_dB)`` for node pairs given by separation/altitudes."""
    gamma = weather.gamma(band)
    tropo = geometry.length_below_km(arc_sep_km, h1_km, h2_km, weather.weather_ceiling_km)
    gaseous = weather.gaseous(band) * tropo
    layer = condition_layer(weather.condition, weather.tables)
    if layer is None or gamma == 0.0:
        wx = np.zeros_like(tropo)
    else:
        wx = gamma * geometry.layer_length_km(arc_sep_km, h1_km, h2_km, *layer)
    return tropo, gaseous, wx


def path_attenuation(a: Node, b: Node, band: Band, weather: WeatherState) -> PathAttenuation:
    band = Band(band)
    sep = abs(a.ground_arc_km - b.ground_arc_km)
    tropo, gas, wx = attenuation_components(sep, a.altitude_km, b.altitude_km, band, weather)
    return PathAttenuation(band, weather.condition, float(tropo), float(gas), float(wx))
