"""Spherical-earth link geometry.

Every node sits on one great circle, so a pair of nodes is fully described by
their ground-arc separation and their two altitudes. The helpers prefixed with
nothing (``chord_km``, ``length_below_km`` ...) take that triple and broadcast
over numpy arrays; the Node-level wrappers are what the rest of the package
calls for single links.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scenario import Node

EARTH_RADIUS_KM = 6371.0


def _positions(arc_sep_km, h1_km, h2_km):
    """Planar coordinates of both endpoints, the first on the x axis."""
    theta = np.asarray(arc_sep_km, dtype=float) / EARTH_RADIUS_KM
    r1 = EARTH_RADIUS_KM + np.asarray(h1_km, dtype=float)
    r2 = EARTH_RADIUS_KM + np.asarray(h2_km, dtype=float)
    return theta, r1, r2


def chord_km(arc_sep_km, h1_km, h2_km):
    theta, r1, r2 = _positions(arc_sep_km, h1_km, h2_km)
    # (r2 - r1)^2 + 4 r1 r2 sin^2(theta/2) avoids cancellation at small theta
    sq = (r2 - r1) ** 2 + 4.0 * r1 * r2 * np.sin(theta / 2.0) ** 2
    return np.sqrt(sq)


def min_ray_altitude_km(arc_sep_km, h1_km, h2_km):
    """Lowest altitude reached by the straight segment; negative if it cuts the Earth."""
    theta, r1, r2 = _positions(arc_sep_km, h1_km, h2_km)
    c = chord_km(arc_sep_km, h1_km, h2_km)
    with np.errstate(invalid="ignore", divide="ignore"):
        # foot of the perpendicular from the Earth's centre, as a fraction along A->B
        t = (r1 * r1 - r1 * r2 * np.cos(theta)) / (c * c)
        perp = r1 * r2 * np.sin(theta) / c
    inside = (c > 0) & (t > 0) & (t < 1)
    closest = np.where(inside, perp, np.minimum(r1, r2))
    return closest - EARTH_RADIUS_KM


def elevation_deg(arc_sep_km, h_from_km, h_to_km):
    """Elevation of the ray at the ``from`` endpoint, in degrees."""
    theta, r1, r2 = _positions(arc_sep_km, h_from_km, h_to_km)
    c = chord_km(arc_sep_km, h_from_km, h_to_km)
    with np.errstate(invalid="ignore", divide="ignore"):
        s = (r2 * np.cos(theta) - r1) / c
    s = np.where(c > 0, np.clip(s, -1.0, 1.0), 1.0)
    return np.degrees(np.arcsin(s))


def length_below_km(arc_sep_km, h1_km, h2_km, ceiling_km):
    """Length of the chord lying below altitude ``ceiling_km``.

    Altitude along a chord is convex in the chord parameter, so the part below
    a shell is one interval: the roots of |A + t(B - A)| = R + ceiling.
    """
    theta, r1, r2 = _positions(arc_sep_km, h1_km, h2_km)
    c = chord_km(arc_sep_km, h1_km, h2_km)
    rc = EARTH_RADIUS_KM + np.asarray(ceiling_km, dtype=float)
    a_dot_d = r1 * r2 * np.cos(theta) - r1 * r1
    dd = c * c
    disc = a_dot_d * a_dot_d - dd * (r1 * r1 - rc * rc)
    with np.errstate(invalid="ignore", divide="ignore"):
        root = np.sqrt(np.maximum(disc, 0.0))
        t1 = (-a_dot_d - root) / dd
        t2 = (-a_dot_d + root) / dd
    frac = np.clip(np.minimum(t2, 1.0) - np.maximum(t1, 0.0), 0.0, 1.0)
    frac = np.where((disc > 0) & (c > 0), frac, 0.0)
    return frac * c


def layer_length_km(arc_sep_km, h1_km, h2_km, bottom_km, top_km):
    """Chord length inside the altitude shell [bottom, top]."""
    upper = length_below_km(arc_sep_km, h1_km, h2_km, top_km)
    if bottom_km <= 0.0:
        # the sub-surface part only exists for obstructed rays, which carry no signal anyway
        return upper
    return np.maximum(upper - length_below_km(arc_sep_km, h1_km, h2_km, bottom_km), 0.0)


def _pair(a: Node, b: Node):
    return abs(a.ground_arc_km - b.ground_arc_km), a.altitude_km, b.altitude_km


def slant_range(a: Node, b: Node) -> float:
    """Straight-line distance between two nodes in km."""
    return float(chord_km(*_pair(a, b)))


def tropospheric_length(a: Node, b: Node, ceiling_km: float) -> float:
    if ceiling_km <= 0:
        raise ValueError("ceiling_km must be > 0")
    return float(length_below_km(*_pair(a, b), ceiling_km))


@dataclass(frozen=True)
class GeoRay:
    a: Node
    b: Node
    chord_km: float
    min_ray_altitude_km: float
    elevation_deg: float

    @property
    def obstructed(self) -> bool:
        """True when the straight segment passes below the surface."""
        return self.min_ray_altitude_km < -1e-9

    def tropospheric(self, ceiling_km: float = 10.0) -> bool:
        return self.min_ray_altitude_km < ceiling_km


def ray_clearance(a: Node, b: Node) -> GeoRay:
    sep, ha, hb = _pair(a, b)
    low, high = (ha, hb) if ha <= hb else (hb, ha)
    return GeoRay(
        a=a,
        b=b,
        chord_km=float(chord_km(sep, ha, hb)),
        min_ray_altitude_km=float(min_ray_altitude_km(sep, ha, hb)),
        elevation_deg=float(elevation_deg(sep, low, high)),
    )
