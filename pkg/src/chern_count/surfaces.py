"""Concrete surfaces: presets, numeric counts and ampleness thresholds."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Mapping, Union

from .chern_ring import OnePointClass, SurfaceGeometry, TwoPointClass
from .strata import ONE_POINT_SINGULARITIES, OnePointEngine, codimension
from .strata import default_engine as _default_one
from .two_point import TWO_POINT_SINGULARITIES, TwoPointEngine
from .two_point import default_engine as _default_two

__all__ = [
    "SurfaceSpec",
    "AmplenessReport",
    "CountResult",
    "projective_plane",
    "p1_x_p1",
    "custom_surface",
    "load_surface",
    "ampleness_threshold",
    "class_of",
    "count",
    "expected_point_count",
    "all_singularities",
]


@dataclass(frozen=True)
class SurfaceSpec:
    name: str
    params: dict = field(default_factory=dict, compare=False)
    geometry: SurfaceGeometry = None

    def to_json(self) -> dict:
        return {"name": self.name, "params": dict(self.params), "geometry": self.geometry.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "SurfaceSpec":
        """Presets are rebuilt from their parameters; anything else needs ``geometry``."""
        name = data.get("name", "custom")
        params = dict(data.get("params") or {})
        if name == "p2" and "degree" in params:
            return projective_plane(int(params["degree"]))
        if name == "p1xp1" and "bidegree" in params:
            a, b = params["bidegree"]
            return p1_x_p1(int(a), int(b))
        if "geometry" not in data:
            raise ValueError("surface JSON needs a 'geometry' object")
        return cls(name, params, SurfaceGeometry.from_json(data["geometry"]))


def projective_plane(d: int) -> SurfaceSpec:
    """P^2 with L = O(d): c1 = dH, x1 = -3H, x2 = 3H^2."""
    return SurfaceSpec("p2", {"degree": d}, SurfaceGeometry(d * d, -3 * d, 9, 3))


def p1_x_p1(a: int, b: int) -> SurfaceSpec:
    """P^1 x P^1 with L = O(a, b): c1 = aH1 + bH2, x1 = -2H1 - 2H2, H1 H2 = 1."""
    return SurfaceSpec("p1xp1", {"bidegree": [a, b]}, SurfaceGeometry(2 * a * b, -2 * (a + b), 8, 4))


def custom_surface(geometry: SurfaceGeometry | Mapping, name: str = "custom", params=None) -> SurfaceSpec:
    if not isinstance(geometry, SurfaceGeometry):
        geometry = SurfaceGeometry.from_json(geometry)
    return SurfaceSpec(name, dict(params or {}), geometry)


def load_surface(path: Union[str, Path]) -> SurfaceSpec:
    with open(path, encoding="utf-8") as fh:
        return SurfaceSpec.from_json(json.load(fh))


def all_singularities() -> list[str]:
    """One-point names, then two-point names, in table order."""
    return list(ONE_POINT_SINGULARITIES) + ["A1" + b for b in TWO_POINT_SINGULARITIES]


def _split(sing: str) -> tuple[bool, str]:
    if sing in ONE_POINT_SINGULARITIES:
        return False, sing
    if sing.startswith("A1") and sing[2:] in TWO_POINT_SINGULARITIES:
        return True, sing[2:]
    raise ValueError(f"unsupported singularity {sing!r}")


def ampleness_threshold(sing: str) -> int:
    """Power of a very ample bundle that L must be for the formula to hold."""
    two, base = _split(sing)
    family, k = base[0], int(base[1:])
    ct = {"A": k + 1, "D": k - 1, "E": 4}[family]
    return ct + 2 if two else ct


@dataclass(frozen=True)
class AmplenessReport:
    required: int
    satisfied: Union[bool, str]

    def to_json(self) -> dict:
        return {"required": self.required, "satisfied": self.satisfied}


def _ampleness(sing: str, surface: SurfaceSpec) -> AmplenessReport:
    ct = ampleness_threshold(sing)
    if surface.name == "p2" and "degree" in surface.params:
        # O(d) = O(1)^d with O(1) very ample
        return AmplenessReport(ct, int(surface.params["degree"]) >= ct)
    if surface.name == "p1xp1" and "bidegree" in surface.params:
        a, b = (int(x) for x in surface.params["bidegree"])
        # O(a, b) is the n-th power of a very ample bundle exactly when n | gcd(a, b)
        return AmplenessReport(ct, a > 0 and b > 0 and gcd(a, b) >= ct)
    return AmplenessReport(ct, "unknown")


@dataclass(frozen=True)
class CountResult:
    sing: str
    value: Fraction
    ampleness: AmplenessReport

    def to_json(self) -> dict:
        v = self.value
        return {
            "sing": self.sing,
            "value": int(v) if v.denominator == 1 else str(v),
            "ampleness": self.ampleness.to_json(),
        }


def class_of(
    sing: str,
    one: OnePointEngine | None = None,
    two: TwoPointEngine | None = None,
) -> OnePointClass | TwoPointClass:
    """The universal class counting curves with singularity ``sing``."""
    is_two, base = _split(sing)
    if is_two:
        return (two or _default_two()).n_pair(base)
    return (one or _default_one()).n_singularity(base)


def count(
    sing: str,
    surface: SurfaceSpec,
    one: OnePointEngine | None = None,
    two: TwoPointEngine | None = None,
) -> CountResult:
    cls = class_of(sing, one, two)
    return CountResult(sing, cls.evaluate(surface.geometry), _ampleness(sing, surface))


def expected_point_count(sing: str, surface: SurfaceSpec) -> Union[int, str]:
    """Generic points the counted curves pass through, delta_L - codim.

    Uses Riemann-Roch and Noether's formula, valid only when L is sufficiently
    ample: h^0(L) = (c1^2 - c1 x1)/2 + chi(O_X), chi(O_X) = (x1^2 + x2)/12.
    Returns ``"unknown"`` when chi(O_X) is not an integer.
    """
    g = surface.geometry
    chi = (g.x1_sq + g.x2) / 12
    if chi.denominator != 1:
        return "unknown"
    h0 = (g.c1_sq - g.c1_x1) / 2 + chi
    if h0.denominator != 1:
        return "unknown"
    if h0 < 1:
        raise ValueError(f"L has no sections by Riemann-Roch (h0 = {h0})")
    return int(h0) - 1 - codimension(sing)
