"""One-point numbers N(A1, n1, m1, m2) and N(PX, n1, m1, m2, theta).

Each number is a universal top class on X (a ``OnePointClass``): the count of
curves in the stratum, cut down by ``c1^n1 x1^m1 x2^m2 lambda^theta`` and
enough generic point conditions.  The strata above A1 live on the
projectivised tangent bundle; ``theta`` is the power of its tautological
class.  Every recursion is a fixed linear combination of numbers of strictly
smaller codimension, except the PA2 theta > 1 rule which lowers theta.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from .chern_ring import OnePointClass

__all__ = [
    "StratumTag",
    "StratumKey",
    "IndexedKey",
    "Variants",
    "DEFAULT_VARIANTS",
    "ONE_POINT_SINGULARITIES",
    "UndefinedNumberError",
    "ConsistencyError",
    "OnePointEngine",
    "codimension",
    "n_a1",
    "n_stratum",
    "n_singularity",
    "one_point_indexed",
    "default_engine",
]


class UndefinedNumberError(ValueError):
    """Raised for indices that no recursion defines."""


class ConsistencyError(ArithmeticError):
    """A quantity that must be integral came out fractional."""


class StratumTag(str, enum.Enum):
    A1 = "A1"
    PA2 = "PA2"
    PA3 = "PA3"
    PA4 = "PA4"
    PA5 = "PA5"
    PA6 = "PA6"
    PA7 = "PA7"
    PD4 = "PD4"
    PD5 = "PD5"
    PD6 = "PD6"
    PD7 = "PD7"
    PE6 = "PE6"
    PE7 = "PE7"

    @property
    def codim(self) -> int:
        return int(self.value[-1])

    def __str__(self) -> str:
        return self.value


class StratumKey(NamedTuple):
    tag: StratumTag
    n1: int
    m1: int
    m2: int
    theta: int = 0

    @classmethod
    def make(cls, tag, n1: int = 0, m1: int = 0, m2: int = 0, theta: int = 0) -> "StratumKey":
        tag = StratumTag(tag)
        for name, v in (("n1", n1), ("m1", m1), ("m2", m2), ("theta", theta)):
            if not isinstance(v, int) or v < 0:
                raise UndefinedNumberError(f"{name} must be a non-negative integer, got {v!r}")
        if tag is StratumTag.A1 and theta:
            raise UndefinedNumberError("A1 is not projectivised; theta must be 0")
        return cls(tag, n1, m1, m2, theta)

    @property
    def degree(self) -> int:
        return self.n1 + self.m1 + 2 * self.m2

    def __str__(self) -> str:
        return f"{self.tag.value},{self.n1},{self.m1},{self.m2},{self.theta}"


class IndexedKey(NamedTuple):
    """N(X, n1, m1, m2) for an unprojectivised singularity X."""

    sing: str
    n1: int
    m1: int
    m2: int


Key = Union[StratumKey, IndexedKey]

ONE_POINT_SINGULARITIES = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "D4", "D5", "D6", "D7", "E6", "E7",
)


def codimension(sing: str) -> int:
    """Number of conditions imposed by a one- or two-point singularity name."""
    if sing in ONE_POINT_SINGULARITIES:
        return int(sing[1])
    if sing.startswith("A1") and sing[2:] in ONE_POINT_SINGULARITIES:
        return 1 + int(sing[3])
    raise ValueError(f"unknown singularity {sing!r}")


@dataclass(frozen=True)
class Variants:
    """Readings of recursions whose printed statement and proof disagree.

    ``pa7``: correction strata of the A7 recursion; ``"proof"`` uses PA6 in the
    c1 term and subtracts 6 PD7 + 7 PE7, ``"statement"`` uses PA5, PD6, PE6.
    ``pd6``: ``"euler"`` expands the Euler class of the PD6 line bundle (plain
    theta term), ``"statement"`` has an x1 term in its place.
    ``a1pa3``: diagonal correction of A1PA3 is 2 PA4 (``"proof"``) or 2 PA5.
    ``a1pd4``: diagonal correction of A1PD4 is 2 N(PD5, ..., 0)
    (``"statement"``) or 2 N(D5, ...) (``"proof"``).
    """

    pa7: str = "proof"
    pd6: str = "euler"
    a1pa3: str = "proof"
    a1pd4: str = "statement"

    _choices = {
        "pa7": ("proof", "statement"),
        "pd6": ("euler", "statement"),
        "a1pa3": ("proof", "statement"),
        "a1pd4": ("statement", "proof"),
    }

    def __post_init__(self):
        for name, allowed in self._choices.items():
            if getattr(self, name) not in allowed:
                raise ValueError(f"variant {name} must be one of {allowed}")

    def alternates(self) -> dict[str, "Variants"]:
        """Each non-default reading toggled alone."""
        out = {}
        for name, allowed in self._choices.items():
            other = next(a for a in allowed if a != getattr(self, name))
            out[name] = Variants(**{**self.as_dict(), name: other})
        return out

    def as_dict(self) -> dict[str, str]:
        return {name: getattr(self, name) for name in self._choices}


DEFAULT_VARIANTS = Variants()

T = StratumTag

# (coefficient, tag, dn1, dm1, dm2, dtheta) for the theta-uniform recursions
_RULES: dict[StratumTag, list[tuple[int, StratumTag, int, int, int, int]]] = {
    T.PA3: [(3, T.PA2, 0, 0, 0, 1), (1, T.PA2, 0, 0, 0, 0), (1, T.PA2, 1, 0, 0, 0)],
    T.PD4: [
        (2, T.PA3, 0, 1, 0, 0), (-2, T.PA3, 0, 0, 0, 1),
        (1, T.PA3, 0, 0, 0, 0), (1, T.PA3, 1, 0, 0, 0),
    ],
    T.PD5: [
        (1, T.PD4, 0, 0, 0, 1), (1, T.PD4, 0, 1, 0, 0),
        (1, T.PD4, 0, 0, 0, 0), (1, T.PD4, 1, 0, 0, 0),
    ],
    T.PE6: [
        (2, T.PD5, 0, 1, 0, 0), (-1, T.PD5, 0, 0, 0, 1),
        (1, T.PD5, 1, 0, 0, 0), (1, T.PD5, 0, 0, 0, 0),
    ],
    T.PE7: [(4, T.PE6, 0, 0, 0, 1), (1, T.PE6, 0, 0, 0, 0), (1, T.PE6, 1, 0, 0, 0)],
    T.PD7: [
        (4, T.PD6, 0, 0, 0, 1), (2, T.PD6, 0, 1, 0, 0),
        (2, T.PD6, 0, 0, 0, 0), (2, T.PD6, 1, 0, 0, 0),
    ],
    T.PA4: [
        (2, T.PA3, 0, 0, 0, 1), (2, T.PA3, 0, 1, 0, 0),
        (2, T.PA3, 0, 0, 0, 0), (2, T.PA3, 1, 0, 0, 0),
    ],
    T.PA5: [
        (1, T.PA4, 0, 0, 0, 1), (4, T.PA4, 0, 1, 0, 0),
        (3, T.PA4, 0, 0, 0, 0), (3, T.PA4, 1, 0, 0, 0),
        (-2, T.PD5, 0, 0, 0, 0),
    ],
    T.PA6: [
        (6, T.PA5, 0, 1, 0, 0), (4, T.PA5, 0, 0, 0, 0), (4, T.PA5, 1, 0, 0, 0),
        (-4, T.PD6, 0, 0, 0, 0), (-3, T.PE6, 0, 0, 0, 0),
    ],
}

_PD6_RULES = {
    "euler": [(4, T.PD5, 0, 0, 0, 1), (1, T.PD5, 0, 0, 0, 0), (1, T.PD5, 1, 0, 0, 0)],
    "statement": [(4, T.PD5, 0, 0, 0, 1), (1, T.PD5, 0, 1, 0, 0), (1, T.PD5, 1, 0, 0, 0)],
}

_PA7_RULES = {
    "proof": [
        (-1, T.PA6, 0, 0, 0, 1), (8, T.PA6, 0, 1, 0, 0),
        (5, T.PA6, 0, 0, 0, 0), (5, T.PA6, 1, 0, 0, 0),
        (-6, T.PD7, 0, 0, 0, 0), (-7, T.PE7, 0, 0, 0, 0),
    ],
    "statement": [
        (-1, T.PA6, 0, 0, 0, 1), (8, T.PA6, 0, 1, 0, 0),
        (5, T.PA6, 0, 0, 0, 0), (5, T.PA5, 1, 0, 0, 0),
        (-6, T.PD6, 0, 0, 0, 0), (-7, T.PE6, 0, 0, 0, 0),
    ],
}

# PA2 from the A1 numbers, theta = 0 and theta = 1: (coefficient, dn1, dm1, dm2)
_PA2_BASE = {
    0: [(2, 0, 0, 0), (2, 0, 1, 0), (2, 1, 0, 0)],
    1: [(1, 0, 0, 0), (2, 1, 0, 0), (1, 2, 0, 0), (3, 0, 1, 0), (3, 1, 1, 0), (2, 0, 2, 0)],
}

_A1_TABLE = {
    (0, 0, 0): (3, 2, 0, 1),
    (1, 0, 0): (3, 1, 0, 0),
    (2, 0, 0): (1, 0, 0, 0),
    (0, 1, 0): (0, 3, 1, 0),
    (1, 1, 0): (0, 1, 0, 0),
    (0, 2, 0): (0, 0, 1, 0),
    (0, 0, 1): (0, 0, 0, 1),
}


def _shift(tag, key: StratumKey, dn, dm, dk, dt) -> StratumKey:
    theta = 0 if tag is T.A1 else key.theta + dt
    return StratumKey(tag, key.n1 + dn, key.m1 + dm, key.m2 + dk, theta)


def _expand_stratum(key: StratumKey, variants: Variants) -> list[tuple[Fraction, StratumKey]]:
    tag = key.tag
    if tag is T.PA2:
        if key.theta <= 1:
            return [
                (Fraction(c), StratumKey(T.A1, key.n1 + dn, key.m1 + dm, key.m2 + dk, 0))
                for c, dn, dm, dk in _PA2_BASE[key.theta]
            ]
        # lambda^2 = x1 lambda - x2 on the projectivised tangent bundle
        return [
            (Fraction(1), _shift(T.PA2, key, 0, 1, 0, -1)),
            (Fraction(-1), _shift(T.PA2, key, 0, 0, 1, -2)),
        ]
    if tag is T.PA7:
        if key.theta:
            raise UndefinedNumberError("PA7 is only defined for theta = 0")
        rules = _PA7_RULES[variants.pa7]
    elif tag is T.PD6:
        rules = _PD6_RULES[variants.pd6]
    else:
        rules = _RULES[tag]
    return [(Fraction(c), _shift(t, key, dn, dm, dk, dt)) for c, t, dn, dm, dk, dt in rules]


@dataclass
class OnePointEngine:
    """Memoised evaluator for one-point numbers.

    The cache is the only mutable state.  Entries are immutable and inserted
    with ``dict.setdefault``, so concurrent readers at worst duplicate work.
    """

    variants: Variants = DEFAULT_VARIANTS
    _cache: dict = field(default_factory=dict, repr=False)
    computed: int = field(default=0, repr=False)

    def n_a1(self, n1: int, m1: int, m2: int) -> OnePointClass:
        StratumKey.make(T.A1, n1, m1, m2)
        row = _A1_TABLE.get((n1, m1, m2))
        return OnePointClass(row) if row else OnePointClass.zero()

    def expand(self, key: StratumKey) -> list[tuple[Fraction, StratumKey]]:
        """The terms of the recursion defining ``key`` (empty for A1)."""
        if key.tag is T.A1:
            return []
        return _expand_stratum(key, self.variants)

    def n_stratum(self, tag, n1: int = 0, m1: int = 0, m2: int = 0, theta: int = 0) -> OnePointClass:
        if isinstance(tag, StratumKey):
            key = StratumKey.make(*tag)
        else:
            key = StratumKey.make(tag, n1, m1, m2, theta)
        return self._value(key)

    def _value(self, key: StratumKey) -> OnePointClass:
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if key.tag is T.A1:
            val = self.n_a1(key.n1, key.m1, key.m2)
        else:
            val = OnePointClass.zero()
            for c, sub in _expand_stratum(key, self.variants):
                term = self._value(sub)
                if not term.is_zero():
                    val = val + c * term
        self.computed += 1
        return self._cache.setdefault(key, val)

    def one_point_indexed(self, sing: str, n1: int = 0, m1: int = 0, m2: int = 0) -> OnePointClass:
        """N(X, n1, m1, m2) for an unprojectivised singularity X."""
        if sing not in ONE_POINT_SINGULARITIES:
            raise ValueError(f"unknown singularity {sing!r}")
        if sing == "A1":
            return self.n_stratum(T.A1, n1, m1, m2)
        val = self.n_stratum("P" + sing, n1, m1, m2, 0)
        if sing == "D4":
            # the direction map PD4 -> D4 is three-to-one
            val = val / 3
        return val

    def value(self, key: Key) -> OnePointClass:
        if isinstance(key, IndexedKey):
            return self.one_point_indexed(*key)
        return self.n_stratum(key)

    def n_singularity(self, sing: str) -> OnePointClass:
        val = self.one_point_indexed(sing, 0, 0, 0)
        if not val.is_integral():
            raise ConsistencyError(f"N({sing}) is not integral: {val}")
        return val

    def cache_items(self) -> list[tuple[StratumKey, OnePointClass]]:
        return list(self._cache.items())

    def seed(self, items) -> None:
        """Preload cache entries, e.g. from a persisted dump."""
        for key, val in items:
            self._cache.setdefault(StratumKey.make(*key), val)

    def clear(self) -> None:
        self._cache.clear()
        self.computed = 0


_DEFAULT = OnePointEngine()


def default_engine() -> OnePointEngine:
    return _DEFAULT


def n_a1(n1: int, m1: int, m2: int) -> OnePointClass:
    return _DEFAULT.n_a1(n1, m1, m2)


def n_stratum(tag, n1: int = 0, m1: int = 0, m2: int = 0, theta: int = 0) -> OnePointClass:
    return _DEFAULT.n_stratum(tag, n1, m1, m2, theta)


def n_singularity(sing: str) -> OnePointClass:
    return _DEFAULT.n_singularity(sing)


def one_point_indexed(sing: str, n1: int = 0, m1: int = 0, m2: int = 0) -> OnePointClass:
    return _DEFAULT.one_point_indexed(sing, n1, m1, m2)
