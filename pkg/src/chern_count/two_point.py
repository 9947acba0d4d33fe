"""Two-point numbers: one node at a first point and a singularity X at a second.

N(A1A1, n1, m1, m2) and N(A1PX, n1, m1, m2, theta) are classes on X x X.  The
cutting classes c1, x1, x2 and lambda live on the second factor.  The product
part of every value is N(A1) (first factor) tensored with a one-point number
(second factor); whatever the recursions subtract for the locus where the two
points collide goes into the diagonal part.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from .chern_ring import OnePointClass, TwoPointClass, tensor
from .strata import (
    DEFAULT_VARIANTS,
    ConsistencyError,
    IndexedKey,
    OnePointEngine,
    StratumKey,
    StratumTag,
    UndefinedNumberError,
    Variants,
)

__all__ = [
    "TwoPointTag",
    "TwoPointKey",
    "TWO_POINT_SINGULARITIES",
    "TwoPointEngine",
    "n_a1a1",
    "n_two_point",
    "n_pair",
    "default_engine",
]


class TwoPointTag(str, enum.Enum):
    A1A1 = "A1A1"
    A1PA2 = "A1PA2"
    A1PA3 = "A1PA3"
    A1PA4 = "A1PA4"
    A1PA5 = "A1PA5"
    A1PA6 = "A1PA6"
    A1PD4 = "A1PD4"
    A1PD5 = "A1PD5"
    A1PD6 = "A1PD6"
    A1PE6 = "A1PE6"

    @property
    def codim(self) -> int:
        return 1 + int(self.value[-1])

    def __str__(self) -> str:
        return self.value


class TwoPointKey(NamedTuple):
    tag: TwoPointTag
    n1: int
    m1: int
    m2: int
    theta: int = 0

    @classmethod
    def make(cls, tag, n1: int = 0, m1: int = 0, m2: int = 0, theta: int = 0) -> "TwoPointKey":
        tag = TwoPointTag(tag)
        for name, v in (("n1", n1), ("m1", m1), ("m2", m2), ("theta", theta)):
            if not isinstance(v, int) or v < 0:
                raise UndefinedNumberError(f"{name} must be a non-negative integer, got {v!r}")
        if tag is TwoPointTag.A1A1 and theta:
            raise UndefinedNumberError("A1A1 is not projectivised; theta must be 0")
        return cls(tag, n1, m1, m2, theta)

    @property
    def degree(self) -> int:
        return self.n1 + self.m1 + 2 * self.m2

    def __str__(self) -> str:
        return f"{self.tag.value},{self.n1},{self.m1},{self.m2},{self.theta}"


# second-point singularities paired with a node, in the usual table order
TWO_POINT_SINGULARITIES = ("A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6")

P = TwoPointTag
S = StratumTag
Term = tuple[Fraction, Union[TwoPointKey, StratumKey, IndexedKey]]

# (coefficient, tag, dn1, dm1, dm2, dtheta); tag is a TwoPointTag (recurse) or
# a StratumTag (one-point number at the same indices, a diagonal correction)
_RULES = {
    P.A1PA3: [
        (3, P.A1PA2, 0, 0, 0, 1), (1, P.A1PA2, 0, 0, 0, 0), (1, P.A1PA2, 1, 0, 0, 0),
    ],
    P.A1PA4: [
        (2, P.A1PA3, 0, 0, 0, 1), (2, P.A1PA3, 0, 1, 0, 0),
        (2, P.A1PA3, 0, 0, 0, 0), (2, P.A1PA3, 1, 0, 0, 0),
        (-2, S.PA5, 0, 0, 0, 0),
    ],
    P.A1PA5: [
        (1, P.A1PA4, 0, 0, 0, 1), (4, P.A1PA4, 0, 1, 0, 0),
        (3, P.A1PA4, 0, 0, 0, 0), (3, P.A1PA4, 1, 0, 0, 0),
        (-2, P.A1PD5, 0, 0, 0, 0),
        (-2, S.PA6, 0, 0, 0, 0), (-5, S.PE6, 0, 0, 0, 0),
    ],
    P.A1PA6: [
        (6, P.A1PA5, 0, 1, 0, 0), (4, P.A1PA5, 0, 0, 0, 0), (4, P.A1PA5, 1, 0, 0, 0),
        (-4, P.A1PD6, 0, 0, 0, 0), (-3, P.A1PE6, 0, 0, 0, 0),
        (-2, S.PA7, 0, 0, 0, 0), (-6, S.PE7, 0, 0, 0, 0),
    ],
    P.A1PD5: [
        (1, P.A1PD4, 0, 0, 0, 1), (1, P.A1PD4, 0, 1, 0, 0),
        (1, P.A1PD4, 0, 0, 0, 0), (1, P.A1PD4, 1, 0, 0, 0),
        (-2, S.PD6, 0, 0, 0, 0),
    ],
    P.A1PD6: [
        (4, P.A1PD5, 0, 0, 0, 1), (1, P.A1PD5, 0, 0, 0, 0), (1, P.A1PD5, 1, 0, 0, 0),
        (-2, S.PD7, 0, 0, 0, 0), (-1, S.PE7, 0, 0, 0, 0),
    ],
    P.A1PE6: [
        (2, P.A1PD5, 0, 1, 0, 0), (-1, P.A1PD5, 0, 0, 0, 1),
        (1, P.A1PD5, 0, 0, 0, 0), (1, P.A1PD5, 1, 0, 0, 0),
        (-1, S.PE7, 0, 0, 0, 0),
    ],
}

_A1PA3_CORRECTION = {"proof": S.PA4, "statement": S.PA5}

# A1PA2 from A1A1: (coefficient, dn1, dm1, dm2), same shape as the one-point PA2 base
_A1PA2_BASE = {
    0: [(2, 0, 0, 0), (2, 0, 1, 0), (2, 1, 0, 0)],
    1: [(1, 0, 0, 0), (2, 1, 0, 0), (1, 2, 0, 0), (3, 0, 1, 0), (3, 1, 1, 0), (2, 0, 2, 0)],
}


def _shift(tag, key, dn, dm, dk, dt):
    if isinstance(tag, TwoPointTag):
        theta = 0 if tag is P.A1A1 else key.theta + dt
        return TwoPointKey(tag, key.n1 + dn, key.m1 + dm, key.m2 + dk, theta)
    return StratumKey(tag, key.n1 + dn, key.m1 + dm, key.m2 + dk, key.theta + dt)


def _theta_reduction(key: TwoPointKey) -> list[Term]:
    return [
        (Fraction(1), _shift(key.tag, key, 0, 1, 0, -1)),
        (Fraction(-1), _shift(key.tag, key, 0, 0, 1, -2)),
    ]


def _expand(key: TwoPointKey, variants: Variants) -> list[Term]:
    tag, n1, m1, m2, th = key
    if tag is P.A1A1:
        return [
            (Fraction(-1), StratumKey(S.A1, n1, m1, m2, 0)),
            (Fraction(-1), StratumKey(S.A1, n1 + 1, m1, m2, 0)),
            (Fraction(-3), IndexedKey("A2", n1, m1, m2)),
        ]
    if tag is P.A1PA2:
        if th > 1:
            return _theta_reduction(key)
        terms: list[Term] = [
            (Fraction(c), TwoPointKey(P.A1A1, n1 + dn, m1 + dm, m2 + dk, 0))
            for c, dn, dm, dk in _A1PA2_BASE[th]
        ]
        terms.append((Fraction(-2), StratumKey(S.PA3, n1, m1, m2, th)))
        if th == 1:
            terms.append((Fraction(-3), IndexedKey("D4", n1, m1, m2)))
        return terms
    if tag is P.A1PD4:
        if th == 0:
            terms = [
                (Fraction(2), TwoPointKey(P.A1PA3, n1, m1 + 1, m2, 0)),
                (Fraction(-2), TwoPointKey(P.A1PA3, n1, m1, m2, 1)),
                (Fraction(1), TwoPointKey(P.A1PA3, n1, m1, m2, 0)),
                (Fraction(1), TwoPointKey(P.A1PA3, n1 + 1, m1, m2, 0)),
            ]
            if variants.a1pd4 == "statement":
                terms.append((Fraction(-2), StratumKey(S.PD5, n1, m1, m2, 0)))
            else:
                terms.append((Fraction(-2), IndexedKey("D5", n1, m1, m2)))
            return terms
        if th == 1:
            return [
                (Fraction(1, 3), TwoPointKey(P.A1PD4, n1, m1, m2, 0)),
                (Fraction(1), TwoPointKey(P.A1PD4, n1, m1 + 1, m2, 0)),
                (Fraction(1, 3), TwoPointKey(P.A1PD4, n1 + 1, m1, m2, 0)),
            ]
        return _theta_reduction(key)
    if tag is P.A1PA3:
        rules = _RULES[tag] + [(-2, _A1PA3_CORRECTION[variants.a1pa3], 0, 0, 0, 0)]
    else:
        rules = _RULES[tag]
    return [(Fraction(c), _shift(t, key, dn, dm, dk, dt)) for c, t, dn, dm, dk, dt in rules]


@dataclass
class TwoPointEngine:
    """Memoised evaluator for two-point numbers.

    Shares a ``OnePointEngine`` (built with the same variants unless given)
    for the diagonal corrections and for the second-factor classes.
    """

    variants: Variants = DEFAULT_VARIANTS
    one_point: OnePointEngine | None = None
    _cache: dict = field(default_factory=dict, repr=False)
    _needed: frozenset | None = field(default=None, repr=False)
    computed: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.one_point is None:
            self.one_point = OnePointEngine(self.variants)
        elif self.one_point.variants != self.variants:
            raise ValueError("one-point engine was built with different variants")

    def expand(self, key: TwoPointKey) -> list[Term]:
        """Recursion terms for ``key``.  For A1A1 only the diagonal part is listed."""
        return _expand(key, self.variants)

    def n_a1a1(self, n1: int, m1: int, m2: int) -> TwoPointClass:
        return self.n_two_point(P.A1A1, n1, m1, m2)

    def n_two_point(self, tag, n1: int = 0, m1: int = 0, m2: int = 0, theta: int = 0) -> TwoPointClass:
        if isinstance(tag, TwoPointKey):
            key = TwoPointKey.make(*tag)
        else:
            key = TwoPointKey.make(tag, n1, m1, m2, theta)
        return self._value(key)

    def _value(self, key: TwoPointKey) -> TwoPointClass:
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        one = self.one_point
        if key.tag is P.A1A1:
            node = one.n_a1(0, 0, 0)
            val = tensor(node, one.n_a1(key.n1, key.m1, key.m2))
        else:
            val = TwoPointClass.zero()
        lin = OnePointClass.zero()
        for c, sub in _expand(key, self.variants):
            term = self._value(sub) if isinstance(sub, TwoPointKey) else one.value(sub)
            if term.is_zero():
                continue
            if isinstance(sub, TwoPointKey):
                val = val + c * term
            else:
                lin = lin + c * term
        val = val + TwoPointClass.diagonal(lin)
        self.computed += 1
        return self._cache.setdefault(key, val)

    def n_pair(self, sing: str) -> TwoPointClass:
        """N(A1 X) for X in ``TWO_POINT_SINGULARITIES``; ``sing`` may be "D4" or "A1D4"."""
        base = sing[2:] if len(sing) > 2 and sing.startswith("A1") else sing
        if base not in TWO_POINT_SINGULARITIES:
            raise ValueError(f"unsupported two-point singularity {sing!r}")
        if base == "A1":
            return self.n_a1a1(0, 0, 0)
        val = self.n_two_point("A1P" + base, 0, 0, 0, 0)
        if base == "D4":
            val = val / 3
        if not val.is_integral():
            raise ConsistencyError(f"N(A1{base}) is not integral")
        return val

    def needed_keys(self) -> frozenset:
        """Every two-point key reached while computing the ten pair counts."""
        if self._needed is None:
            seen: set[TwoPointKey] = set()
            stack = [
                TwoPointKey(P.A1A1 if b == "A1" else TwoPointTag("A1P" + b), 0, 0, 0, 0)
                for b in TWO_POINT_SINGULARITIES
            ]
            while stack:
                key = stack.pop()
                if key in seen:
                    continue
                seen.add(key)
                stack.extend(k for _, k in _expand(key, self.variants) if isinstance(k, TwoPointKey))
            self._needed = frozenset(seen)
        return self._needed

    def is_extrapolated(self, key: TwoPointKey) -> bool:
        """True for keys that the recursions define but no pair count uses."""
        return TwoPointKey.make(*key) not in self.needed_keys()

    def describe(self, key: TwoPointKey) -> dict:
        """Value plus the metadata reported alongside it."""
        key = TwoPointKey.make(*key)
        return {
            "key": str(key),
            "value": self._value(key),
            "extrapolated": self.is_extrapolated(key),
            "variants": self.variants.as_dict(),
        }

    def cache_items(self) -> list[tuple[TwoPointKey, TwoPointClass]]:
        return list(self._cache.items())

    def seed(self, items) -> None:
        for key, val in items:
            self._cache.setdefault(TwoPointKey.make(*key), val)

    def clear(self) -> None:
        self._cache.clear()
        self.computed = 0


_DEFAULT: TwoPointEngine | None = None


def default_engine() -> TwoPointEngine:
    global _DEFAULT
    if _DEFAULT is None:
        from .strata import default_engine as _one

        _DEFAULT = TwoPointEngine(DEFAULT_VARIANTS, _one())
    return _DEFAULT


def n_a1a1(n1: int, m1: int, m2: int) -> TwoPointClass:
    return default_engine().n_a1a1(n1, m1, m2)


def n_two_point(tag, n1: int = 0, m1: int = 0, m2: int = 0, theta: int = 0) -> TwoPointClass:
    return default_engine().n_two_point(tag, n1, m1, m2, theta)


def n_pair(sing: str) -> TwoPointClass:
    return default_engine().n_pair(sing)
