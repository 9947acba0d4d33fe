"""JSON dump of the engines' memo tables.

Layout::

    {"version": 1, "variants": {...},
     "one_point": {"PA2,0,0,0,0": ["12", "12", "2", "2"], ...},
     "two_point": {"A1PA2,0,0,0,0": {"quad": [[...] x4], "lin": [...]}, ...}}

A dump written under different recursion variants is ignored on load.
"""
from __future__ import annotations

import json
import logging
import os
from fractions import Fraction
from pathlib import Path

from .chern_ring import OnePointClass, TwoPointClass
from .strata import OnePointEngine, StratumKey
from .two_point import TwoPointEngine, TwoPointKey

ENV_VAR = "CHERN_COUNT_CACHE"
VERSION = 1

log = logging.getLogger(__name__)


def _parse_key(text: str, cls):
    tag, *nums = text.split(",")
    return cls.make(tag, *(int(n) for n in nums))


def dump(one: OnePointEngine, two: TwoPointEngine | None = None) -> dict:
    data = {
        "version": VERSION,
        "variants": one.variants.as_dict(),
        "one_point": {
            str(k): [str(x) for x in v.coeffs]
            for k, v in sorted(one.cache_items(), key=lambda kv: str(kv[0]))
        },
        "two_point": {},
    }
    if two is not None:
        data["two_point"] = {
            str(k): {"quad": [[str(x) for x in r] for r in v.quad], "lin": [str(x) for x in v.lin.coeffs]}
            for k, v in sorted(two.cache_items(), key=lambda kv: str(kv[0]))
        }
    return data


def load(data: dict, one: OnePointEngine, two: TwoPointEngine | None = None) -> bool:
    """Seed the engines from ``data``; returns False if the dump was not usable."""
    if data.get("version") != VERSION or data.get("variants") != one.variants.as_dict():
        return False
    one.seed(
        (_parse_key(k, StratumKey), OnePointClass(Fraction(x) for x in v))
        for k, v in data.get("one_point", {}).items()
    )
    if two is not None:
        two.seed(
            (
                _parse_key(k, TwoPointKey),
                TwoPointClass(
                    [[Fraction(x) for x in r] for r in v["quad"]],
                    OnePointClass(Fraction(x) for x in v["lin"]),
                ),
            )
            for k, v in data.get("two_point", {}).items()
        )
    return True


def cache_path() -> Path | None:
    p = os.environ.get(ENV_VAR)
    return Path(p) if p else None


def restore(one: OnePointEngine, two: TwoPointEngine | None = None, path: Path | None = None) -> bool:
    path = path or cache_path()
    if path is None or not path.exists():
        return False
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        return load(data, one, two)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return False


def persist(one: OnePointEngine, two: TwoPointEngine | None = None, path: Path | None = None) -> bool:
    path = path or cache_path()
    if path is None:
        return False
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(dump(one, two), sort_keys=True), encoding="utf-8")
    tmp.replace(path)
    return True
