"""Exact arithmetic for top-degree Chern classes on a surface X and on X x X.

Every top class on a surface is a rational combination of the four monomials
``c1^2, c1 x1, x1^2, x2`` where ``c1 = c1(L)`` and ``xi = ci(T*X)``.  A class on
``X x X`` is kept with its factor split: a 4x4 matrix of product terms plus a
one-point part for contributions supported on the diagonal.  Flattening to a
single polynomial forgets the split and is only used for display.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "Monomial2",
    "BASIS",
    "OnePointClass",
    "TwoPointClass",
    "FormalPolynomial",
    "SurfaceGeometry",
    "add",
    "tensor",
    "flatten",
    "evaluate",
    "format_polynomial",
]


class Monomial2(NamedTuple):
    """Monomial ``c1^a x1^b x2^c``."""

    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        """Weighted complex degree (x2 has weight 2)."""
        return self.a + self.b + 2 * self.c

    def times(self, other: "Monomial2") -> "Monomial2":
        return Monomial2(self.a + other.a, self.b + other.b, self.c + other.c)


BASIS: tuple[Monomial2, ...] = (
    Monomial2(2, 0, 0),
    Monomial2(1, 1, 0),
    Monomial2(0, 2, 0),
    Monomial2(0, 0, 1),
)
_INDEX = {m: i for i, m in enumerate(BASIS)}

Scalar = Union[int, Fraction]


def _q(x) -> Fraction:
    if type(x) is Fraction:
        return x
    # floats are refused outright; nothing in this package is approximate
    if isinstance(x, bool) or not isinstance(x, (int, Rational)):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class SurfaceGeometry:
    """The intersection numbers <c1^2>, <c1 x1>, <x1^2>, <x2> of a pair (X, L)."""

    c1_sq: Fraction
    c1_x1: Fraction
    x1_sq: Fraction
    x2: Fraction

    def __post_init__(self):
        for name in ("c1_sq", "c1_x1", "x1_sq", "x2"):
            object.__setattr__(self, name, _q(getattr(self, name)))

    def vector(self) -> tuple[Fraction, ...]:
        return (self.c1_sq, self.c1_x1, self.x1_sq, self.x2)

    def to_json(self) -> dict:
        out = {}
        for name, v in zip(("c1_sq", "c1_x1", "x1_sq", "x2"), self.vector()):
            out[name] = int(v) if v.denominator == 1 else str(v)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "SurfaceGeometry":
        try:
            vals = [data[k] for k in ("c1_sq", "c1_x1", "x1_sq", "x2")]
        except KeyError as exc:
            raise ValueError(f"geometry is missing field {exc.args[0]!r}") from None
        parsed = []
        for v in vals:
            if isinstance(v, str):
                v = Fraction(v)
            parsed.append(_q(v))
        return cls(*parsed)


@dataclass(frozen=True, init=False)
class OnePointClass:
    """A top class on X, stored as coefficients over ``BASIS``."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, coeffs: Iterable[Scalar] = (0, 0, 0, 0)):
        c = tuple(_q(x) for x in coeffs)
        if len(c) != 4:
            raise ValueError("a one-point class has exactly 4 coefficients")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "OnePointClass":
        return _ZERO1

    @classmethod
    def from_mapping(cls, terms: Mapping[Monomial2, Scalar]) -> "OnePointClass":
        c = [Fraction(0)] * 4
        for m, v in terms.items():
            c[_INDEX[Monomial2(*m)]] += _q(v)
        return cls(c)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, key) -> Fraction:
        if isinstance(key, tuple):
            key = _INDEX[Monomial2(*key)]
        return self.coeffs[key]

    def __add__(self, other: "OnePointClass") -> "OnePointClass":
        if not isinstance(other, OnePointClass):
            return NotImplemented
        return OnePointClass(x + y for x, y in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "OnePointClass") -> "OnePointClass":
        if not isinstance(other, OnePointClass):
            return NotImplemented
        return OnePointClass(x - y for x, y in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "OnePointClass":
        return OnePointClass(-x for x in self.coeffs)

    def __mul__(self, k: Scalar) -> "OnePointClass":
        if isinstance(k, (OnePointClass, TwoPointClass)):
            return NotImplemented
        k = _q(k)
        return OnePointClass(k * x for x in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, k: Scalar) -> "OnePointClass":
        k = _q(k)
        return OnePointClass(x / k for x in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coeffs)

    def evaluate(self, g: SurfaceGeometry) -> Fraction:
        return sum((x * y for x, y in zip(self.coeffs, g.vector())), Fraction(0))

    def to_polynomial(self) -> "FormalPolynomial":
        return FormalPolynomial({tuple(m): c for m, c in zip(BASIS, self.coeffs)})

    def __str__(self) -> str:
        return format_polynomial(self.to_polynomial())


_ZERO1 = OnePointClass()


@dataclass(frozen=True, init=False)
class TwoPointClass:
    """A top class on X x X.

    ``quad[i][j]`` is the coefficient of ``BASIS[i]`` (first factor) times
    ``BASIS[j]`` (second factor).  ``lin`` collects diagonal corrections.
    """

    quad: tuple[tuple[Fraction, ...], ...]
    lin: OnePointClass

    def __init__(self, quad=None, lin: OnePointClass | None = None):
        if quad is None:
            q = tuple((Fraction(0),) * 4 for _ in range(4))
        else:
            q = tuple(tuple(_q(x) for x in row) for row in quad)
            if len(q) != 4 or any(len(row) != 4 for row in q):
                raise ValueError("quad part must be 4x4")
        object.__setattr__(self, "quad", q)
        object.__setattr__(self, "lin", _ZERO1 if lin is None else lin)

    @classmethod
    def zero(cls) -> "TwoPointClass":
        return _ZERO2

    @classmethod
    def diagonal(cls, lin: OnePointClass) -> "TwoPointClass":
        """A class with no product part."""
        return cls(None, lin)

    def __add__(self, other: "TwoPointClass") -> "TwoPointClass":
        if not isinstance(other, TwoPointClass):
            return NotImplemented
        q = [[x + y for x, y in zip(r, s)] for r, s in zip(self.quad, other.quad)]
        return TwoPointClass(q, self.lin + other.lin)

    def __sub__(self, other: "TwoPointClass") -> "TwoPointClass":
        return self + (-other)

    def __neg__(self) -> "TwoPointClass":
        return TwoPointClass([[-x for x in r] for r in self.quad], -self.lin)

    def __mul__(self, k: Scalar) -> "TwoPointClass":
        if isinstance(k, (OnePointClass, TwoPointClass)):
            return NotImplemented
        k = _q(k)
        return TwoPointClass([[k * x for x in r] for r in self.quad], k * self.lin)

    __rmul__ = __mul__

    def __truediv__(self, k: Scalar) -> "TwoPointClass":
        k = _q(k)
        return TwoPointClass([[x / k for x in r] for r in self.quad], self.lin / k)

    def is_zero(self) -> bool:
        return self.lin.is_zero() and not any(any(r) for r in self.quad)

    def is_integral(self) -> bool:
        return self.lin.is_integral() and all(
            x.denominator == 1 for r in self.quad for x in r
        )

    def evaluate(self, g: SurfaceGeometry) -> Fraction:
        v = g.vector()
        total = Fraction(0)
        for i, row in enumerate(self.quad):
            for j, x in enumerate(row):
                if x:
                    total += v[i] * x * v[j]
        return total + self.lin.evaluate(g)

    def quad_rank(self) -> int:
        """Rank of the product part over Q."""
        rows = [list(r) for r in self.quad]
        rank = 0
        for col in range(4):
            pivot = next((r for r in range(rank, 4) if rows[r][col]), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for r in range(4):
                if r != rank and rows[r][col]:
                    f = rows[r][col] / rows[rank][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def to_polynomial(self) -> "FormalPolynomial":
        return flatten(self)


_ZERO2 = TwoPointClass()


class FormalPolynomial:
    """Rational combination of monomials ``c1^a x1^b x2^c`` of weighted degree 2 or 4.

    Only used to print and compare formulas.  Zero coefficients are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], Scalar] | None = None):
        clean: dict[Monomial2, Fraction] = {}
        for key, v in (terms or {}).items():
            m = Monomial2(*key)
            if min(m) < 0 or m.degree not in (2, 4):
                raise ValueError(f"monomial {tuple(m)} has weighted degree {m.degree}")
            clean[m] = clean.get(m, Fraction(0)) + _q(v)
        self._terms = {m: v for m, v in clean.items() if v}

    @property
    def terms(self) -> dict[Monomial2, Fraction]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FormalPolynomial") -> "FormalPolynomial":
        out = dict(self._terms)
        for m, v in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + v
        return FormalPolynomial(out)

    def __mul__(self, k: Scalar) -> "FormalPolynomial":
        k = _q(k)
        return FormalPolynomial({m: k * v for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"FormalPolynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    def coefficient(self, a: int, b: int, c: int) -> Fraction:
        return self._terms.get(Monomial2(a, b, c), Fraction(0))

    def to_json(self) -> dict:
        return {
            "terms": [
                {"c1": m.a, "x1": m.b, "x2": m.c, "coeff": str(v)}
                for m, v in sorted(self._terms.items(), key=lambda kv: _canonical_key(kv[0]))
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "FormalPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        out: dict[tuple[int, int, int], Fraction] = {}
        for t in data["terms"]:
            key = (int(t["c1"]), int(t["x1"]), int(t["x2"]))
            out[key] = out.get(key, Fraction(0)) + Fraction(str(t["coeff"]))
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "FormalPolynomial":
        """Read the text form produced by ``format_polynomial``; LaTeX is accepted too."""
        s = re.sub(r"\\frac\{(\d+)\}\{(\d+)\}", r"\1/\2", text)
        s = re.sub(r"\\[,;!]|\\\\|[~&{}]|\\quad", " ", s)
        s = re.sub(r"([cx])_(\d)", r"\1\2", s)
        s = s.replace("*", " ").strip()
        if s == "0":
            return cls()
        out: dict[tuple[int, int, int], Fraction] = {}
        pos = 0
        term_re = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*((?:(?:c1|x1|x2)(?:\^\d+)?\s*)+)")
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing sign before {s[pos:]!r}")
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                coeff = -coeff
            exps = {"c1": 0, "x1": 0, "x2": 0}
            for var, e in re.findall(r"(c1|x1|x2)(?:\^(\d+))?", m.group(3)):
                exps[var] += int(e) if e else 1
            key = (exps["c1"], exps["x1"], exps["x2"])
            out[key] = out.get(key, Fraction(0)) + coeff
            pos = m.end()
        return cls(out)


def _canonical_key(m: Monomial2):
    return (-m.a, -m.b, -m.c)


def _grouped_key(m: Monomial2):
    # grouping used when the two-point formulas are printed in their source layout
    return (m.c, m.b, m.degree)


def add(u: OnePointClass, v: OnePointClass) -> OnePointClass:
    return u + v


def tensor(u: OnePointClass, v: OnePointClass) -> TwoPointClass:
    """Pure product class u x v on X x X."""
    return TwoPointClass([[x * y for y in v.coeffs] for x in u.coeffs])


def flatten(t: TwoPointClass) -> FormalPolynomial:
    terms: dict[Monomial2, Fraction] = {}
    for i, row in enumerate(t.quad):
        for j, x in enumerate(row):
            if x:
                m = BASIS[i].times(BASIS[j])
                terms[m] = terms.get(m, Fraction(0)) + x
    for m, x in zip(BASIS, t.lin.coeffs):
        terms[m] = terms.get(m, Fraction(0)) + x
    return FormalPolynomial(terms)


def evaluate(cls: OnePointClass | TwoPointClass, g: SurfaceGeometry) -> Fraction:
    """Pair a class with [X] or [X x X].  Two-point classes are never flattened first."""
    return cls.evaluate(g)


_TEXT_VARS = ("c1", "x1", "x2")
_LATEX_VARS = ("c_1", "x_1", "x_2")


def _monomial_str(m: Monomial2, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def _coeff_str(c: Fraction, style: str) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if style == "latex":
        return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(
    p: FormalPolynomial | OnePointClass | TwoPointClass,
    style: str = "text",
    order: str = "canonical",
) -> str:
    """Render a polynomial deterministically.

    ``order="canonical"`` sorts by descending c1-, then x1-, then x2-degree;
    ``order="grouped"`` groups mixed-degree formulas by their x2- and x1-degree,
    which is how the two-point counts are usually printed.
    """
    if not isinstance(p, FormalPolynomial):
        p = p.to_polynomial()
    if style not in ("text", "latex"):
        raise ValueError(f"unknown style {style!r}")
    key = {"canonical": _canonical_key, "grouped": _grouped_key}[order]
    names = _LATEX_VARS if style == "latex" else _TEXT_VARS
    items = sorted(p.terms.items(), key=lambda kv: key(kv[0]))
    if not items:
        return "0"
    out = []
    for n, (m, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _monomial_str(m, names)
        term = body if mag == 1 else f"{_coeff_str(mag, style)} {body}"
        if n == 0:
            out.append(term if sign == "+" else f"-{term}")
        else:
            out.append(f"{sign} {term}")
    return " ".join(out)
