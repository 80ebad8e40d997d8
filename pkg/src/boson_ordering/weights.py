"""Symbolic contraction weights.

Symbols are indexed by integers the same way the weight sequence is:
``-1`` is the crossing weight and ``d >= 1`` the weight of a contracted pair
at distance ``d``.  The weight of the null contraction is the unit monomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .contractions import Contraction, crossing_number
from .polyp import PolyP

CROSSING = -1

Value = Union[int, Fraction, PolyP]


def symbol_name(s: int) -> str:
    if s == CROSSING:
        return "w-1"
    if s < 1:
        raise ValueError(f"invalid weight symbol index {s}")
    return f"w{s}"


def parse_symbol(name: str) -> int:
    if not name.startswith("w"):
        raise ValueError(f"bad weight symbol {name!r}")
    s = int(name[1:])
    if s != CROSSING and s < 1:
        raise ValueError(f"bad weight symbol {name!r}")
    return s


@dataclass(frozen=True, order=True)
class WeightMonomial:
    """Product of weight symbols; ``exponents`` is sorted by symbol index."""

    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> "WeightMonomial":
        for s, e in exps.items():
            symbol_name(s)
            if e < 0:
                raise ValueError("negative exponent")
        return cls(tuple(sorted((s, e) for s, e in exps.items() if e)))

    @classmethod
    def symbol(cls, s: int, e: int = 1) -> "WeightMonomial":
        return cls.from_dict({s: e})

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def __mul__(self, other: "WeightMonomial") -> "WeightMonomial":
        d = self.as_dict()
        for s, e in other.exponents:
            d[s] = d.get(s, 0) + e
        return WeightMonomial(tuple(sorted(d.items())))

    def __str__(self):
        if not self.exponents:
            return "1"
        return "*".join(symbol_name(s) if e == 1 else f"{symbol_name(s)}^{e}"
                        for s, e in self.exponents)


UNIT = WeightMonomial()


def contraction_weight_monomial(c: Contraction) -> WeightMonomial:
    exps: dict[int, int] = {}
    x = crossing_number(c)
    if x:
        exps[CROSSING] = x
    for e in c.edges:
        exps[e.distance] = exps.get(e.distance, 0) + 1
    return WeightMonomial(tuple(sorted(exps.items())))


class WeightPolynomial:
    """Sparse polynomial in the weight symbols with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[WeightMonomial, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[WeightMonomial, int] = {}
        for m, c in items:
            acc[m] = acc.get(m, 0) + c
        self.terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def const(cls, c: int) -> "WeightPolynomial":
        return cls({UNIT: c})

    @classmethod
    def symbol(cls, s: int) -> "WeightPolynomial":
        return cls({WeightMonomial.symbol(s): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def _coerce(self, other) -> "WeightPolynomial":
        if isinstance(other, WeightPolynomial):
            return other
        if isinstance(other, WeightMonomial):
            return WeightPolynomial({other: 1})
        if isinstance(other, int):
            return WeightPolynomial.const(other)
        raise TypeError(f"cannot combine WeightPolynomial with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return WeightPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return WeightPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[WeightMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return WeightPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = WeightPolynomial.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[WeightMonomial, int]]:
        """By total degree, then exponent vectors (crossing, w1, w2, ...) descending."""
        symbols = sorted({s for m in self.terms for s, _ in m.exponents})

        def key(mc):
            exps = mc[0].as_dict()
            return (mc[0].degree, [-exps.get(s, 0) for s in symbols])

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not m.exponents:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}{m}"
            out += (sign if out or sign == "-" else "") + body
        return out

    def __repr__(self):
        return f"WeightPolynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "WeightPolynomial":
        """Inverse of ``str``, e.g. ``3w1^2+2w1*w3+w-1*w3^2``."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        out: dict[WeightMonomial, int] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            i += 1
            j = i
            # a '-' directly after 'w' belongs to the symbol w-1
            while j < len(s) and not (s[j] in "+-" and s[j - 1] != "w"):
                j += 1
            tok, i = s[i:j], j
            k = 0
            while k < len(tok) and tok[k].isdigit():
                k += 1
            coeff = int(tok[:k]) if k else 1
            exps: dict[int, int] = {}
            rest = tok[k:]
            if rest:
                for factor in rest.split("*"):
                    name, _, e = factor.partition("^")
                    sym = parse_symbol(name)
                    exps[sym] = exps.get(sym, 0) + (int(e) if e else 1)
            m = WeightMonomial.from_dict(exps)
            out[m] = out.get(m, 0) + sign * coeff
        return cls(out)

    def to_json_obj(self) -> dict:
        return {"monomials": [
            {"exponents": {symbol_name(s): e for s, e in m.exponents}, "coeff": str(c)}
            for m, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "WeightPolynomial":
        return cls({
            WeightMonomial.from_dict({parse_symbol(k): int(v) for k, v in t["exponents"].items()}):
                int(t["coeff"])
            for t in obj["monomials"]})

    @classmethod
    def from_json(cls, text: str) -> "WeightPolynomial":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class WeightSequence:
    """Concrete values for the weight symbols.

    ``distance_default`` applies to every distance not listed in ``overrides``.
    """

    crossing: Value = 1
    distance_default: Value = 1
    overrides: Mapping[int, Value] = field(default_factory=dict)

    def distance(self, d: int) -> Value:
        if d < 1:
            raise ValueError("distance must be at least 1")
        return self.overrides.get(d, self.distance_default)

    def value(self, s: int) -> Value:
        return self.crossing if s == CROSSING else self.distance(s)


def predefined_sequence(name: str) -> WeightSequence:
    """``unit`` (all ones), ``p`` (adjacent pairs weigh p) or ``noncrossing``."""
    if name == "unit":
        return WeightSequence(1, 1)
    if name == "p":
        return WeightSequence(1, 1, {1: PolyP.p()})
    if name == "noncrossing":
        return WeightSequence(0, 1)
    raise ValueError(f"unknown weight sequence {name!r}; choose unit, p or noncrossing")


def specialize(poly: WeightPolynomial, seq: WeightSequence | Callable[[int], Value]) -> PolyP:
    """Substitute values for the symbols; the result is exact."""
    value = seq.value if isinstance(seq, WeightSequence) else seq
    total = PolyP()
    for m, c in poly.terms.items():
        term = PolyP.const(c)
        for s, e in m.exponents:
            term = term * PolyP.coerce(value(s)) ** e
        total = total + term
    return total
