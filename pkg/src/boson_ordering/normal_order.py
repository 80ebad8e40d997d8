"""Normal orderings N, N_p and N_omega of words by contraction enumeration.

Every contraction deletes its paired letters; what is left is sorted
creators-first into ``(a†)^v a^u``.  The three orderings differ only in the
weight each contraction carries, so all of them are computed from the fully
symbolic omega form.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping

from .contractions import DEFAULT_GUARD, enumerate_contractions, residual_counts
from .polyp import PolyP, parse_poly
from .weights import (
    WeightPolynomial,
    WeightSequence,
    contraction_weight_monomial,
    predefined_sequence,
    specialize,
)
from .words import Word, number_operator_word

MODELS = ("standard", "p", "omega")


class NormalForm:
    """Finite sum of ``coefficient * (a†)^v a^u``.

    Coefficients are :class:`WeightPolynomial` (model ``omega``),
    :class:`PolyP` (model ``p``) or ``int`` (model ``standard``).
    """

    def __init__(self, terms: Mapping[tuple[int, int], object], model: str = "omega"):
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        self.model = model
        self.terms = {k: c for k, c in terms.items() if not _is_zero(c)}

    def __getitem__(self, key: tuple[int, int]):
        return self.terms.get(key, _zero(self.model))

    def keys(self):
        return self.terms.keys()

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.model == other.model and self.terms == other.terms

    def __repr__(self):
        return f"NormalForm({self.model}: {self})"

    def sorted_keys(self) -> list[tuple[int, int]]:
        """Descending total power, creators first on ties."""
        return sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0], -k[1]))

    def specialize(self, seq: WeightSequence) -> "NormalForm":
        if self.model != "omega":
            raise ValueError("only omega normal forms carry symbolic weights")
        return NormalForm({k: specialize(c, seq) for k, c in self.terms.items()}, "p")

    def at_p(self, value) -> "NormalForm":
        """Evaluate the p-polynomial coefficients at a concrete value."""
        if self.model != "p":
            raise ValueError("at_p needs a p-model normal form")
        return NormalForm({k: c(value) for k, c in self.terms.items()}, "standard")

    def __str__(self):
        return self.render()

    def render(self, pretty: bool = True) -> str:
        if not self.terms:
            return "0"
        parts = [_render_term(self.terms[k], k, pretty) for k in self.sorted_keys()]
        return " + ".join(parts)

    def to_json_obj(self, word: str | None = None) -> dict:
        obj: dict = {"model": self.model}
        if word is not None:
            obj["word"] = word
        obj["terms"] = [{"creators": v, "annihilators": u,
                         "coefficient": _coeff_str(self.terms[(v, u)])}
                        for v, u in self.sorted_keys()]
        return obj

    def to_json(self, word: str | None = None) -> str:
        return json.dumps(self.to_json_obj(word), ensure_ascii=False)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "NormalForm":
        model = obj["model"]
        parse = {"omega": WeightPolynomial.parse, "p": parse_poly, "standard": int}[model]
        return cls({(t["creators"], t["annihilators"]): parse(t["coefficient"])
                    for t in obj["terms"]}, model)


def _is_zero(c) -> bool:
    if isinstance(c, (WeightPolynomial, PolyP)):
        return c.is_zero()
    return c == 0


def _zero(model: str):
    return {"omega": WeightPolynomial(), "p": PolyP(), "standard": 0}[model]


def _coeff_str(c) -> str:
    return str(c)


def _is_sum(cs: str) -> bool:
    # the '-' in the crossing symbol w-1 is not a sign
    return any(ch in "+-" and (i == 0 or cs[i - 1] != "w") for i, ch in enumerate(cs) if i)


def _monomial(v: int, u: int, pretty: bool) -> str:
    cre = "a†" if pretty else "d"
    parts = []
    if v:
        parts.append(cre if v == 1 else f"({cre})^{v}")
    if u:
        parts.append("a" if u == 1 else f"a^{u}")
    return " ".join(parts)


def _render_term(c, key, pretty: bool) -> str:
    mono = _monomial(*key, pretty)
    cs = _coeff_str(c)
    if _is_sum(cs):
        cs = f"({cs})"
    if not mono:
        return cs
    return mono if cs == "1" else f"{cs} {mono}"


def weighted_contractions(w: Word, guard: int | None = DEFAULT_GUARD) -> Iterator:
    """Yield ``((v, u), weight monomial)`` for every contraction of ``w``."""
    for c in enumerate_contractions(w, guard):
        yield residual_counts(w, c), contraction_weight_monomial(c)


def normal_order_omega(w: Word, guard: int | None = DEFAULT_GUARD) -> NormalForm:
    buckets: dict[tuple[int, int], dict] = {}
    for key, mono in weighted_contractions(w, guard):
        b = buckets.setdefault(key, {})
        b[mono] = b.get(mono, 0) + 1
    return NormalForm({k: WeightPolynomial(b) for k, b in buckets.items()}, "omega")


def normal_order_p(w: Word, guard: int | None = DEFAULT_GUARD) -> NormalForm:
    return normal_order_omega(w, guard).specialize(predefined_sequence("p"))


def normal_order_standard(w: Word, guard: int | None = DEFAULT_GUARD) -> NormalForm:
    omega = normal_order_omega(w, guard)
    unit = predefined_sequence("unit")
    return NormalForm({k: specialize(c, unit).constant() for k, c in omega.terms.items()},
                      "standard")


def normal_order(w: Word, model: str = "p", guard: int | None = DEFAULT_GUARD) -> NormalForm:
    if model == "omega":
        return normal_order_omega(w, guard)
    if model == "p":
        return normal_order_p(w, guard)
    if model == "standard":
        return normal_order_standard(w, guard)
    raise ValueError(f"unknown model {model!r}")


def normal_order_number_power_p(n: int) -> NormalForm:
    """N_p((a†a)^n) from the S_p recurrence, without enumerating contractions."""
    from .stirling import stirling_p_rec

    if n < 1:
        raise ValueError("n must be at least 1")
    return NormalForm({(k, k): stirling_p_rec(n, k) for k in range(1, n + 1)}, "p")


def closed_form_annihilators_then_creators(v: int, u: int) -> NormalForm:
    """The published falling-factorial expression for N_p(a^v (a†)^u).

    Kept only so that it can be compared against enumeration; it disagrees
    with the contraction sum already at ``v=1, u=2``.
    """

    def falling(x: int, i: int) -> int:
        out = 1
        if i >= 0:
            for t in range(i):
                out *= x - t
        else:
            for t in range(1, -i + 1):
                out *= x + t
        return out

    def binom(n: int, k: int) -> int:
        from math import comb
        return comb(n, k) if 0 <= k <= n else 0

    p = PolyP.p()
    terms: dict[tuple[int, int], PolyP] = {}
    for i in range(v + 1):
        bracket = PolyP.const(binom(v, i) * (u - i)) + (p + (v - 1)) * binom(v - 1, i - 1)
        coeff = bracket * falling(u - 1, i - 1)
        if u - i >= 0:
            key = (u - i, v - i)
            terms[key] = terms.get(key, PolyP()) + coeff
    return NormalForm(terms, "p")


def number_operator_normal_form(n: int, model: str = "p",
                                guard: int | None = DEFAULT_GUARD) -> NormalForm:
    return normal_order(number_operator_word(n), model, guard)
