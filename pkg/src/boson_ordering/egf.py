"""Truncated power series in x whose coefficients are polynomials in p and y.

Only what is needed to expand the integral representations of the S_p
generating functions is provided: ring operations, ``exp`` of a series
without constant term, formal integration and differentiation.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .polyp import PolyP


class BivariateCoeff:
    """Sparse polynomial in p and y; keys are ``(power of p, power of y)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int] = None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c) -> "BivariateCoeff":
        return cls({(0, 0): c})

    @classmethod
    def p(cls) -> "BivariateCoeff":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariateCoeff":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BivariateCoeff") -> "BivariateCoeff":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariateCoeff(out)

    def __neg__(self):
        return BivariateCoeff({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "BivariateCoeff":
        if not isinstance(other, BivariateCoeff):
            return BivariateCoeff({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c1 in self.terms.items():
            for (d, e), c2 in other.terms.items():
                key = (a + d, b + e)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariateCoeff(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariateCoeff.const(other)
        if not isinstance(other, BivariateCoeff):
            return NotImplemented
        return self.terms == other.terms

    def y_part(self, k: int) -> PolyP:
        """Coefficient of ``y^k`` as a polynomial in p."""
        deg = max((a for a, b in self.terms if b == k), default=-1)
        return PolyP(self.terms.get((a, k), 0) for a in range(deg + 1))

    def at(self, p=None, y=None) -> "BivariateCoeff":
        """Substitute numbers for p and/or y."""
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms.items():
            if p is not None:
                c, a = c * Fraction(p) ** a, 0
            if y is not None:
                c, b = c * Fraction(y) ** b, 0
            out[(a, b)] = out.get((a, b), 0) + c
        return BivariateCoeff(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(s for s in (
                "" if a == 0 else ("p" if a == 1 else f"p^{a}"),
                "" if b == 0 else ("y" if b == 1 else f"y^{b}")) if s)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return "+".join(parts).replace("+-", "-")

    __repr__ = __str__


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    """``sum_{n <= order} c_n x^n`` with ordinary (not factorial-scaled) coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        cs = [c if isinstance(c, BivariateCoeff) else BivariateCoeff.const(c) for c in coeffs]
        cs = cs[: order + 1]
        cs += [BivariateCoeff() for _ in range(order + 1 - len(cs))]
        self.order = order
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def exp_linear(cls, rate: BivariateCoeff, order: int) -> "TruncatedSeries":
        """``e^(rate * x)``."""
        cs, term = [], BivariateCoeff.const(1)
        for n in range(order + 1):
            cs.append(term * Fraction(1, factorial(n)))
            term = term * rate
        return cls(cs, order)

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries([a * c for a in self.coeffs], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __getitem__(self, n: int) -> BivariateCoeff:
        return self.coeffs[n]

    def __repr__(self):
        body = " + ".join(f"({c})x^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero())
        return f"TruncatedSeries[{self.order}]({body or '0'})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    n = a.order
    out = [BivariateCoeff() for _ in range(n + 1)]
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(out, n)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the top coefficient becomes zero."""
    cs = [a.coeffs[n] * n for n in range(1, a.order + 1)]
    return TruncatedSeries(cs, a.order)


def series_integrate(a: TruncatedSeries) -> TruncatedSeries:
    """``c_n x^n -> c_n x^(n+1) / (n+1)`` with zero constant term; ``c_order`` is dropped."""
    cs = [BivariateCoeff()] + [a.coeffs[n] * Fraction(1, n + 1) for n in range(a.order)]
    return TruncatedSeries(cs, a.order)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for ``a(0) = 0``, solving ``f' = a' f`` one degree at a time."""
    if not a.coeffs[0].is_zero():
        raise SeriesError("exp needs a series with zero constant term")
    n = a.order
    da = [a.coeffs[k] * k for k in range(n + 1)]  # k * a_k
    f = [BivariateCoeff.const(1)] + [BivariateCoeff() for _ in range(n)]
    for m in range(1, n + 1):
        acc = BivariateCoeff()
        for k in range(1, m + 1):
            if not da[k].is_zero() and not f[m - k].is_zero():
                acc = acc + da[k] * f[m - k]
        f[m] = acc * Fraction(1, m)
    return TruncatedSeries(f, n)


def egf_Spk(k: int, order: int) -> TruncatedSeries:
    """``int_0^x e^(pt) (e^t - 1)^(k-1) / (k-1)! dt``."""
    if k < 1 or order < k:
        raise SeriesError("need k >= 1 and order >= k")
    one = BivariateCoeff.const(1)
    em1 = TruncatedSeries.exp_linear(one, order) - TruncatedSeries.one(order)
    integrand = TruncatedSeries.exp_linear(BivariateCoeff.p(), order)
    for _ in range(k - 1):
        integrand = integrand * em1
    return series_integrate(integrand.scale(Fraction(1, factorial(k - 1))))


def egf_Sxy(order: int) -> TruncatedSeries:
    """``int_0^x y e^(pt) exp(y (e^t - 1)) dt``."""
    if order < 1:
        raise SeriesError("order must be at least 1")
    y = BivariateCoeff.y()
    em1 = TruncatedSeries.exp_linear(BivariateCoeff.const(1), order) - TruncatedSeries.one(order)
    inner = series_exp(em1.scale(y))
    integrand = (TruncatedSeries.exp_linear(BivariateCoeff.p(), order) * inner).scale(y)
    return series_integrate(integrand)


def extract_egf_coefficient(s: TruncatedSeries, n: int, k: int | None = None):
    """``n! [x^n] s``; with ``k`` given, the ``y^k`` part as a polynomial in p."""
    if n > s.order:
        raise SeriesError(f"coefficient {n} beyond truncation order {s.order}")
    c = s.coeffs[n] * factorial(n)
    return c if k is None else c.y_part(k)
