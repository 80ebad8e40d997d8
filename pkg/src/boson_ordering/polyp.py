"""Dense univariate polynomials in the parameter ``p`` with exact coefficients.

Coefficients are Python ints or :class:`fractions.Fraction`; a fraction with
denominator one is stored as an int so that integral polynomials compare and
hash like their integer counterparts.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _normalize(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, bool):
        return int(c)
    return c


class PolyP:
    """Polynomial ``c0 + c1 p + c2 p^2 + ...`` with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "PolyP":
        return cls((c,))

    @classmethod
    def p(cls) -> "PolyP":
        return cls((0, 1))

    @classmethod
    def monomial(cls, exponent: int, c: Scalar = 1) -> "PolyP":
        return cls([0] * exponent + [c])

    @classmethod
    def coerce(cls, x) -> "PolyP":
        if isinstance(x, PolyP):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, Rational):
            return cls.const(Fraction(x))
        raise TypeError(f"cannot interpret {x!r} as a polynomial in p")

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalize(acc) if isinstance(acc, (int, Fraction)) else acc

    def __add__(self, other):
        try:
            o = PolyP.coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyP(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyP(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            o = PolyP.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = PolyP.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return PolyP()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return PolyP(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = PolyP.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = PolyP.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash(("PolyP", self.coeffs))

    def __repr__(self):
        return f"PolyP({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs, "p")


def format_poly(coeffs: Sequence[Scalar], var: str) -> str:
    """Render highest power first, e.g. ``3p^2+3p+1``."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            if mag == 1:
                body = mono
            elif isinstance(mag, Fraction):
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_poly(text: str, var: str = "p") -> PolyP:
    """Inverse of :func:`format_poly` for integer or fraction coefficients."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms: dict[int, Scalar] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        i += 1
        j = i
        depth = 0
        while j < len(s) and (depth or s[j] not in "+-"):
            if s[j] == "(":
                depth += 1
            elif s[j] == ")":
                depth -= 1
            j += 1
        tok = s[i:j]
        i = j
        if var in tok:
            cpart, _, epart = tok.partition(var)
            e = int(epart[1:]) if epart.startswith("^") else 1
            if epart and not epart.startswith("^"):
                raise ValueError(f"bad term {tok!r}")
            cpart = cpart.strip("()")
            c = Fraction(cpart) if cpart else Fraction(1)
        else:
            e, c = 0, Fraction(tok.strip("()"))
        terms[e] = terms.get(e, 0) + sign * c
    deg = max(terms)
    return PolyP(terms.get(e, 0) for e in range(deg + 1))
