"""Stirling and Bell numbers: classical, p-refined by rises, triple-indexed, omega-weighted.

``S_p(n, k) = sum_m S(n, k; m) p^m`` where ``S(n, k; m)`` counts partitions
of [n] into k blocks with m rises.  The recurrence, the alternating-sum
closed form and contraction enumeration are three independent routes to the
same polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .contractions import DEFAULT_GUARD, enumerate_contractions
from .polyp import PolyP
from .weights import WeightPolynomial, contraction_weight_monomial
from .words import number_operator_word


class IntegralityError(AssertionError):
    """The closed form produced a non-integer coefficient."""


# rows[n][k] for 0 <= k <= n, grown on demand
_S2_ROWS: list[list[int]] = [[1]]


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    while len(_S2_ROWS) <= n:
        prev = _S2_ROWS[-1]
        m = len(prev)
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = j * (prev[j] if j < m else 0) + prev[j - 1]
        _S2_ROWS.append(row)
    return _S2_ROWS[n][k]


def bell_number(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def bell_polynomial(n: int, x):
    """``sum_k S(n, k) x^k``; ``x`` may be an int, Fraction or PolyP."""
    total = 0
    for k in range(n + 1):
        s = stirling2(n, k)
        if s:
            total = total + s * x**k
    return total


_SP_ROWS: list[list[PolyP]] = [[], [PolyP(), PolyP.const(1)]]


def stirling_p_rec(n: int, k: int) -> PolyP:
    """``S_p(n, k) = (k - 1 + p) S_p(n-1, k) + S_p(n-1, k-1)``, ``S_p(n, 1) = p^(n-1)``."""
    if n < 1 or k < 1 or k > n:
        return PolyP()
    while len(_SP_ROWS) <= n:
        prev = _SP_ROWS[-1]
        m = len(_SP_ROWS)
        row = [PolyP()] * (m + 1)
        row[1] = PolyP.monomial(m - 1)
        for j in range(2, m + 1):
            above = prev[j] if j < len(prev) else PolyP()
            row[j] = PolyP((j - 1, 1)) * above + prev[j - 1]
        _SP_ROWS.append(row)
    return _SP_ROWS[n][k]


def stirling_p_docagne(n: int, k: int) -> PolyP:
    """Alternating binomial sum over ``(p + j)^(n-1)``, with exact rationals."""
    if not (n >= k >= 1):
        raise ValueError("need n >= k >= 1")
    total = PolyP()
    for j in range(k):
        total = total + (-1) ** j * comb(k - 1, j) * PolyP((j, 1)) ** (n - 1)
    result = total * Fraction((-1) ** (k - 1), factorial(k - 1))
    if not result.is_integral():
        raise IntegralityError(f"S_p({n},{k}) has non-integer coefficients: {result}")
    return result


_KNM_ROWS: list[dict[tuple[int, int], int]] = [{(0, 0): 1}]


def stirling_knm(n: int, k: int, m: int) -> int:
    """Partitions of [n] into k blocks with m rises.

    ``S(n,k;m) = (k-1) S(n-1,k;m) + S(n-1,k;m-1) + S(n-1,k-1;m)``.
    """
    if n < 0 or k < 0 or m < 0:
        return 0
    while len(_KNM_ROWS) <= n:
        prev = _KNM_ROWS[-1]
        row: dict[tuple[int, int], int] = {}
        nn = len(_KNM_ROWS)
        for kk in range(1, nn + 1):
            for mm in range(0, nn - kk + 1):
                val = ((kk - 1) * prev.get((kk, mm), 0)
                       + prev.get((kk, mm - 1), 0)
                       + prev.get((kk - 1, mm), 0))
                if val:
                    row[(kk, mm)] = val
        _KNM_ROWS.append(row)
    return _KNM_ROWS[n].get((k, m), 0)


def stirling_p_from_knm(n: int, k: int) -> PolyP:
    return PolyP(stirling_knm(n, k, m) for m in range(max(n - k, 0) + 1))


def stirling_omega(n: int, k: int, guard: int | None = DEFAULT_GUARD) -> WeightPolynomial:
    """Weighted sum over contractions of (a†a)^n with exactly n - k edges."""
    if n < 1 or not 1 <= k <= n:
        return WeightPolynomial()
    return stirling_omega_row(n, guard)[k]


def stirling_omega_row(n: int, guard: int | None = DEFAULT_GUARD) -> dict[int, WeightPolynomial]:
    """All of ``S_omega(n, k)`` for ``1 <= k <= n`` from a single enumeration."""
    buckets: dict[int, dict] = {k: {} for k in range(1, n + 1)}
    for c in enumerate_contractions(number_operator_word(n), guard):
        b = buckets[n - len(c.edges)]
        mono = contraction_weight_monomial(c)
        b[mono] = b.get(mono, 0) + 1
    return {k: WeightPolynomial(b) for k, b in buckets.items()}


def bell_omega(n: int, guard: int | None = DEFAULT_GUARD) -> WeightPolynomial:
    total = WeightPolynomial()
    for poly in stirling_omega_row(n, guard).values():
        total = total + poly
    return total


def p_zero_row_sum(n: int) -> int:
    """``sum_k S_p(n, k)`` at ``p = 0``."""
    return sum(stirling_p_rec(n, k)(0) for k in range(1, n + 1))
