"""Resultants of pairs of cyclotomic polynomials.

``cyclotomic_resultant(n, m)`` is the product of ``Phi_n`` over the roots of
``Phi_m``; the brute-force routine evaluates that product literally in
``Q(zeta_m)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .closedform import value_at_1, value_at_minus1
from .cyclofield import CycloElement, RootOfUnity, eval_phi_exact
from .errors import CyclotomyError
from .numtheory import euler_phi, factor


def _prime_power_ratio(n: int, m: int) -> int | None:
    """The prime ``p`` when ``n/m = p^k`` with ``k >= 1``, else ``None``."""
    if n % m:
        return None
    q = factor(n // m)
    return q.factors[0][0] if len(q.factors) == 1 else None


def resultant_closed(n: int, m: int) -> int:
    """``p^phi(m)`` when ``n/m`` is a power of the prime ``p``, otherwise 1; needs ``n > m > 1``."""
    if not n > m > 1:
        raise ValueError(f"resultant_closed needs n > m > 1, got n={n}, m={m}")
    p = _prime_power_ratio(n, m)
    return 1 if p is None else p ** euler_phi(factor(m))


def resultant_bruteforce(n: int, m: int) -> int:
    """``prod_{gcd(j, m) = 1} Phi_n(zeta_m^j)`` evaluated exactly in the field."""
    if n < 1 or m < 1 or n == m:
        raise ValueError(f"resultant_bruteforce needs distinct n, m >= 1, got n={n}, m={m}")
    acc = CycloElement.one(m)
    for j in range(1, max(m, 2)):
        if math.gcd(j, m) == 1:
            acc = acc * eval_phi_exact(n, RootOfUnity(m, j % m))
    if not acc.is_rational():
        raise CyclotomyError(f"resultant product for ({n}, {m}) is not rational: {acc}")
    q = Fraction(acc.rational_value())
    if q.denominator != 1:
        raise CyclotomyError(f"resultant product for ({n}, {m}) is not an integer: {q}")
    return q.numerator


def cyclotomic_resultant(n: int, m: int) -> int:
    """Product of ``Phi_n`` over the roots of ``Phi_m`` for any ``n, m >= 1``."""
    if n < 1 or m < 1:
        raise ValueError("indices must be positive")
    if n == m:
        return 0
    if m == 1:
        return value_at_1(n)
    if m == 2:
        return value_at_minus1(n)
    if n > m:
        return resultant_closed(n, m)
    # swap: rho(f, g) = (-1)^(deg f * deg g) rho(g, f)
    sign = (-1) ** (euler_phi(factor(n)) * euler_phi(factor(m)))
    if n == 1:
        back = value_at_1(m)
    elif n == 2:
        back = value_at_minus1(m)
    else:
        back = resultant_closed(m, n)
    return sign * back
