"""Closed-form values of ``Phi_n`` at roots of unity.

The tables for orders 1 through 6, the ``p = +-1 (mod m)`` reductions, the
coprime reduction, reality and sign results.  All values come back as exact
:class:`~cyclotomy.cyclofield.CycloElement` objects so they can be compared
with :func:`~cyclotomy.cyclofield.eval_phi_exact` without tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .cyclofield import CycloElement, RootOfUnity, as_root, eval_phi_exact
from .errors import CyclotomyError, InapplicableError
from .numtheory import (
    FactoredInt,
    as_factored,
    big_omega,
    divisors,
    euler_phi,
    factor,
    mangoldt_exp,
    moebius,
    phi_partial,
    small_omega,
)


def _z(m: int, k: int = 1) -> CycloElement:
    return CycloElement.zeta_power(m, k)


def _prime_power_base(n: int) -> int | None:
    """``p`` when ``n = p^k`` with ``k >= 1``, else ``None``."""
    if n < 2:
        return None
    f = factor(n)
    return f.factors[0][0] if len(f.factors) == 1 else None


def _excess(f: FactoredInt) -> int:
    """``Omega(n) - omega(n)``."""
    return big_omega(f) - small_omega(f)


def _galois(value: CycloElement, root: RootOfUnity) -> CycloElement:
    return value if root.exponent == 1 or root.order <= 2 else value.automorphism(root.exponent)


# --- orders 1 and 2 ---------------------------------------------------------


def value_at_1(n: int) -> int:
    if n == 1:
        return 0
    return _prime_power_base(n) or 1


def value_at_minus1(n: int) -> int:
    if n == 1:
        return -2
    if n == 2:
        return 0
    if n % 2 == 0:
        p = _prime_power_base(n // 2)
        if p is not None:
            return p
    return 1


# --- prime divisors = +-1 (mod m) --------------------------------------------------


def _split_prime(f: FactoredInt, residue: int, m: int) -> tuple[int, int, int] | None:
    for p, k in f.factors:
        if (p - residue) % m == 0:
            return p, k, f.value // p**k
    return None


def mod1_case(n: int, m: int) -> int | None:
    """Value of ``Phi_n(xi_m)`` when ``n`` has a prime factor ``p = 1 (mod m)``; else ``None``.

    Independent of which primitive ``m``-th root is used.
    """
    split = _split_prime(factor(n), 1, m)
    if split is None:
        return None
    p, _, rest = split
    return p if rest == m else 1


def modminus1_case(n: int, root) -> CycloElement | None:
    """Value when ``n`` has a prime factor ``p = -1 (mod m)``, ``m >= 2``; else ``None``."""
    root = as_root(root)
    m = root.order
    if m < 2:
        return None
    split = _split_prime(factor(n), -1, m)
    if split is None:
        return None
    p, k, rest = split
    xi = root.element()
    sgn = 1 if k % 2 == 0 else -1
    if rest == m:
        return -(xi ** (sgn * euler_phi(factor(m)))) * p
    if rest == 1:
        return -(xi**sgn)
    return xi ** (sgn * euler_phi(factor(rest)))


# --- order 4 ------------------------------------------------------------------


def _value_at_i(f: FactoredInt) -> CycloElement:
    n = f.value
    i = _z(4)
    if n == 1:
        return i - 1
    if n == 2:
        return i + 1
    if n == 4:
        return CycloElement.zero(4)
    one = CycloElement.one(4)
    if n % 4 == 0:
        p = _prime_power_base(n // 4)
        return one * p if p is not None else one
    if any(p % 4 == 1 for p in f.primes):
        return one
    odd = f if n % 2 else factor(n // 2)
    r = small_omega(odd)
    if r == 1:
        k = odd.factors[0][1]
        if n % 2:
            return i * (-1) ** (k + 1)
        return i * (-1) ** k
    if r == 2:
        return -one
    return one


def value_at_i(n: int, j: int = 1) -> CycloElement:
    """``Phi_n(i)`` (or at ``i^j`` for ``j = 3``)."""
    return _galois(_value_at_i(as_factored(n)), RootOfUnity(4, j))


# --- order 3 ------------------------------------------------------------------


def _value_at_zeta3(f: FactoredInt) -> CycloElement:
    n = f.value
    one = CycloElement.one(3)
    if n == 1:
        return _z(3) - 1
    if n == 3:
        return CycloElement.zero(3)
    zeta = _z(3, (-1) ** _excess(f))
    if n % 3 == 0:
        p = _prime_power_base(n // 3)
        if p is not None and p % 3 != 2:
            return one * p
    if any(p % 3 == 1 for p in f.primes):
        return one
    nu3 = f.valuation(3)
    if nu3 >= 2:
        return one
    rest = factor(n // 3) if nu3 else f
    r = small_omega(rest)
    if nu3 == 0:
        if r == 1:
            return -zeta.inverse()
        return zeta.inverse()
    if r == 1:
        return -zeta * rest.factors[0][0]
    return zeta


def value_at_zeta3(n: int, j: int = 1) -> CycloElement:
    return _galois(_value_at_zeta3(as_factored(n)), RootOfUnity(3, j))


# --- order 6 ------------------------------------------------------------------


def _is_q6(p: int) -> bool:
    return p == 2 or p % 6 == 5


def _value_at_zeta6(f: FactoredInt) -> CycloElement:
    n = f.value
    one = CycloElement.one(6)
    if n == 1:
        return _z(6, 2)
    if n == 2:
        return _z(6) + 1
    if n == 3:
        return _z(6) * 2
    if n == 6:
        return CycloElement.zero(6)
    if n % 6 == 0:
        p = _prime_power_base(n // 6)
        if p is not None and (p == 3 or p % 6 == 1):
            return one * p
    nu3 = f.valuation(3)
    if nu3 >= 2 or any(p % 6 == 1 for p in f.primes):
        return one
    # every prime factor is now 2, 3 (to the first power) or 5 mod 6
    zeta = _z(3, (-1) ** _excess(f)).embed(6)
    if n % 2 == 0 and nu3 == 0:
        q = _prime_power_base(n // 2)
        if q is not None:
            return -zeta
    if n % 6 == 0:
        q = _prime_power_base(n // 6)
        if q is not None:
            return -zeta.inverse() * q
    if nu3 == 0:
        return zeta
    return zeta.inverse()


def value_at_zeta6(n: int, j: int = 1) -> CycloElement:
    return _galois(_value_at_zeta6(as_factored(n)), RootOfUnity(6, j))


# --- order 5 ------------------------------------------------------------------


def _mobius_product_value(f: FactoredInt, root: RootOfUnity) -> CycloElement:
    # prod_{d | n} (xi^d - 1)^{mu(n/d)}; requires xi^d != 1 for every d | n
    m = root.order
    num = CycloElement.one(m)
    den = CycloElement.one(m)
    for d in divisors(f):
        mu = moebius(factor(f.value // d))
        if mu == 0:
            continue
        t = _z(m, root.exponent * d) - 1
        if mu == 1:
            num = num * t
        else:
            den = den * t
    return num * den.inverse()


def _value_at_zeta5(f: FactoredInt) -> CycloElement:
    n = f.value
    one = CycloElement.one(5)
    z5 = _z(5)
    if n == 1:
        return z5 - 1
    if n == 5:
        return CycloElement.zero(5)
    nu5 = f.valuation(5)
    if nu5 >= 2:
        return one * 5 if small_omega(f) == 1 else one
    if nu5 == 1:
        n1 = factor(n // 5)
        p = _prime_power_base(n1.value)
        if p is not None and p % 5 == 1:
            return one * p
        if any(q % 5 == 1 for q in n1.primes):
            return one
        return _value_at_zeta5(n1).inverse() * mangoldt_exp(n1)
    if any(p % 5 == 1 for p in f.primes):
        return one
    for q, k in f.factors:
        if q % 5 == 4:
            n1 = n // q**k
            sgn = 1 if k % 2 == 0 else -1
            if n1 == 1:
                return -(z5**sgn)
            return z5 ** (sgn * euler_phi(factor(n1)))
    return _mobius_product_value(f, RootOfUnity(5, 1))


def value_at_zeta5(n: int, j: int = 1) -> CycloElement:
    return _galois(_value_at_zeta5(as_factored(n)), RootOfUnity(5, j))


# --- dispatcher ---------------------------------------------------------------

CLOSED_FORM_ORDERS = (1, 2, 3, 4, 5, 6)


def closed_form_value(n: int, root) -> CycloElement:
    """Table value of ``Phi_n(root)`` for roots of order 1 through 6."""
    root = as_root(root)
    m, j = root.order, root.exponent
    if m == 1:
        return CycloElement.scalar(1, value_at_1(n))
    if m == 2:
        return CycloElement.scalar(2, value_at_minus1(n))
    if m == 3:
        return value_at_zeta3(n, j)
    if m == 4:
        return value_at_i(n, j)
    if m == 5:
        return value_at_zeta5(n, j)
    if m == 6:
        return value_at_zeta6(n, j)
    raise InapplicableError(f"no closed-form table for roots of order {m}")


def coprime_corollary_value(n: int, root) -> CycloElement:
    """Value for ``gcd(n, m) = 1`` read off the character formula.

    It is 1 if some prime of ``n`` is 1 mod ``m``.  For ``m`` in {3, 4, 6} with every
    prime of ``n`` equal to -1 mod ``m`` it is ``(-xi)^(chi(n) 2^(omega(n)-1))``, where
    ``chi(n) = (-1)^Omega(n)`` is the odd character's value.
    """
    root = as_root(root)
    m = root.order
    f = as_factored(n)
    if n < 2 or m < 2 or math.gcd(n, m) != 1:
        raise InapplicableError(f"need n > 1, m > 1 coprime; got n={n}, m={m}")
    if any(p % m == 1 for p in f.primes):
        return CycloElement.one(m)
    if m not in (3, 4, 6):
        raise InapplicableError(f"no closed value for m={m} without a prime = 1 (mod m)")
    e = (-1) ** big_omega(f) * 2 ** (small_omega(f) - 1)
    return (-root.element()) ** e


# --- coprime reduction ----------------------------------------------------------


@dataclass(frozen=True)
class CoprimePlan:
    """``Phi_n(xi_m) = prod_{(d, s) in terms} Phi_{n1}(xi_m^d)^s`` with ``n = n1 * n2``."""

    n1: int
    n2: int
    terms: tuple[tuple[int, int], ...]


def reduce_coprime(n: int, m: int) -> CoprimePlan:
    f = as_factored(n)
    n1 = math.prod(p**e for p, e in f.factors if m % p)
    n2 = f.value // n1
    terms = []
    for d in sorted(divisors(factor(n2)), reverse=True):
        mu = moebius(factor(n2 // d))
        if mu:
            terms.append((d, mu))
    return CoprimePlan(n1, n2, tuple(terms))


def evaluate_coprime_plan(n: int, root) -> CycloElement:
    """Evaluate :func:`reduce_coprime`'s product, each factor at its reduced-order root."""
    root = as_root(root)
    m = root.order
    plan = reduce_coprime(n, m)
    out = CycloElement.one(m)
    for d, s in plan.terms:
        r = RootOfUnity.from_exponent(m, root.exponent * d)
        v = eval_phi_exact(plan.n1, r).embed(m)
        if v.is_zero():
            raise InapplicableError(
                f"factor Phi_{plan.n1} at zeta_{r.order}^{r.exponent} vanishes; product is degenerate"
            )
        out = out * (v if s == 1 else v.inverse())
    return out


# --- reality, sign and magnitude ------------------------------------------------


def is_real_value(n: int, m: int) -> bool:
    """``Phi_n(xi_m)`` is nonzero and real exactly when ``m | phi(n)``."""
    if n < 2:
        raise ValueError("is_real_value needs n >= 2")
    return euler_phi(factor(n)) % m == 0


@dataclass(frozen=True)
class GammaPower:
    """``|gamma_m|^e`` with ``gamma_m`` the unit ``1 + xi + ...`` attached to ``m`` in {5, 8, 10, 12}."""

    root: RootOfUnity
    power: int

    def gamma(self) -> CycloElement:
        return gamma_element(self.root)

    def value(self, precision: int = 53):
        with mpmath.workprec(precision + 10):
            g = abs(mpmath.mpc(self.gamma().to_complex(precision)))
            return g**self.power if precision > 53 else float(g**self.power)

    def __str__(self) -> str:
        return f"|g{self.root.order}|^{self.power}"


Magnitude = Union[int, Fraction, GammaPower, float]


@dataclass(frozen=True)
class SignMagnitudeForm:
    """``sign * |magnitude| * twist`` with ``twist`` a root of unity of order dividing ``2m``."""

    sign: int
    twist: RootOfUnity
    magnitude: Magnitude

    def magnitude_value(self, precision: int = 53):
        if isinstance(self.magnitude, GammaPower):
            return self.magnitude.value(precision)
        if isinstance(self.magnitude, Fraction):
            return mpmath.mpf(self.magnitude.numerator) / self.magnitude.denominator
        return self.magnitude

    def value(self, precision: int = 53):
        with mpmath.workprec(precision + 10):
            v = self.sign * mpmath.mpf(self.magnitude_value(precision)) * mpmath.mpc(
                self.twist.to_complex(precision)
            )
        return complex(v) if precision <= 53 else v

    def render(self) -> str:
        out = "+" if self.sign > 0 else "-"
        mag = self.magnitude
        if isinstance(mag, float):
            out += f"{mag:.12g}"
        elif isinstance(mag, GammaPower):
            out += str(mag)
        elif mag != 1:
            out += str(mag)
        if self.twist.order > 1:
            if out in "+-":
                out += f"z{self.twist.order}^{self.twist.exponent}"
            else:
                out += f"*z{self.twist.order}^{self.twist.exponent}"
        elif out in "+-":
            out += "1"
        return out


def sign_exponent_count(n: int, root) -> int:
    """``phi(n j / m; n)``: the parity gives the sign of ``Phi_n(xi_m) / xi_m^(phi(n)/2)``."""
    root = as_root(root)
    return phi_partial(Fraction(n * root.exponent, root.order), factor(n))


def one_case_value(n: int, root) -> int:
    """``(-1)^(phi(nj/m; n) + j phi(n)/m)``, the value whenever ``Phi_n(xi_m)`` is +-1."""
    root = as_root(root)
    ph = euler_phi(factor(n))
    if (root.exponent * ph) % root.order:
        raise InapplicableError(f"m={root.order} does not divide j*phi(n); value is not real")
    return (-1) ** (sign_exponent_count(n, root) + root.exponent * ph // root.order)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def sign_magnitude(n: int, root) -> SignMagnitudeForm:
    """Decompose ``Phi_n(xi_m) = sign * |Phi_n(xi_m)| * xi_m^(phi(n)/2)``."""
    root = as_root(root)
    m, j = root.order, root.exponent
    if n < 2:
        raise ValueError("sign_magnitude needs n >= 2")
    if n == m:
        raise InapplicableError("Phi_n vanishes at primitive n-th roots; no sign form")
    ph = euler_phi(factor(n))
    sign = -1 if sign_exponent_count(n, root) % 2 else 1
    twist = RootOfUnity.from_exponent(2 * m, j * ph)
    v = eval_phi_exact(n, root)
    sq = v * v.conjugate()
    mag: Magnitude
    exact = _rational_sqrt(Fraction(sq.rational_value())) if sq.is_rational() else None
    if exact is not None:
        mag = exact.numerator if exact.denominator == 1 else exact
    elif m in (5, 8, 10, 12) and _gamma_applicable(n, m) is None:
        mag = GammaPower(root, gamma_exponent(n))
    else:
        mag = abs(v.to_complex())
    if v.is_rational() and mag == 1 and one_case_value(n, root) != v:
        raise CyclotomyError(f"sign formula for unit value fails at n={n}, root={root}")
    return SignMagnitudeForm(sign, twist, mag)


def abs_value_low_m(n: int, m: int) -> int:
    """``|Phi_n(xi_m)|`` for ``m`` in {1, 2, 3, 4, 6} and ``n > m``."""
    if m not in (1, 2, 3, 4, 6):
        raise InapplicableError(f"abs_value_low_m covers m in {{1,2,3,4,6}}, not {m}")
    if n <= m:
        raise InapplicableError(f"abs_value_low_m needs n > m, got n={n}, m={m}")
    if n % m:
        return 1
    return _prime_power_base(n // m) or 1


# --- m in {5, 8, 10, 12} ---------------------------------------------------------


def gamma_element(root) -> CycloElement:
    root = as_root(root)
    length = {5: 2, 8: 3, 10: 3, 12: 5}.get(root.order)
    if length is None:
        raise InapplicableError(f"gamma_m is defined for m in {{5,8,10,12}}, not {root.order}")
    xi = root.element()
    out = CycloElement.zero(root.order)
    p = CycloElement.one(root.order)
    for _ in range(length):
        out = out + p
        p = p * xi
    return out


def gamma_exponent(n: int) -> int:
    """``(-1)^(Omega(n)-1) * 2^(omega(n)-1)``."""
    f = as_factored(n)
    return (-1) ** (big_omega(f) - 1) * 2 ** (small_omega(f) - 1)


def _gamma_applicable(n: int, m: int) -> str | None:
    if n < 2:
        return "n must exceed 1"
    if math.gcd(n, m) != 1:
        return f"gcd(n, m) = {math.gcd(n, m)}"
    for p in factor(n).primes:
        if p % m in (1, m - 1):
            return f"prime {p} = +-1 (mod {m})"
    return None


def abs_log_formula_5812(n: int, root):
    """``log |Phi_n(xi_m)|`` for ``m`` in {5, 8, 10, 12} when no prime of ``n`` is +-1 mod ``m``."""
    root = as_root(root)
    m = root.order
    if m not in (5, 8, 10, 12):
        raise InapplicableError(f"formula covers m in {{5,8,10,12}}, not {m}")
    why = _gamma_applicable(n, m)
    if why is not None:
        raise InapplicableError(f"hypothesis fails for n={n}, m={m}: {why}")
    g = gamma_element(root).to_complex(113)
    with mpmath.workprec(113):
        return float(gamma_exponent(n) * mpmath.log(abs(g)))
