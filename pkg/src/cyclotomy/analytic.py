"""Character-sum formulas for ``Phi_n`` and its logarithmic derivative at roots of unity.

Numeric routines evaluate in mpmath at ``precision`` bits.  They return a
Python ``complex`` for ``precision <= 53`` and an ``mpmath.mpc`` above that;
at 53 bits expect agreement with the exact values to about 1e-6, at 100 bits
to better than 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .characters import DirichletCharacter, all_characters, char_value_complex, unit_residues
from .closedform import reduce_coprime
from .cyclofield import CycloElement, RootOfUnity, as_root, logderiv_exact
from .errors import InapplicableError, PoleError
from .numtheory import FactoredInt, as_factored, big_omega, euler_phi, factor, small_omega

DEFAULT_PRECISION = 53
HIGH_PRECISION = 100


def _out(x, precision: int):
    return complex(x) if precision <= 53 else x


def _check_coprime(n: int, m: int) -> None:
    if n < 2 or m < 2 or math.gcd(n, m) != 1:
        raise InapplicableError(f"need coprime n, m > 1; got n={n}, m={m}")


def _xi_pow(root: RootOfUnity, g: int):
    return mpmath.expjpi(mpmath.mpf(2 * root.exponent * g) / root.order)


@lru_cache(maxsize=4096)
def _C_chi(chi: DirichletCharacter, root: RootOfUnity, precision: int):
    with mpmath.workprec(precision + 20):
        acc = mpmath.mpc(0)
        for g in unit_residues(root.order):
            cbar = mpmath.mpc(char_value_complex(chi.conj(), g, precision + 20))
            acc += cbar * mpmath.log(1 - _xi_pow(root, g))
        return acc


def C_chi(chi: DirichletCharacter, root, precision: int = DEFAULT_PRECISION):
    """``sum_{g in G(m)} conj(chi(g)) log(1 - xi^g)``, principal branch of log."""
    root = as_root(root)
    if root.order < 2:
        raise InapplicableError("C_chi needs m > 1")
    return _out(_C_chi(chi, root, precision), precision)


@lru_cache(maxsize=4096)
def _c_chi(chi: DirichletCharacter, root: RootOfUnity, precision: int):
    with mpmath.workprec(precision + 20):
        acc = mpmath.mpc(0)
        for g in unit_residues(root.order):
            cbar = mpmath.mpc(char_value_complex(chi.conj(), g, precision + 20))
            xg = _xi_pow(root, g)
            acc += cbar * _xi_pow(root, g - 1) / (1 - xg)
        return acc


def c_chi(chi: DirichletCharacter, root, precision: int = DEFAULT_PRECISION):
    """``sum_{g in G(m)} xi^(g-1) / (1 - xi^g) * conj(chi(g))``."""
    root = as_root(root)
    if root.order < 2:
        raise InapplicableError("c_chi needs m > 1")
    return _out(_c_chi(chi, root, precision), precision)


def _euler_factor(chi: DirichletCharacter, f: FactoredInt, k: int, precision: int):
    """``prod_{p | n} (1 - conj(chi(p)) / p^k)``; exact zero when some factor vanishes."""
    cb = chi.conj()
    if k == 0 and any(cb.log_value(p) == 0 for p in f.primes):
        return None
    out = mpmath.mpc(1)
    for p in f.primes:
        out *= 1 - mpmath.mpc(char_value_complex(cb, p, precision + 20)) / mpmath.mpf(p) ** k
    return out


def phi_value_char_formula(n: int, root, precision: int = DEFAULT_PRECISION):
    """``Phi_n(xi_m)`` for coprime ``n, m > 1`` as ``exp`` of a sum over characters mod ``m``."""
    root = as_root(root)
    m = root.order
    _check_coprime(n, m)
    f = as_factored(n)
    with mpmath.workprec(precision + 20):
        total = mpmath.mpc(0)
        for chi in all_characters(m):
            ef = _euler_factor(chi, f, 0, precision)
            if ef is None:
                continue
            total += _C_chi(chi, root, precision) * mpmath.mpc(char_value_complex(chi, n, precision + 20)) * ef
        val = mpmath.exp(total / euler_phi(factor(m)))
    return _out(val, precision)


def logderiv_char_formula(n: int, root, precision: int = DEFAULT_PRECISION):
    """``Phi_n'(xi_m) / Phi_n(xi_m)`` for coprime ``n, m > 1`` via the sums ``c_chi``."""
    root = as_root(root)
    m = root.order
    _check_coprime(n, m)
    f = as_factored(n)
    with mpmath.workprec(precision + 20):
        total = mpmath.mpc(0)
        for chi in all_characters(m):
            ef = _euler_factor(chi, f, 1, precision)
            total += _c_chi(chi, root, precision) * mpmath.mpc(char_value_complex(chi, n, precision + 20)) * ef
        val = -mpmath.mpf(n) / euler_phi(factor(m)) * total
    return _out(val, precision)


def logderiv_closed_346(n: int, root) -> CycloElement:
    """Exact ``f_n(xi_m)`` for ``m`` in {3, 4, 6} and ``gcd(n, m) = 1``."""
    root = as_root(root)
    m = root.order
    if m not in (3, 4, 6):
        raise InapplicableError(f"closed derivative formula covers m in {{3,4,6}}, not {m}")
    _check_coprime(n, m)
    f = as_factored(n)
    minus = [(p, e) for p, e in f.factors if p % m == m - 1]
    omega_minus = sum(e for _, e in minus)
    ratio = Fraction(1)
    for p, _ in minus:
        ratio *= Fraction(p + 1, p - 1)
    xi = root.element()
    one = CycloElement.one(m)
    inner = one - (one + xi) * (one - xi).inverse() * ((-1) ** omega_minus * ratio)
    return inner * xi.inverse() * Fraction(euler_phi(f), 2)


# --- values at +-1 ---------------------------------------------------------------


def f_at_pm1(n: int, sign: int) -> Fraction:
    """``f_n(1) = phi(n)/2`` (``n > 1``) and ``f_n(-1) = -phi(n)/2`` (``n != 2``)."""
    ph = euler_phi(factor(n))
    if sign == 1:
        if n == 1:
            raise PoleError("f_1 has a pole at 1")
        return Fraction(ph, 2)
    if sign == -1:
        if n == 2:
            raise PoleError("f_2 has a pole at -1")
        return Fraction(-ph, 2)
    raise ValueError("sign must be +1 or -1")


def phi_prime_at_pm1(n: int, sign: int) -> int:
    """``Phi_n'(1)`` or ``Phi_n'(-1)`` from the prime-power case split."""
    f = factor(n)
    ph = euler_phi(f)
    if sign == 1:
        if n == 1:
            return 1
        if f.is_prime_power():
            return f.factors[0][0] * ph // 2
        return ph // 2
    if sign == -1:
        if n in (1, 2):
            return 1
        if n % 2 == 0 and factor(n // 2).is_prime_power():
            return -(factor(n // 2).factors[0][0] * ph // 2)
        return -(ph // 2)
    raise ValueError("sign must be +1 or -1")


def _term_logderiv(n1: int, r: RootOfUnity) -> CycloElement:
    if n1 == r.order:
        raise PoleError(f"f_{n1} has a pole at zeta_{r.order}^{r.exponent}")
    if r.order == 1:
        return CycloElement.scalar(1, f_at_pm1(n1, 1))
    if r.order == 2:
        return CycloElement.scalar(2, f_at_pm1(n1, -1))
    if r.order in (3, 4, 6) and n1 > 1 and math.gcd(n1, r.order) == 1:
        return logderiv_closed_346(n1, r)
    return logderiv_exact(n1, r)


def logderiv_coprime_reduce(n: int, root) -> CycloElement:
    """``f_n(xi_m)`` from the factorization ``Phi_n(x) = prod_{d | n2} Phi_{n1}(x^d)^mu(n2/d)``.

    Differentiating gives ``f_n(x) = sum_{d | n2} mu(n2/d) d x^(d-1) f_{n1}(x^d)``; each
    ``f_{n1}`` is evaluated at the reduced-order root ``xi^d``.  A term whose factor
    vanishes raises :class:`PoleError` even though ``f_n(xi)`` itself is finite; use
    :func:`~cyclotomy.cyclofield.logderiv_exact` there.
    """
    root = as_root(root)
    m = root.order
    if n < 2 or n == m:
        raise InapplicableError(f"need n > 1 and n != m; got n={n}, m={m}")
    plan = reduce_coprime(n, m)
    out = CycloElement.zero(m)
    for d, s in plan.terms:
        r = RootOfUnity.from_exponent(m, root.exponent * d)
        chain = CycloElement.zeta_power(m, root.exponent * (d - 1)) * (s * d)
        out = out + _term_logderiv(plan.n1, r).embed(m) * chain
    return out


# --- Vaughan-type height lower bounds ----------------------------------------------


@dataclass(frozen=True)
class VaughanRow:
    x: int
    n: FactoredInt
    omega: int
    best_root: RootOfUnity
    bound: float
    chain: float

    @property
    def height_lower_bound(self) -> float:
        """``exp(chain) = |Phi_n(best_root)| / n``, a lower bound for the height of ``Phi_n``."""
        return math.exp(self.chain)


def _primes_upto(x: int) -> list[int]:
    return [p for p in range(2, x + 1) if factor(p).is_prime_power() and factor(p).factors[0] == (p, 1)]


def vaughan_construct(x: int) -> VaughanRow:
    """Product of the primes ``p <= x`` with ``p = +-2 (mod 5)`` and the fifth root maximizing ``|Phi_n|``."""
    if x < 2:
        raise ValueError("vaughan_construct needs x >= 2")
    ps = [p for p in _primes_upto(x) if p % 5 in (2, 3)]
    n = factor(math.prod(ps))
    w = small_omega(n)
    e = (-1) ** (big_omega(n) - 1) * 2 ** (w - 1)
    best = None
    best_val = None
    with mpmath.workprec(HIGH_PRECISION):
        for j in (1, 2, 3, 4):
            val = e * mpmath.log(abs(1 + mpmath.expjpi(mpmath.mpf(2 * j) / 5)))
            if best_val is None or val > best_val:
                best, best_val = j, val
        bound = float(best_val)
        chain = float(best_val - mpmath.log(n.value))
    return VaughanRow(x, n, w, RootOfUnity(5, best), bound, chain)


VAUGHAN_XS = (3, 7, 13, 23, 43)


def vaughan_table(xs=VAUGHAN_XS) -> list[VaughanRow]:
    return [vaughan_construct(x) for x in xs]


def height_chain(coeffs, z) -> tuple[float, float, float, float]:
    """``(H, mean |a_j|, |f(z)|/(d+1), |f(z)|/n)``-style chain for a polynomial at ``|z| = 1``.

    Returns height, ``sum |a_j| / (d+1)``, ``|f(z)| / (d+1)`` and ``|f(z)|`` so callers
    can divide by ``n`` themselves.
    """
    d = len(coeffs) - 1
    h = max(abs(c) for c in coeffs)
    mean = sum(abs(c) for c in coeffs) / (d + 1)
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return float(h), mean, abs(acc) / (d + 1), abs(acc)
