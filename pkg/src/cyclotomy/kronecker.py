"""Kronecker polynomials: a monomial times a product of cyclotomic polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InapplicableError
from .numtheory import factor, mangoldt_exp, squarefree_divisors, totients_up_to
from .polyring import IntPolynomial, Reciprocity, cyclotomic, exact_div, divides, eval_at_integer


@dataclass(frozen=True)
class KroneckerFactorization:
    """``x^monomial_exponent * prod Phi_d^e_d`` with ``factors = ((d, e_d), ...)``, ``d`` increasing."""

    monomial_exponent: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.monomial_exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        ds = [d for d, _ in self.factors]
        if any(a >= b for a, b in zip(ds, ds[1:])):
            raise ValueError("factor indices must be strictly increasing")
        if any(d < 1 or e < 1 for d, e in self.factors):
            raise ValueError("indices and multiplicities must be positive")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.factors)

    def multiplicity(self, d: int) -> int:
        return dict(self.factors).get(d, 0)

    def expand(self) -> IntPolynomial:
        out = IntPolynomial.monomial(self.monomial_exponent)
        for d, e in self.factors:
            out = out * cyclotomic(d) ** e
        return out

    def __str__(self) -> str:
        parts = [f"x^{self.monomial_exponent}"] if self.monomial_exponent else []
        parts += [f"Phi_{d}" + (f"^{e}" if e > 1 else "") for d, e in self.factors]
        return " * ".join(parts) or "1"


@dataclass(frozen=True)
class NotKronecker:
    """Trial division left ``residual`` after removing the cyclotomic factors in ``partial``."""

    residual: IntPolynomial
    partial: KroneckerFactorization

    def __bool__(self) -> bool:
        return False


def _phi_at_2(d: int) -> int:
    # Phi_d(2) = prod_{e | d} (2^e - 1)^mu(d/e), exact and cheap
    num = den = 1
    for s, mu in squarefree_divisors(factor(d)):
        t = (1 << (d // s)) - 1
        if mu == 1:
            num *= t
        else:
            den *= t
    return num // den


def factor_kronecker(f: IntPolynomial) -> KroneckerFactorization | NotKronecker:
    """Split off ``x^e`` and divide out ``Phi_d`` in increasing ``d`` until nothing divides."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not Kronecker")
    if not f.is_monic():
        raise ValueError(f"Kronecker factorization needs a monic polynomial, leading coefficient is {f.coeffs[-1]}")
    e = next(i for i, c in enumerate(f.coeffs) if c)
    g = IntPolynomial(f.coeffs[e:])
    found: list[tuple[int, int]] = []
    deg = g.degree
    if deg > 0:
        # phi(d) > sqrt(d/2), so every d with phi(d) <= deg lies below 2 deg^2
        tot = totients_up_to(2 * deg * deg)
        for d in range(1, len(tot)):
            if g.degree == 0:
                break
            if tot[d] > g.degree:
                continue
            # Phi_d | g forces Phi_d(2) | g(2); skip the division when it cannot succeed
            if eval_at_integer(g, 2) % _phi_at_2(d):
                continue
            phi_d = cyclotomic(d)
            k = 0
            while g.degree >= phi_d.degree and divides(phi_d, g):
                g = exact_div(g, phi_d)
                k += 1
            if k:
                found.append((d, k))
    fact = KroneckerFactorization(e, tuple(found))
    if g != 1:
        return NotKronecker(g, fact)
    return fact


def reciprocity_class(fact: KroneckerFactorization) -> Reciprocity:
    """Self-reciprocal exactly when ``Phi_1`` occurs to an even power."""
    if fact.monomial_exponent:
        raise ValueError("reciprocity class needs f(0) != 0")
    return Reciprocity.SELF if fact.multiplicity(1) % 2 == 0 else Reciprocity.ANTI


@dataclass(frozen=True)
class SignFacts:
    f_at_1: int
    f_at_minus1: int
    f1_nonneg: bool
    fm1_nonneg: bool | None
    strictly_positive: bool


def _as_factorization(f) -> tuple[IntPolynomial, KroneckerFactorization]:
    if isinstance(f, KroneckerFactorization):
        return f.expand(), f
    res = factor_kronecker(f)
    if isinstance(res, NotKronecker):
        raise InapplicableError("polynomial is not Kronecker")
    return f, res


def sign_facts(f) -> SignFacts:
    """Sign information at ``x = 1`` and ``x = -1`` for a Kronecker polynomial with ``f(0) != 0``.

    ``fm1_nonneg`` is ``None`` when ``f(1) = 0`` since nothing is claimed then.  When
    ``f(1) != 0`` and ``f(-1) > 0`` the polynomial is positive on the whole real line.
    """
    poly, fact = _as_factorization(f)
    if fact.monomial_exponent:
        raise ValueError("sign facts need f(0) != 0")
    a, b = eval_at_integer(poly, 1), eval_at_integer(poly, -1)
    if a < 0:
        raise AssertionError(f"Kronecker polynomial with f(1) = {a} < 0")
    fm1 = None
    positive = False
    if a:
        fm1 = b >= 0
        if not fm1:
            raise AssertionError(f"Kronecker polynomial with f(1) != 0 and f(-1) = {b} < 0")
        if b > 0:
            if {1, 2} & set(fact.indices):
                raise AssertionError("f(1) f(-1) != 0 yet Phi_1 or Phi_2 divides f")
            grid = [k / 8 for k in range(-40, 41)]
            if not all(_eval_float(poly, t) > 0 for t in grid):
                raise AssertionError("positivity failed on the sample grid")
            positive = True
    return SignFacts(a, b, a >= 0, fm1, positive)


def _eval_float(f: IntPolynomial, t: float) -> float:
    acc = 0.0
    for c in reversed(f.coeffs):
        acc = acc * t + c
    return acc


LOW_ORDERS = (1, 2, 3, 4, 6)


def abs_at_low_m(fact: KroneckerFactorization, m: int) -> int:
    """``|f(xi_m)| = exp(sum_{m | d} e_d Lambda(d/m))`` when every index exceeds ``m``."""
    if m not in LOW_ORDERS:
        raise ValueError(f"m must be one of {LOW_ORDERS}, got {m}")
    small = [d for d in fact.indices if d <= m]
    if small:
        raise InapplicableError(f"factor Phi_{small[0]} has index <= m = {m}")
    out = 1
    for d, e in fact.factors:
        if d % m == 0:
            out *= mangoldt_exp(factor(d // m)) ** e
    return out


def is_kronecker(f: IntPolynomial) -> bool:
    return isinstance(factor_kronecker(f), KroneckerFactorization)


__all__ = [
    "KroneckerFactorization",
    "NotKronecker",
    "SignFacts",
    "LOW_ORDERS",
    "abs_at_low_m",
    "factor_kronecker",
    "is_kronecker",
    "reciprocity_class",
    "sign_facts",
]
