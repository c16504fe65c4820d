"""Factorization and the multiplicative functions built on it.

Every arithmetic function here reads an existing :class:`FactoredInt`;
nothing refactors.  Use :func:`factor` (memoized) to obtain one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its prime factorization.

    ``factors`` holds ``(prime, exponent)`` pairs with strictly increasing
    primes and positive exponents.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"FactoredInt needs a positive value, got {self.value}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.value}")

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FactoredInt({self.value}, {list(self.factors)})"

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def valuation(self, p: int) -> int:
        """Exponent of ``p`` in the factorization (0 when absent)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@lru_cache(maxsize=1 << 16)
def factor(n: int) -> FactoredInt:
    """Factor ``n`` by trial division."""
    if isinstance(n, FactoredInt):
        return n
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factor {n}: need n >= 1")
    rest = n
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if rest > 1:
        out.append((rest, 1))
    return FactoredInt(n, tuple(out))


def as_factored(n: int | FactoredInt) -> FactoredInt:
    """Convenience for the higher-level modules: accept a plain int too."""
    return n if isinstance(n, FactoredInt) else factor(n)


def _require(n: FactoredInt) -> FactoredInt:
    if not isinstance(n, FactoredInt):
        raise TypeError(f"expected FactoredInt, got {type(n).__name__}; call factor() first")
    return n


def euler_phi(n: FactoredInt) -> int:
    _require(n)
    out = 1
    for p, e in n.factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def moebius(n: FactoredInt) -> int:
    _require(n)
    if any(e > 1 for _, e in n.factors):
        return 0
    return -1 if len(n.factors) % 2 else 1


def radical(n: FactoredInt) -> int:
    _require(n)
    return math.prod(p for p, _ in n.factors)


def big_omega(n: FactoredInt) -> int:
    _require(n)
    return sum(e for _, e in n.factors)


def small_omega(n: FactoredInt) -> int:
    _require(n)
    return len(n.factors)


def mangoldt_exp(n: FactoredInt) -> int:
    """``exp(Lambda(n))`` as an integer: ``p`` for prime powers, else 1."""
    _require(n)
    if len(n.factors) == 1:
        return n.factors[0][0]
    return 1


def divisors(n: FactoredInt) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _require(n)
    out = [1]
    for p, e in n.factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def squarefree_divisors(n: FactoredInt) -> Iterator[tuple[int, int]]:
    """Yield ``(d, mu(d))`` for the squarefree divisors ``d`` of ``n``."""
    _require(n)
    for bits in product((0, 1), repeat=len(n.factors)):
        d = 1
        for (p, _), b in zip(n.factors, bits):
            if b:
                d *= p
        yield d, (-1) ** sum(bits)


def phi_partial(x: Fraction | int, n: FactoredInt) -> int:
    """Count ``1 <= j <= x`` with ``gcd(j, n) = 1``.

    ``x`` should be exact (int or Fraction); a float is accepted but converted
    through ``Fraction`` so the floor is taken on its exact binary value.
    """
    _require(n)
    x = Fraction(x)
    if x < 0:
        raise ValueError("phi_partial needs x >= 0")
    top = math.floor(x)
    # inclusion-exclusion over squarefree divisors of n
    return sum(mu * (top // d) for d, mu in squarefree_divisors(n))


def jordan_totient(k: int, n: FactoredInt) -> int:
    """``J_k(n) = n^k prod_{p | n} (1 - p^-k)``, kept in integers."""
    _require(n)
    if k < 0:
        raise ValueError("jordan_totient needs k >= 0")
    out = 1
    for p, e in n.factors:
        out *= p ** (k * (e - 1)) * (p**k - 1)
    return out


def chebyshev_phi1_sum(x: int) -> float:
    """Sum of ``log Phi_n(1)`` for ``2 < n <= x``, i.e. of ``Lambda(n)``."""
    x = int(x)
    if x < 3:
        raise ValueError("chebyshev_phi1_sum needs x >= 3")
    return math.fsum(math.log(mangoldt_exp(factor(n))) for n in range(3, x + 1))


def totients_up_to(limit: int) -> list[int]:
    """Sieve ``phi(d)`` for ``0 <= d <= limit`` (index 0 holds 0)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for q in range(p, limit + 1, p):
                phi[q] -= phi[q] // p
    return phi
