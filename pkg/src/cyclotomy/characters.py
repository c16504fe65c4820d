"""Dirichlet characters modulo m, held by exponents on a fixed set of generators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .cyclofield import CycloElement, RootOfUnity
from .errors import NoQuadraticCharacterError
from .numtheory import FactoredInt, euler_phi, factor


def _primitive_root_prime_power(p: int, e: int) -> int:
    """Smallest positive generator of (Z/p^e)* for odd ``p``."""
    phi_p = p - 1
    qs = factor(phi_p).primes
    g = 2
    while True:
        if all(pow(g, phi_p // q, p) != 1 for q in qs):
            break
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_lift(residue: int, q: int, m: int) -> int:
    """The class mod ``m`` congruent to ``residue`` mod ``q`` and to 1 mod ``m/q``."""
    rest = m // q
    if rest == 1:
        return residue % m
    # x = residue + q*t with x = 1 (mod rest)
    t = ((1 - residue) * pow(q, -1, rest)) % rest
    return (residue + q * t) % m


@dataclass(frozen=True)
class UnitGroupStructure:
    """``(Z/mZ)*`` written as a product of cyclic groups ``<g_i>`` of order ``o_i``."""

    modulus: int
    generators: tuple[tuple[int, int], ...]
    _log: dict = field(default=None, repr=False, compare=False, hash=False)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.generators)

    @property
    def exponent(self) -> int:
        """Least common multiple of the generator orders (1 for the trivial group)."""
        return math.lcm(*self.orders) if self.generators else 1

    def dlog(self, a: int) -> tuple[int, ...]:
        """Exponent tuple of a unit ``a``; raises ``KeyError`` for non-units."""
        return self._log[a % self.modulus]

    def units(self) -> list[int]:
        return sorted(self._log)


@lru_cache(maxsize=None)
def unit_group(m: int) -> UnitGroupStructure:
    if m < 1:
        raise ValueError("modulus must be positive")
    gens: list[tuple[int, int]] = []
    for p, e in factor(m).factors:
        q = p**e
        if p == 2:
            if e == 2:
                gens.append((_crt_lift(-1, q, m), 2))
            elif e >= 3:
                gens.append((_crt_lift(-1, q, m), 2))
                gens.append((_crt_lift(5, q, m), 2 ** (e - 2)))
        else:
            g = _primitive_root_prime_power(p, e)
            gens.append((_crt_lift(g, q, m), (p - 1) * p ** (e - 1)))
    log: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(o) for _, o in gens)):
        a = 1
        for (g, _), k in zip(gens, exps):
            a = a * pow(g, k, m) % m
        log[a % m] = exps
    # m = 1: the single residue class 0 is the unit
    if m == 1:
        log = {0: ()}
    return UnitGroupStructure(m, tuple(gens), log)


@dataclass(frozen=True)
class DirichletCharacter:
    """``chi(g_i) = exp(2 pi i a_i / o_i)`` on the generators of ``structure``."""

    structure: UnitGroupStructure
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.exponents) != len(self.structure.generators):
            raise ValueError("one exponent per generator is required")
        for a, o in zip(self.exponents, self.structure.orders):
            if not 0 <= a < o:
                raise ValueError(f"exponent {a} out of range for a cyclic factor of order {o}")

    @property
    def modulus(self) -> int:
        return self.structure.modulus

    @property
    def value_order(self) -> int:
        """Common order ``L`` such that every value is an ``L``-th root of unity."""
        return self.structure.exponent

    def log_value(self, a: int) -> int | None:
        """``k`` with ``chi(a) = exp(2 pi i k / L)``, or ``None`` when ``gcd(a, m) > 1``."""
        if math.gcd(a, self.modulus) != 1:
            return None
        L = self.value_order
        d = self.structure.dlog(a)
        return sum(x * k * (L // o) for x, k, o in zip(self.exponents, d, self.structure.orders)) % L

    def __call__(self, a: int):
        return char_eval(self, a)

    def conj(self) -> DirichletCharacter:
        return DirichletCharacter(
            self.structure, tuple((-a) % o for a, o in zip(self.exponents, self.structure.orders))
        )

    def __repr__(self) -> str:
        return f"DirichletCharacter(m={self.modulus}, exponents={self.exponents})"


def all_characters(m: int) -> list[DirichletCharacter]:
    """All ``phi(m)`` characters, principal first."""
    G = unit_group(m)
    return [DirichletCharacter(G, exps) for exps in product(*(range(o) for o in G.orders))]


def char_eval(chi: DirichletCharacter, a: int) -> RootOfUnity | int:
    """``chi(a)`` as a root of unity in lowest terms, or the integer 0 off the units."""
    k = chi.log_value(a)
    if k is None:
        return 0
    return RootOfUnity.from_exponent(chi.value_order, k)


def char_value_element(chi: DirichletCharacter, a: int, modulus: int | None = None) -> CycloElement:
    """``chi(a)`` inside Q(zeta_L), ``L`` the value order unless ``modulus`` is given."""
    L = chi.value_order if modulus is None else modulus
    k = chi.log_value(a)
    if k is None:
        return CycloElement.zero(L)
    return CycloElement.zeta_power(L, k * (L // chi.value_order))


def char_value_complex(chi: DirichletCharacter, a: int, precision: int = 53):
    k = chi.log_value(a)
    if k is None:
        return 0
    return RootOfUnity.from_exponent(chi.value_order, k).to_complex(precision)


def parity(chi: DirichletCharacter) -> int:
    v = chi.log_value(-1)
    return 1 if v == 0 else -1


def is_principal(chi: DirichletCharacter) -> bool:
    return not any(chi.exponents)


def is_real(chi: DirichletCharacter) -> bool:
    return all((2 * a) % o == 0 for a, o in zip(chi.exponents, chi.structure.orders))


def quadratic_character(m: int) -> DirichletCharacter:
    """The unique non-principal, real, even character modulo ``m``."""
    found = [
        chi
        for chi in all_characters(m)
        if not is_principal(chi) and is_real(chi) and parity(chi) == 1
    ]
    if len(found) != 1:
        raise NoQuadraticCharacterError(
            f"modulus {m} has {len(found)} even real non-principal characters, need exactly one"
        )
    return found[0]


def jordan_char(k: int, chi: DirichletCharacter, n: FactoredInt) -> CycloElement:
    """``J_k(chi; n) = sum_{d | n} mu(n/d) d^k chi(d)`` from its Euler product.

    The result is exact, in Q(zeta_L) with ``L`` the character's value order.
    """
    if not isinstance(n, FactoredInt):
        raise TypeError("jordan_char expects a FactoredInt")
    if k < 0:
        raise ValueError("jordan_char needs k >= 0")
    L = chi.value_order
    out = CycloElement.one(L)
    for p, e in n.factors:
        cp = char_value_element(chi, p)
        term = cp * p**k - 1
        if e > 1:
            term = term * char_value_element(chi, p ** (e - 1)) * p ** (k * (e - 1))
        out = out * term
    return out


def unit_residues(m: int) -> list[int]:
    """Residues ``1 <= g <= m`` coprime to ``m`` (``[1]`` for ``m = 1``)."""
    return [g for g in range(1, m + 1) if math.gcd(g, m) == 1]


def character_count(m: int) -> int:
    return euler_phi(factor(m))
