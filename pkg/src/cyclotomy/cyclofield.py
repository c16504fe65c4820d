"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored in the power basis ``1, z, ..., z^(phi(m)-1)`` modulo
``Phi_m``; equality is coordinate equality.  Evaluating a cyclotomic
polynomial at a root of unity here is the reference every closed formula
in the package is tested against.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import mpmath

from . import _core
from .errors import (
    FieldZeroDivisionError,
    ModulusMismatchError,
    NotAlgebraicIntegerError,
    PoleError,
)
from .numtheory import euler_phi, factor
from .polyring import IntPolynomial, cyclotomic, derivative

Rational = Union[int, Fraction]


def _norm_q(x) -> Rational:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"coordinates must be int or Fraction, not {type(x).__name__}")


@dataclass(frozen=True)
class RootOfUnity:
    """``zeta_order ** exponent`` with ``gcd(exponent, order) = 1``.

    The exponent is canonicalized into ``[0, order)``; order 1 denotes 1.
    """

    order: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"root order must be positive, got {self.order}")
        j = self.exponent % self.order
        if math.gcd(j, self.order) != 1:
            raise ValueError(f"zeta_{self.order}^{self.exponent} is not a primitive root (gcd != 1)")
        object.__setattr__(self, "exponent", j)

    @classmethod
    def from_exponent(cls, order: int, k: int) -> RootOfUnity:
        """``zeta_order ** k`` for any integer ``k``, reduced to its exact order."""
        k %= order
        g = math.gcd(k, order)
        return cls(order // g, k // g)

    def __str__(self) -> str:
        return f"{self.order}/{self.exponent}"

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        L = self.order * other.order // math.gcd(self.order, other.order)
        return RootOfUnity.from_exponent(
            L, self.exponent * (L // self.order) + other.exponent * (L // other.order)
        )

    def __pow__(self, k: int) -> RootOfUnity:
        return RootOfUnity.from_exponent(self.order, self.exponent * k)

    def conjugate(self) -> RootOfUnity:
        return RootOfUnity(self.order, -self.exponent)

    def element(self, modulus: int | None = None) -> CycloElement:
        """This root as a field element of Q(zeta_modulus) (default: its own order)."""
        m = self.order if modulus is None else modulus
        if m % self.order:
            raise ModulusMismatchError(f"zeta_{self.order} does not lie in Q(zeta_{m})")
        return CycloElement.zeta_power(m, self.exponent * (m // self.order))

    def to_complex(self, precision: int = 53):
        return self.element().to_complex(precision)


def as_root(spec) -> RootOfUnity:
    """Accept a :class:`RootOfUnity`, an order ``m`` (meaning ``zeta_m``), ``(m, j)`` or ``"m/j"``."""
    if isinstance(spec, RootOfUnity):
        return spec
    if isinstance(spec, int):
        return RootOfUnity(spec, 1 if spec > 1 else 0)
    if isinstance(spec, tuple):
        return RootOfUnity(*spec)
    if isinstance(spec, str):
        m, _, j = spec.partition("/")
        m = int(m)
        return RootOfUnity(m, int(j) if j else (1 if m > 1 else 0))
    raise TypeError(f"cannot interpret {spec!r} as a root of unity")


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of ``z^k`` for ``0 <= k < m``."""
    phi = cyclotomic(m).coeffs
    d = len(phi) - 1
    rows = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by z and reduce z^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce_buckets(m: int, buckets: Sequence[Rational]) -> tuple[Rational, ...]:
    table = _power_table(m)
    d = len(table[0])
    out: list[Rational] = [0] * d
    for k, b in enumerate(buckets):
        if b:
            row = table[k]
            for i in range(d):
                if row[i]:
                    out[i] += b * row[i]
    return tuple(_norm_q(x) for x in out)


class CycloElement:
    """An element of Q(zeta_m) with rational power-basis coordinates."""

    __slots__ = ("modulus", "coords")

    def __init__(self, modulus: int, coords: Iterable[Rational]):
        c = tuple(_norm_q(x) for x in coords)
        d = euler_phi(factor(modulus))
        if len(c) != d:
            raise ValueError(f"Q(zeta_{modulus}) needs {d} coordinates, got {len(c)}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coords", c)

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    # constructors

    @classmethod
    def _raw(cls, modulus: int, coords: tuple) -> CycloElement:
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", modulus)
        object.__setattr__(obj, "coords", coords)
        return obj

    @classmethod
    def from_buckets(cls, modulus: int, buckets: Sequence[Rational]) -> CycloElement:
        """Element ``sum_k buckets[k] * z^k`` with ``len(buckets) == modulus``."""
        return cls._raw(modulus, _reduce_buckets(modulus, buckets))

    @classmethod
    def scalar(cls, modulus: int, q: Rational) -> CycloElement:
        d = euler_phi(factor(modulus))
        return cls._raw(modulus, (_norm_q(q),) + (0,) * (d - 1))

    @classmethod
    def zero(cls, modulus: int) -> CycloElement:
        return cls.scalar(modulus, 0)

    @classmethod
    def one(cls, modulus: int) -> CycloElement:
        return cls.scalar(modulus, 1)

    @classmethod
    def zeta_power(cls, modulus: int, k: int) -> CycloElement:
        return cls._raw(modulus, _power_table(modulus)[k % modulus])

    # basic protocol

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def rational_value(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElement):
            return self.modulus == other.modulus and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus, self.coords))

    def __repr__(self) -> str:
        return f"CycloElement({self.modulus}, {list(self.coords)})"

    def __str__(self) -> str:
        return to_text(self)

    # arithmetic

    def _coerce(self, other) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"cannot combine Q(zeta_{self.modulus}) with Q(zeta_{other.modulus})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.scalar(self.modulus, other)
        raise TypeError(f"cannot combine CycloElement with {type(other).__name__}")

    def __add__(self, other) -> CycloElement:
        o = self._coerce(other)
        return CycloElement._raw(
            self.modulus, tuple(_norm_q(a + b) for a, b in zip(self.coords, o.coords))
        )

    __radd__ = __add__

    def __neg__(self) -> CycloElement:
        return CycloElement._raw(self.modulus, tuple(-a for a in self.coords))

    def __sub__(self, other) -> CycloElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CycloElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> CycloElement:
        if isinstance(other, (int, Fraction)):
            return CycloElement._raw(self.modulus, tuple(_norm_q(a * other) for a in self.coords))
        o = self._coerce(other)
        m = self.modulus
        buckets: list[Rational] = [0] * m
        for i, a in enumerate(self.coords):
            if a:
                for k, b in enumerate(o.coords):
                    if b:
                        buckets[(i + k) % m] += a * b
        return CycloElement.from_buckets(m, buckets)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycloElement:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise FieldZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> CycloElement:
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> CycloElement:
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloElement.one(self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> CycloElement:
        """Multiplicative inverse by the extended Euclidean algorithm against ``Phi_m``."""
        if self.is_zero():
            raise FieldZeroDivisionError("the zero element has no inverse")
        if self.modulus <= 2:
            return CycloElement.scalar(self.modulus, Fraction(1) / self.coords[0])
        s = _ext_gcd_inverse(list(self.coords), list(cyclotomic(self.modulus).coeffs))
        return CycloElement(self.modulus, s)

    # Galois structure

    def automorphism(self, j: int) -> CycloElement:
        """Image under ``z -> z^j``."""
        m = self.modulus
        if math.gcd(j, m) != 1:
            raise ValueError(f"sigma_{j} is not an automorphism of Q(zeta_{m})")
        buckets: list[Rational] = [0] * m
        for i, c in enumerate(self.coords):
            if c:
                buckets[(i * j) % m] += c
        return CycloElement.from_buckets(m, buckets)

    def conjugate(self) -> CycloElement:
        return self.automorphism(-1 % self.modulus)

    def norm(self) -> Rational:
        """Product of all Galois conjugates, collapsed to a rational."""
        m = self.modulus
        out = CycloElement.one(m)
        for j in range(1, m + 1):
            if math.gcd(j, m) == 1:
                out = out * self.automorphism(j)
        return out.rational_value()

    def embed(self, modulus: int) -> CycloElement:
        """The same number viewed in Q(zeta_modulus), for ``self.modulus | modulus``."""
        if modulus == self.modulus:
            return self
        if modulus % self.modulus:
            raise ModulusMismatchError(f"Q(zeta_{self.modulus}) is not a subfield of Q(zeta_{modulus})")
        step = modulus // self.modulus
        buckets: list[Rational] = [0] * modulus
        for i, c in enumerate(self.coords):
            if c:
                buckets[(i * step) % modulus] += c
        return CycloElement.from_buckets(modulus, buckets)

    def to_complex(self, precision: int = 53):
        """Numeric value; a Python ``complex`` at <= 53 bits, else an ``mpmath.mpc``."""
        m = self.modulus
        with mpmath.workprec(max(precision, 53) + 10):
            acc = mpmath.mpc(0)
            for k, c in enumerate(self.coords):
                if c:
                    q = mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
                    acc += q * mpmath.expjpi(mpmath.mpf(2 * k) / m)
        if precision <= 53:
            return complex(acc)
        return acc


def _poly_divmod_q(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        t = Fraction(a[-1]) / lead
        s = len(a) - len(b)
        q[s] = t
        for i, c in enumerate(b):
            a[s + i] -= t * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for k, y in enumerate(b):
            out[i + k] += x * y
    return out


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _ext_gcd_inverse(a: list, modpoly: list) -> list:
    """``s`` with ``s*a = 1 mod modpoly``, padded to ``deg(modpoly)`` entries."""
    d = len(modpoly) - 1
    r0, r1 = [Fraction(c) for c in modpoly], _trim([Fraction(c) for c in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod_q(r0, r1)
        r0, r1 = r1, _trim(r)
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    # r1 is now a nonzero constant because modpoly is irreducible
    c = r1[0]
    s = [x / c for x in s1]
    if len(s) > d:
        s = _poly_divmod_q(s, [Fraction(x) for x in modpoly])[1]
    return list(s) + [0] * (d - len(s))


# --- evaluation of polynomials at roots of unity ---------------------------


def reduce(f: IntPolynomial, m: int) -> CycloElement:
    """The class of ``f`` in Z[x]/(Phi_m), i.e. ``f(zeta_m)``."""
    return CycloElement.from_buckets(m, _core.fold(list(f.coeffs), m, 1))


def eval_poly(f: IntPolynomial, root: RootOfUnity) -> CycloElement:
    """``f(root)`` as an element of Q(zeta_root.order)."""
    root = as_root(root)
    return CycloElement.from_buckets(root.order, _core.fold(list(f.coeffs), root.order, root.exponent))


def eval_phi_exact(n: int, root) -> CycloElement:
    """``Phi_n(root)`` exactly, from the coefficients of ``Phi_n``."""
    return eval_poly(cyclotomic(n), as_root(root))


def eval_phi_derivative_exact(n: int, root) -> CycloElement:
    return eval_poly(derivative(cyclotomic(n)), as_root(root))


def logderiv_exact(n: int, root) -> CycloElement:
    """``Phi_n'(root) / Phi_n(root)``; raises :class:`PoleError` at ``n == order``."""
    root = as_root(root)
    if n == root.order:
        raise PoleError(f"Phi_{n} vanishes at zeta_{root.order}^{root.exponent}")
    return eval_phi_derivative_exact(n, root) * eval_phi_exact(n, root).inverse()


def is_unit(a: CycloElement) -> bool:
    """Whether an algebraic integer of Z[zeta_m] is a unit (``|norm| == 1``)."""
    if not a.is_integral():
        raise NotAlgebraicIntegerError(f"{a} has non-integral coordinates")
    return abs(a.norm()) == 1


# --- canonical text form ---------------------------------------------------


def _fmt_q(q: Rational) -> str:
    return f"{q.numerator}/{q.denominator}" if isinstance(q, Fraction) else str(q)


def to_text(a: CycloElement) -> str:
    """``c0 + c1*z{m}^1 + ...`` with zero terms dropped and unit coefficients elided."""
    parts = []
    for k, c in enumerate(a.coords):
        if not c:
            continue
        if k == 0:
            parts.append(_fmt_q(c))
        elif c == 1:
            parts.append(f"z{a.modulus}^{k}")
        elif c == -1:
            parts.append(f"-z{a.modulus}^{k}")
        else:
            parts.append(f"{_fmt_q(c)}*z{a.modulus}^{k}")
    return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^(?:(-?\d+(?:/\d+)?)\*)?(-)?z(\d+)\^(\d+)$|^(-?\d+(?:/\d+)?)$")


def from_text(text: str, modulus: int | None = None) -> CycloElement:
    """Parse the canonical text form; ``modulus`` is required when no ``z`` term appears."""
    terms = [t.strip() for t in text.replace("−", "-").split(" + ")]
    found: dict[int, Rational] = {}
    m = modulus
    for t in terms:
        mt = _TERM.match(t)
        if not mt:
            raise ValueError(f"malformed term {t!r}")
        coef, neg, mod, k, const = mt.groups()
        if const is not None:
            found[0] = found.get(0, 0) + Fraction(const)
            continue
        if m is None:
            m = int(mod)
        elif int(mod) != m:
            raise ModulusMismatchError(f"mixed moduli in {text!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if neg:
            c = -c
        found[int(k)] = found.get(int(k), 0) + c
    if m is None:
        raise ValueError("modulus needed for a constant-only element")
    buckets: list[Rational] = [0] * m
    for k, c in found.items():
        buckets[k % m] += c
    return CycloElement.from_buckets(m, buckets)
