"""Dense integer polynomials and cyclotomic polynomial generation."""

from __future__ import annotations

import enum
import os
import threading
from collections import OrderedDict
from typing import Iterable, Sequence

from . import _core
from .errors import NotDivisibleError
from .numtheory import FactoredInt, as_factored, euler_phi, radical, squarefree_divisors


class IntPolynomial:
    """Polynomial with integer coefficients, stored dense and ascending.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def x_pow_minus_one(cls, n: int) -> IntPolynomial:
        """``x^n - 1``."""
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return to_text(self)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return sub(self, _lift(other))

    def __rsub__(self, other) -> IntPolynomial:
        return sub(_lift(other), self)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return exact_div(self, _lift(other))

    def __call__(self, k: int) -> int:
        return eval_at_integer(self, k)


def _lift(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")


def add(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(out)


def sub(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return add(f, -g)


def mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(_core.poly_mul(list(f.coeffs), list(g.coeffs)))


def exact_div(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Quotient ``f / g`` in ``Z[x]``; raises :class:`NotDivisibleError` otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = _core.exact_div(list(f.coeffs), list(g.coeffs))
    if q is None:
        raise NotDivisibleError(f"{to_text(g)} does not divide {to_text(f)}")
    return IntPolynomial(q)


def divides(g: IntPolynomial, f: IntPolynomial) -> bool:
    return _core.exact_div(list(f.coeffs), list(g.coeffs)) is not None


def derivative(f: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(k * c for k, c in enumerate(f.coeffs) if k)


def substitute_power(f: IntPolynomial, p: int) -> IntPolynomial:
    """``f(x^p)``."""
    if p < 1:
        raise ValueError("substitute_power needs p >= 1")
    if f.is_zero():
        return f
    out = [0] * (p * f.degree + 1)
    out[::p] = f.coeffs
    return IntPolynomial(out)


def eval_at_integer(f: IntPolynomial, k: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * k + c
    return acc


def height(f: IntPolynomial) -> int:
    """Largest absolute coefficient."""
    return max((abs(c) for c in f.coeffs), default=0)


class Reciprocity(str, enum.Enum):
    SELF = "self_reciprocal"
    ANTI = "anti_self_reciprocal"
    NEITHER = "neither"


def reciprocity_type(f: IntPolynomial) -> Reciprocity:
    if f.is_zero():
        raise ValueError("reciprocity of the zero polynomial is undefined")
    c = f.coeffs
    r = c[::-1]
    if c == r:
        return Reciprocity.SELF
    if all(x == -y for x, y in zip(c, r)):
        return Reciprocity.ANTI
    return Reciprocity.NEITHER


# --- canonical text form: "c0,c1,...,cd" ascending -------------------------


def to_text(f: IntPolynomial) -> str:
    return ",".join(str(c) for c in f.coeffs) if f.coeffs else "0"


def from_text(text: str) -> IntPolynomial:
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty polynomial text")
    try:
        return IntPolynomial(int(tok) for tok in s.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed polynomial text {text!r}") from exc


# --- cyclotomic polynomials ------------------------------------------------


class _MemoCache:
    """Bounded LRU map with atomic insert-if-absent."""

    def __init__(self, max_entries: int | None):
        self.max_entries = max_entries
        self.enabled = True
        self._data: OrderedDict[int, IntPolynomial] = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key: int) -> IntPolynomial | None:
        if not self.enabled:
            return None
        with self._lock:
            val = self._data.get(key)
            if val is not None:
                self._data.move_to_end(key)
            return val

    def put_if_absent(self, key: int, val: IntPolynomial) -> IntPolynomial:
        if not self.enabled:
            return val
        with self._lock:
            have = self._data.get(key)
            if have is not None:
                return have
            self._data[key] = val
            if self.max_entries is not None:
                while len(self._data) > self.max_entries:
                    self._data.popitem(last=False)
            return val

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


def _cache_cap() -> int | None:
    raw = os.environ.get("CYCLOTOMY_CACHE_MAX")
    if not raw:
        return None
    cap = int(raw)
    if cap < 0:
        raise ValueError("CYCLOTOMY_CACHE_MAX must be >= 0")
    return cap


CACHE = _MemoCache(_cache_cap())


def set_cache_enabled(flag: bool) -> None:
    CACHE.enabled = flag
    if not flag:
        CACHE.clear()


def _squarefree_cyclotomic(r: FactoredInt) -> IntPolynomial:
    # Phi_r = prod_{d | r} (1 - x^d)^{mu(r/d)} for r > 1; the product is
    # palindromic, so only the lower half is computed.
    if r.value == 1:
        return IntPolynomial([-1, 1])
    deg = euler_phi(r)
    half = deg // 2
    mul_d, div_d = [], []
    for e, mu in squarefree_divisors(r):
        d = r.value // e
        (mul_d if mu == 1 else div_d).append(d)
    mul_d.sort()
    div_d.sort()
    low = _core.binomial_product_series(half, mul_d, div_d)
    top = low[: deg - half][::-1]
    return IntPolynomial(low + top)


def cyclotomic(n: int | FactoredInt) -> IntPolynomial:
    """The ``n``-th cyclotomic polynomial, memoized."""
    fn = as_factored(n)
    hit = CACHE.get(fn.value)
    if hit is not None:
        return hit
    r = radical(fn)
    if r == fn.value:
        poly = _squarefree_cyclotomic(fn)
    else:
        poly = substitute_power(cyclotomic(r), fn.value // r)
    return CACHE.put_if_absent(fn.value, poly)


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    out = IntPolynomial([1])
    for f in polys:
        out = out * f
    return out
