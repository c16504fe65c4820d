"""Pure-Python versions of the inner loops in ``_kernels.pyx``.

Same signatures and results; arbitrary-precision ints throughout, so these
never overflow and serve as the fallback when the compiled module is absent
or reports an int64 overflow.
"""

from __future__ import annotations


def series_mul_binomial(a: list[int], d: int, deg: int) -> None:
    """In place: ``a <- a * (1 - x^d) mod x^(deg+1)``."""
    for i in range(deg, d - 1, -1):
        a[i] -= a[i - d]


def series_div_binomial(a: list[int], d: int, deg: int) -> None:
    """In place: ``a <- a / (1 - x^d) mod x^(deg+1)``."""
    for i in range(d, deg + 1):
        a[i] += a[i - d]


def binomial_product_series(deg: int, mul: list[int], div: list[int]) -> list[int]:
    """Series of ``prod_{d in mul} (1 - x^d) / prod_{d in div} (1 - x^d)`` to degree ``deg``.

    Multiplications and divisions are interleaved to keep intermediate
    coefficients small.
    """
    a = [0] * (deg + 1)
    a[0] = 1
    for i in range(max(len(mul), len(div))):
        if i < len(mul) and mul[i] <= deg:
            series_mul_binomial(a, mul[i], deg)
        if i < len(div) and div[i] <= deg:
            series_div_binomial(a, div[i], deg)
    return a


def fold(coeffs: list[int], m: int, j: int) -> list[int]:
    """Bucket ``coeffs`` by exponent ``i*j mod m`` (evaluation modulo ``x^m - 1``)."""
    out = [0] * m
    if m == 1:
        out[0] = sum(coeffs)
        return out
    j %= m
    k = 0
    for c in coeffs:
        if c:
            out[k] += c
        k += j
        if k >= m:
            k -= m
    return out


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b, i):
                out[k] += x * y
    return out


def exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient ``a / b`` in ``Z[x]``, or ``None`` when ``b`` does not divide ``a``.

    Both lists are dense ascending with nonzero leading entry; ``b`` nonempty.
    """
    n, k = len(a), len(b)
    if n == 0:
        return []
    if n < k:
        return None
    r = list(a)
    lead = b[-1]
    q = [0] * (n - k + 1)
    for i in range(n - k, -1, -1):
        c = r[i + k - 1]
        if c:
            t, rem = divmod(c, lead)
            if rem:
                return None
            q[i] = t
            for s in range(k):
                r[i + s] -= t * b[s]
    for i in range(k - 1):
        if r[i]:
            return None
    return q
