"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from cyclotomy import _kernels_py
from cyclotomy.numtheory import euler_phi, factor, squarefree_divisors
from cyclotomy.polyring import cyclotomic

try:
    from cyclotomy import _kernels as _ext
except ImportError:
    _ext = None


def _series_args(n):
    f = factor(n)
    mul, div = [], []
    for e, mu in squarefree_divisors(f):
        (mul if mu == 1 else div).append(n // e)
    return euler_phi(f) // 2, sorted(mul), sorted(div)


def cases():
    rng = random.Random(7)
    phi = list(cyclotomic(30030).coeffs)
    a = [rng.randint(-50, 50) for _ in range(600)]
    b = [rng.randint(-50, 50) for _ in range(400)] + [1]
    prod = _kernels_py.poly_mul(a, b)
    return [
        ("binomial_product_series n=30030", "binomial_product_series", _series_args(30030)),
        ("binomial_product_series n=15015", "binomial_product_series", _series_args(15015)),
        ("fold Phi_30030 mod 7", "fold", (phi, 7, 3)),
        ("poly_mul 600 x 401", "poly_mul", (a, b)),
        ("exact_div 1000 / 401", "exact_div", (prod, b)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'kernel':36} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for label, name, a in cases():
        slow = getattr(_kernels_py, name)
        t_py = min(timeit.repeat(lambda: slow(*a), number=1, repeat=args.repeat)) * 1e3
        if _ext is None:
            print(f"{label:36} {t_py:12.2f} {'n/a':>12} {'':>8}")
            continue
        fast = getattr(_ext, name)
        assert fast(*a) == slow(*a), label
        t_c = min(timeit.repeat(lambda: fast(*a), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:36} {t_py:12.2f} {t_c:12.2f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
