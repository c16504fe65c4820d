import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclotomy.numtheory import (
    FactoredInt,
    big_omega,
    chebyshev_phi1_sum,
    divisors,
    euler_phi,
    factor,
    jordan_totient,
    mangoldt_exp,
    moebius,
    phi_partial,
    radical,
    small_omega,
    squarefree_divisors,
    totients_up_to,
)


def brute_phi(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def brute_mu(n):
    f = factor(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return (-1) ** len(f.factors)


@pytest.mark.parametrize(
    "n, factors",
    [(1, ()), (12, ((2, 2), (3, 1))), (546, ((2, 1), (3, 1), (7, 1), (13, 1))), (97, ((97, 1),))],
)
def test_factor_examples(n, factors):
    assert factor(n).factors == factors
    assert factor(n).value == n


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(-5)


def test_factored_int_validates():
    with pytest.raises(ValueError):
        FactoredInt(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        FactoredInt(13, ((2, 2), (3, 1)))
    with pytest.raises(ValueError):
        FactoredInt(4, ((2, 0), (4, 1)))


@given(st.integers(1, 10**9))
def test_factor_reconstructs(n):
    f = factor(n)
    assert math.prod(p**e for p, e in f.factors) == n
    ps = [p for p, _ in f.factors]
    assert ps == sorted(set(ps))
    assert all(factor(p).factors == ((p, 1),) for p in ps if p < 10**6)


def test_multiplicative_examples():
    f12, f1, f30 = factor(12), factor(1), factor(30)
    assert (euler_phi(f12), moebius(f12), radical(f12)) == (4, 0, 6)
    assert (euler_phi(f1), moebius(f1), big_omega(f1), small_omega(f1)) == (1, 1, 0, 0)
    assert (moebius(f30), big_omega(f30), small_omega(f30)) == (-1, 3, 3)
    assert big_omega(factor(72)) == 5 and small_omega(factor(72)) == 2


def test_functions_require_factored_int():
    with pytest.raises(TypeError):
        euler_phi(12)


def test_mangoldt_examples():
    assert [mangoldt_exp(factor(n)) for n in (8, 12, 1, 7, 49)] == [2, 1, 1, 7, 7]


@pytest.mark.parametrize("x, n, want", [(Fraction(1, 2), 2, 0), (Fraction(7, 5), 7, 1), (6, 6, 2)])
def test_phi_partial_examples(x, n, want):
    assert phi_partial(x, factor(n)) == want


def test_phi_partial_full_range():
    for n in range(1, 501):
        assert phi_partial(n, factor(n)) == euler_phi(factor(n))


@given(st.fractions(min_value=0, max_value=300), st.integers(1, 300))
def test_phi_partial_brute(x, n):
    want = sum(1 for j in range(1, math.floor(x) + 1) if math.gcd(j, n) == 1)
    assert phi_partial(x, factor(n)) == want


def test_jordan_examples():
    assert jordan_totient(2, factor(6)) == 24
    assert jordan_totient(0, factor(4)) == 0
    assert jordan_totient(0, factor(6)) == 0
    assert jordan_totient(0, factor(1)) == 1
    for n in range(1, 101):
        assert jordan_totient(1, factor(n)) == euler_phi(factor(n))


def test_jordan_divisor_sum():
    for n in range(1, 501):
        f = factor(n)
        for k in range(4):
            want = sum(moebius(factor(n // d)) * d**k for d in divisors(f))
            assert jordan_totient(k, f) == want


def test_multiplicativity_pairs():
    for a in range(1, 201):
        for b in range(1, 201, 7):
            if math.gcd(a, b) != 1:
                continue
            fa, fb, fab = factor(a), factor(b), factor(a * b)
            assert euler_phi(fab) == euler_phi(fa) * euler_phi(fb)
            assert moebius(fab) == moebius(fa) * moebius(fb)
            for k in (0, 1, 2):
                assert jordan_totient(k, fab) == jordan_totient(k, fa) * jordan_totient(k, fb)


def test_phi_and_mu_brute():
    for n in range(1, 301):
        assert euler_phi(factor(n)) == brute_phi(n)
        assert moebius(factor(n)) == brute_mu(n)


def test_divisors_and_squarefree_divisors():
    assert divisors(factor(12)) == [1, 2, 3, 4, 6, 12]
    assert sorted(squarefree_divisors(factor(12))) == [(1, 1), (2, -1), (3, -1), (6, 1)]


def test_totient_sieve():
    tot = totients_up_to(400)
    assert tot[1:] == [euler_phi(factor(n)) for n in range(1, 401)]


def test_chebyshev_examples():
    assert chebyshev_phi1_sum(3) == pytest.approx(math.log(3))
    assert chebyshev_phi1_sum(5) == pytest.approx(math.log(3) + math.log(2) + math.log(5))
    assert abs(chebyshev_phi1_sum(10**5) / 10**5 - 1) < 0.03
    with pytest.raises(ValueError):
        chebyshev_phi1_sum(2)
