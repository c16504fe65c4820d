import math
from fractions import Fraction

import pytest

from cyclotomy.cyclofield import RootOfUnity, eval_phi_exact, is_unit
from cyclotomy.numtheory import factor
from cyclotomy.polyring import cyclotomic
from cyclotomy.resultant import cyclotomic_resultant, resultant_bruteforce, resultant_closed


def _sylvester_resultant(f, g):
    # product of g over the roots of f, as an exact Sylvester determinant (f, g monic)
    a, b = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        for k, c in enumerate(a):
            rows[i][i + k] = Fraction(c)
    for i in range(m):
        for k, c in enumerate(b):
            rows[n + i][i + k] = Fraction(c)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            t = rows[r][col] / rows[col][col]
            if t:
                rows[r] = [x - t * y for x, y in zip(rows[r], rows[col])]
    return int(det)


def test_closed_examples():
    assert resultant_closed(4, 2) == 2
    assert resultant_closed(12, 4) == 9
    assert resultant_closed(15, 4) == 1
    with pytest.raises(ValueError):
        resultant_closed(4, 4)
    with pytest.raises(ValueError):
        resultant_closed(4, 1)


def test_brute_examples():
    assert resultant_bruteforce(12, 4) == 9
    assert resultant_bruteforce(6, 3) == 4
    assert resultant_bruteforce(7, 3) == 1
    with pytest.raises(ValueError):
        resultant_bruteforce(5, 5)


def test_closed_equals_brute():
    for n in range(3, 61):
        for m in range(2, n):
            assert resultant_closed(n, m) == resultant_bruteforce(n, m), (n, m)


def test_general_covers_every_pair():
    for n in range(1, 41):
        for m in range(1, 41):
            if n == m:
                assert cyclotomic_resultant(n, m) == 0
            else:
                assert cyclotomic_resultant(n, m) == resultant_bruteforce(n, m), (n, m)


def test_against_sylvester():
    for n in range(1, 19):
        for m in range(1, 19):
            assert cyclotomic_resultant(n, m) == _sylvester_resultant(cyclotomic(m), cyclotomic(n)), (n, m)


def test_unit_iff_prime_power_ratio():
    for n in range(3, 61):
        for m in range(2, n):
            v = eval_phi_exact(n, RootOfUnity(m, 1))
            ratio_pp = n % m == 0 and len(factor(n // m).factors) == 1
            assert is_unit(v) == (not ratio_pp), (n, m)


def test_galois_independent():
    for n, m in ((12, 4), (30, 5), (20, 10), (45, 9)):
        vals = [abs(eval_phi_exact(n, RootOfUnity(m, j)).norm()) for j in range(1, m) if math.gcd(j, m) == 1]
        assert len(set(vals)) == 1
        assert vals[0] == abs(resultant_closed(n, m))
