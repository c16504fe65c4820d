import math

import pytest

from cyclotomy.characters import (
    all_characters,
    char_eval,
    char_value_complex,
    char_value_element,
    character_count,
    is_principal,
    is_real,
    jordan_char,
    parity,
    quadratic_character,
    unit_group,
)
from cyclotomy.cyclofield import CycloElement, RootOfUnity
from cyclotomy.errors import NoQuadraticCharacterError
from cyclotomy.numtheory import divisors, euler_phi, factor, moebius


def test_unit_group_examples():
    g5 = unit_group(5)
    assert len(g5.generators) == 1 and g5.orders == (4,)
    assert pow(g5.generators[0][0], 2, 5) != 1
    assert unit_group(8).generators == ((7, 2), (5, 2))
    assert unit_group(1).generators == ()
    assert unit_group(16).orders == (2, 4)


def test_unit_group_structure():
    for m in range(1, 61):
        G = unit_group(m)
        assert math.prod(G.orders) == euler_phi(factor(m))
        units = [a for a in range(m) if math.gcd(a, m) == 1] if m > 1 else [0]
        assert G.units() == units
        for a in units:
            exps = G.dlog(a)
            b = 1 % m
            for (g, _), k in zip(G.generators, exps):
                b = b * pow(g, k, m) % m
            assert b == a % m


def test_character_count_and_distinct():
    for m in range(1, 31):
        chars = all_characters(m)
        assert len(chars) == character_count(m) == euler_phi(factor(m))
        assert is_principal(chars[0])
        tables = {tuple(chi.log_value(a) for a in range(m)) for chi in chars}
        assert len(tables) == len(chars)


def test_legendre_mod5():
    chi = quadratic_character(5)
    assert [char_eval(chi, a) for a in (1, 2, 3, 4)] == [
        RootOfUnity(1, 0),
        RootOfUnity(2, 1),
        RootOfUnity(2, 1),
        RootOfUnity(1, 0),
    ]
    assert char_eval(chi, 10) == 0


def test_mod4():
    chars = all_characters(4)
    assert len(chars) == 2
    chi = chars[1]
    assert char_eval(chi, 3) == RootOfUnity(2, 1)
    assert parity(chi) == -1


def test_zero_off_units():
    for m in range(2, 25):
        for chi in all_characters(m):
            for a in range(m):
                if math.gcd(a, m) > 1:
                    assert char_eval(chi, a) == 0
                    assert char_value_complex(chi, a) == 0


def test_multiplicative():
    for m in range(1, 25):
        for chi in all_characters(m):
            for a in range(1, m + 1):
                for b in range(1, m + 1):
                    if math.gcd(a * b, m) == 1:
                        assert char_eval(chi, a * b) == char_eval(chi, a) * char_eval(chi, b)


def test_orthogonality():
    for m in range(1, 31):
        chars = all_characters(m)
        units = [a for a in range(1, m + 1) if math.gcd(a, m) == 1]
        for chi in chars[1:]:
            assert sum((char_value_element(chi, a) for a in units), CycloElement.zero(chi.value_order)).is_zero()
        for a in units:
            if a % m != 1 % m:
                total = sum(char_value_complex(chi, a) for chi in chars)
                assert abs(total) < 1e-9


def test_quadratic_character():
    for m in (5, 8, 10, 12):
        chi = quadratic_character(m)
        assert is_real(chi) and parity(chi) == 1 and not is_principal(chi)
    with pytest.raises(NoQuadraticCharacterError):
        quadratic_character(3)
    with pytest.raises(NoQuadraticCharacterError):
        quadratic_character(24)


def test_conj():
    for m in (7, 9, 16):
        for chi in all_characters(m):
            for a in range(1, m):
                if math.gcd(a, m) == 1:
                    assert char_eval(chi.conj(), a) == char_eval(chi, a).conjugate()


def _jordan_brute(k, chi, n):
    L = chi.value_order
    out = CycloElement.zero(L)
    for d in divisors(factor(n)):
        mu = moebius(factor(n // d))
        if mu:
            out = out + char_value_element(chi, d) * (mu * d**k)
    return out


def test_jordan_char_examples():
    principal5 = all_characters(5)[0]
    assert jordan_char(0, principal5, factor(6)) == 0
    chi = quadratic_character(5)
    assert jordan_char(0, chi, factor(6)) == 4
    for p in (2, 3, 7, 11):
        want = char_value_element(chi, p) * p - 1
        assert jordan_char(1, chi, factor(p)) == want


def test_jordan_char_brute():
    for m in range(1, 13):
        for chi in all_characters(m):
            for n in range(1, 301):
                for k in (0, 1):
                    assert jordan_char(k, chi, factor(n)) == _jordan_brute(k, chi, n), (m, n, k)


def test_jordan_char_multiplicative():
    for m in (5, 7, 8, 12):
        for chi in all_characters(m):
            for a in range(1, 40):
                for b in range(1, 40):
                    if math.gcd(a, b) == 1:
                        lhs = jordan_char(1, chi, factor(a * b))
                        assert lhs == jordan_char(1, chi, factor(a)) * jordan_char(1, chi, factor(b))


def test_jordan_char_coprime_closed_form():
    for chi in all_characters(7):
        for n in range(1, 60):
            if n % 7 == 0:
                continue
            z = complex(char_value_complex(chi, n)) * n
            for p in factor(n).primes:
                z *= 1 - complex(char_value_complex(chi.conj(), p)) / p
            assert abs(jordan_char(1, chi, factor(n)).to_complex() - z) < 1e-9


def test_jordan_char_requires_factored():
    with pytest.raises(TypeError):
        jordan_char(1, all_characters(5)[0], 6)
