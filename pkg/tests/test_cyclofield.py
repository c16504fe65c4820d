import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from cyclotomy.cyclofield import (
    CycloElement,
    RootOfUnity,
    as_root,
    eval_phi_derivative_exact,
    eval_phi_exact,
    eval_poly,
    from_text,
    is_unit,
    logderiv_exact,
    reduce,
    to_text,
)
from cyclotomy.errors import (
    FieldZeroDivisionError,
    ModulusMismatchError,
    NotAlgebraicIntegerError,
    PoleError,
)
from cyclotomy.numtheory import euler_phi, factor
from cyclotomy.polyring import IntPolynomial as P
from cyclotomy.polyring import cyclotomic, eval_at_integer

Z = CycloElement.zeta_power
rat = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def elements(draw, m=None):
    m = m or draw(st.integers(1, 24))
    coords = draw(st.lists(rat, min_size=euler_phi(factor(m)), max_size=euler_phi(factor(m))))
    return CycloElement(m, coords)


@st.composite
def triples(draw):
    m = draw(st.integers(1, 24))
    return m, draw(elements(m)), draw(elements(m)), draw(elements(m))


def coprime_exponents(m):
    return [j for j in range(1, max(m, 2)) if math.gcd(j, m) == 1]


# --- roots of unity -----------------------------------------------------------------


def test_root_invariants():
    assert RootOfUnity(4, 5) == RootOfUnity(4, 1)
    assert RootOfUnity(4, -1) == RootOfUnity(4, 3)
    with pytest.raises(ValueError):
        RootOfUnity(4, 2)
    with pytest.raises(ValueError):
        RootOfUnity(0, 1)
    assert RootOfUnity.from_exponent(12, 4) == RootOfUnity(3, 1)
    assert RootOfUnity.from_exponent(6, 0) == RootOfUnity(1, 0)
    assert as_root("5/2") == RootOfUnity(5, 2) and as_root(7) == RootOfUnity(7, 1)
    assert as_root((8, 3)) == RootOfUnity(8, 3)
    assert abs(RootOfUnity(4, 1).to_complex() - 1j) < 1e-15


def test_root_group_ops():
    r = RootOfUnity(6, 1)
    assert r * r == RootOfUnity(3, 1)
    assert r**3 == RootOfUnity(2, 1)
    assert r.conjugate() == RootOfUnity(6, 5)
    assert r.element(12) == Z(12, 2)


# --- reduction and field laws --------------------------------------------------------


def test_reduce_examples():
    assert reduce(P([0, 0, 0, 1]), 3) == 1
    assert reduce(P([1, 1, 1]), 3).is_zero()
    z5 = Z(5, 1)
    inv = z5.inverse()
    assert inv.coords == (-1, -1, -1, -1)
    assert inv == Z(5, 4)
    assert z5 * inv == 1


def test_errors():
    with pytest.raises(FieldZeroDivisionError):
        CycloElement.zero(7).inverse()
    with pytest.raises(ZeroDivisionError):
        CycloElement.one(5) / CycloElement.zero(5)
    with pytest.raises(ModulusMismatchError):
        Z(3, 1) + Z(4, 1)
    with pytest.raises(ValueError):
        CycloElement(5, [1, 2])


@given(triples())
def test_field_laws(t):
    m, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == CycloElement.zero(m)
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(st.integers(1, 24), st.lists(st.integers(-9, 9), max_size=40), st.lists(st.integers(-9, 9), max_size=40))
def test_reduce_is_homomorphism(m, f, g):
    f, g = P(f), P(g)
    assert reduce(f * g, m) == reduce(f, m) * reduce(g, m)
    assert reduce(f + g, m) == reduce(f, m) + reduce(g, m)


# --- Galois action and norm ---------------------------------------------------------------


def test_automorphism_examples():
    assert Z(5, 1).automorphism(2) == Z(5, 2)
    with pytest.raises(ValueError):
        Z(6, 1).automorphism(2)


@given(elements())
def test_automorphism_properties(a):
    m = a.modulus
    assert a.automorphism(1) == a
    assert abs(a.automorphism(m - 1 if m > 1 else 1).to_complex() - a.to_complex().conjugate()) < 1e-9 * (
        1 + abs(a.to_complex())
    )
    js = coprime_exponents(m)
    j1, j2 = js[0], js[-1]
    assert a.automorphism(j1).automorphism(j2) == a.automorphism(j1 * j2 % m if m > 1 else 1)


@given(st.integers(1, 24).flatmap(lambda m: st.tuples(elements(m), elements(m))))
def test_automorphism_is_ring_map(ab):
    a, b = ab
    for j in coprime_exponents(a.modulus):
        assert (a * b).automorphism(j) == a.automorphism(j) * b.automorphism(j)
        assert (a + b).automorphism(j) == a.automorphism(j) + b.automorphism(j)


def test_norm_identity():
    for m in range(1, 31):
        for k in range(-3, 4):
            a = CycloElement.scalar(m, k) - Z(m, 1)
            assert a.norm() == eval_at_integer(cyclotomic(m), k)


def test_norm_examples():
    assert CycloElement.one(9).norm() == 1
    for m in range(3, 31):
        assert Z(m, 1).norm() == 1


@given(st.integers(1, 24).flatmap(lambda m: st.tuples(elements(m), elements(m))))
def test_norm_multiplicative(ab):
    a, b = ab
    assert isinstance(a.norm(), (int, Fraction))
    assert (a * b).norm() == a.norm() * b.norm()


def test_embed():
    a = Z(3, 1) + 2
    assert a.embed(12) == Z(12, 4) + 2
    assert abs(a.embed(12).to_complex() - a.to_complex()) < 1e-12
    with pytest.raises(ValueError):
        a.embed(10)


# --- the oracle ------------------------------------------------------------------------------


def test_oracle_examples():
    assert eval_phi_exact(4, RootOfUnity(4, 1)).is_zero()
    assert eval_phi_exact(3, RootOfUnity(4, 1)).coords == (0, 1)
    assert eval_phi_exact(9, RootOfUnity(3, 1)) == 3
    assert eval_phi_derivative_exact(5, RootOfUnity(1, 0)) == 10
    assert logderiv_exact(2, RootOfUnity(3, 1)) == -Z(3, 1)
    assert logderiv_exact(6, RootOfUnity(1, 0)) == 1
    with pytest.raises(PoleError):
        logderiv_exact(5, RootOfUnity(5, 2))


def test_oracle_zero_iff_same_order():
    for m in range(1, 16):
        for n in range(1, 40):
            for j in coprime_exponents(m):
                v = eval_phi_exact(n, RootOfUnity(m, j % m))
                assert v.is_zero() == (n == m)


def test_oracle_numeric():
    rng = random.Random(3)
    for _ in range(200):
        n, m = rng.randint(1, 150), rng.randint(1, 40)
        j = rng.choice(coprime_exponents(m)) % m
        z = cmath.exp(2j * math.pi * j / m)
        want = cyclotomic(n).coeffs
        direct = sum(c * z**k for k, c in enumerate(want))
        assert abs(eval_phi_exact(n, RootOfUnity(m, j)).to_complex() - direct) < 1e-8 * (1 + abs(direct))


def test_galois_invariance():
    for m in range(1, 21):
        for n in range(1, 101):
            base = eval_phi_exact(n, RootOfUnity(m, 1 % m))
            for j in coprime_exponents(m):
                assert eval_phi_exact(n, RootOfUnity(m, j % m)) == base.automorphism(j)


def test_self_reciprocal_integer_lemma():
    for m in (3, 4, 6):
        for n in range(4, 301):
            d = euler_phi(factor(n))
            v = eval_phi_exact(n, RootOfUnity(m, 1)) * Z(m, -(d // 2))
            assert v.is_integral() and v.is_rational(), (n, m)


def test_self_reciprocal_evaluation_decomposition():
    # f(z) = +-|f(z)| z^(d/2) for palindromic f and |z| = 1
    rng = random.Random(11)
    for _ in range(50):
        n, m = rng.randint(2, 200), rng.randint(2, 60)
        j = rng.choice(coprime_exponents(m))
        val = complex(eval_phi_exact(n, RootOfUnity(m, j)).to_complex(100))
        half = cmath.exp(1j * math.pi * j * euler_phi(factor(n)) / m)
        ratio = val / half
        assert abs(ratio.imag) < 1e-9
        assert abs(abs(ratio.real) - abs(val)) < 1e-9


def test_is_unit():
    assert not is_unit(eval_phi_exact(12, RootOfUnity(4, 1)))
    assert is_unit(eval_phi_exact(7, RootOfUnity(3, 1)))
    with pytest.raises(NotAlgebraicIntegerError):
        is_unit(CycloElement(3, [Fraction(1, 2), 0]))


def test_high_precision_complex():
    v = Z(7, 1).to_complex(120)
    assert abs(complex(v) - cmath.exp(2j * math.pi / 7)) < 1e-15
    assert type(Z(7, 1).to_complex()) is complex


def test_text_form():
    assert to_text(CycloElement(3, [0, -2])) == "-2*z3^1"
    assert to_text(eval_phi_exact(3, RootOfUnity(4, 1))) == "z4^1"
    assert to_text(CycloElement.zero(5)) == "0"
    assert to_text(CycloElement(5, [1, Fraction(-2, 3), 0, 4])) == "1 + -2/3*z5^1 + 4*z5^3"


@given(elements())
def test_text_roundtrip(a):
    assert from_text(to_text(a), a.modulus) == a


def test_eval_poly_with_root():
    f = P([1, 2, 3])
    r = RootOfUnity(5, 2)
    assert eval_poly(f, r) == 1 + 2 * Z(5, 2) + 3 * Z(5, 4)
