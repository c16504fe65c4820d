import math

import mpmath
import pytest

from cyclotomy.closedform import (
    CLOSED_FORM_ORDERS,
    GammaPower,
    abs_log_formula_5812,
    abs_value_low_m,
    closed_form_value,
    coprime_corollary_value,
    evaluate_coprime_plan,
    gamma_element,
    is_real_value,
    mod1_case,
    modminus1_case,
    one_case_value,
    reduce_coprime,
    sign_magnitude,
    value_at_1,
    value_at_i,
    value_at_minus1,
    value_at_zeta3,
    value_at_zeta5,
    value_at_zeta6,
)
from cyclotomy.cyclofield import CycloElement, RootOfUnity, eval_phi_exact
from cyclotomy.errors import InapplicableError
from cyclotomy.numtheory import factor

Z = CycloElement.zeta_power


def roots(m):
    if m == 1:
        return [RootOfUnity(1, 0)]
    return [RootOfUnity(m, j) for j in range(1, m) if math.gcd(j, m) == 1]


def test_values_at_pm1():
    assert value_at_1(9) == 3 and value_at_1(1) == 0 and value_at_1(12) == 1
    assert value_at_minus1(18) == 3 and value_at_minus1(12) == 1
    assert value_at_minus1(1) == -2 and value_at_minus1(2) == 0
    for n in range(1, 400):
        assert value_at_1(n) == eval_phi_exact(n, RootOfUnity(1, 0))
        assert value_at_minus1(n) == eval_phi_exact(n, RootOfUnity(2, 1))


def test_mod_lemmas_examples():
    assert mod1_case(49, 3) == 1
    assert mod1_case(3 * 49, 3) == 7
    assert mod1_case(8, 3) is None
    z3 = RootOfUnity(3, 1)
    assert modminus1_case(8, z3) == -Z(3, 2)
    assert modminus1_case(8, z3) == eval_phi_exact(8, z3)
    assert modminus1_case(49, z3) is None


def test_mod_lemmas_against_oracle():
    for m in range(2, 13):
        for n in range(1, 600):
            for r in roots(m):
                v = eval_phi_exact(n, r)
                a = mod1_case(n, m)
                if a is not None:
                    assert v == a, (n, r)
                b = modminus1_case(n, r)
                if b is not None:
                    assert v == b, (n, r)


def test_mod_lemmas_agree_with_tables():
    for m in (3, 4, 5, 6):
        for n in range(1, 2001):
            for r in roots(m):
                t = closed_form_value(n, r)
                a = mod1_case(n, m)
                if a is not None:
                    assert t == a
                b = modminus1_case(n, r)
                if b is not None:
                    assert t == b


def test_table_examples():
    assert value_at_i(3) == Z(4, 1)
    assert value_at_i(21) == -1
    assert value_at_i(20) == 5
    assert value_at_zeta3(2) == -Z(3, 2)
    assert value_at_zeta3(2) == 1 + Z(3, 1)
    assert value_at_zeta6(5) == Z(3, 1).embed(6)
    assert value_at_zeta6(5) == Z(6, 2)
    assert value_at_zeta5(7) == 1 + Z(5, 1)


def test_corrected_prime_power_rows():
    for p in (3, 7, 13, 19):
        for k in (1, 2, 3):
            assert value_at_zeta3(3 * p**k) == p
            assert value_at_zeta6(6 * p**k) == p


def test_galois_argument_matches_automorphism():
    for n in range(1, 300):
        for m, fn in ((3, value_at_zeta3), (4, value_at_i), (5, value_at_zeta5), (6, value_at_zeta6)):
            base = fn(n)
            for r in roots(m):
                assert fn(n, r.exponent) == base.automorphism(r.exponent)


def test_closed_form_dispatch():
    assert CLOSED_FORM_ORDERS == (1, 2, 3, 4, 5, 6)
    with pytest.raises(InapplicableError):
        closed_form_value(5, RootOfUnity(7, 1))


def test_coprime_corollary():
    assert coprime_corollary_value(5, RootOfUnity(4, 1)) == 1
    z3 = RootOfUnity(3, 1)
    assert coprime_corollary_value(10, z3) == Z(3, 2)
    assert coprime_corollary_value(4, z3) == -Z(3, 1)
    assert coprime_corollary_value(2, z3) == -Z(3, 2)
    for m in (3, 4, 6):
        for n in range(2, 2001):
            if math.gcd(n, m) != 1:
                continue
            for r in roots(m):
                assert coprime_corollary_value(n, r) == closed_form_value(n, r)
    for m in (5, 7, 8, 9, 10, 11, 12):
        for n in range(2, 300):
            if math.gcd(n, m) == 1 and any(p % m == 1 for p in factor(n).primes):
                assert coprime_corollary_value(n, RootOfUnity(m, 1)) == 1
    with pytest.raises(InapplicableError):
        coprime_corollary_value(6, RootOfUnity(3, 1))


def test_reduce_coprime_examples():
    plan = reduce_coprime(12, 4)
    assert (plan.n1, plan.n2, plan.terms) == (3, 4, ((4, 1), (2, -1)))
    plan = reduce_coprime(7, 4)
    assert (plan.n1, plan.n2, plan.terms) == (7, 1, ((1, 1),))
    assert evaluate_coprime_plan(12, RootOfUnity(4, 1)) == 3


def test_coprime_plan_against_oracle():
    for m in range(2, 13):
        for n in range(1, 250):
            for r in roots(m):
                try:
                    v = evaluate_coprime_plan(n, r)
                except InapplicableError:
                    continue
                assert v == eval_phi_exact(n, r), (n, r)


def test_is_real_value():
    assert is_real_value(5, 4)
    assert not is_real_value(3, 4)
    assert not eval_phi_exact(3, RootOfUnity(4, 1)).is_rational()
    assert is_real_value(7, 6)
    for m in range(2, 16):
        for n in range(2, 200):
            if n == m:
                continue
            z = eval_phi_exact(n, RootOfUnity(m, 1)).to_complex()
            assert is_real_value(n, m) == (abs(z.imag) < 1e-9), (n, m)


def test_sign_magnitude_examples():
    sm = sign_magnitude(2, RootOfUnity(4, 1))
    assert sm.sign == 1 and sm.twist == RootOfUnity(8, 1)
    assert abs(sm.magnitude_value() - math.sqrt(2)) < 1e-12
    assert abs(sm.value() - (1 + 1j)) < 1e-9
    sm = sign_magnitude(7, RootOfUnity(5, 1))
    assert sm.sign == -1 and sm.twist == RootOfUnity(5, 3)
    assert isinstance(sm.magnitude, GammaPower) and sm.magnitude.power == 1
    sm = sign_magnitude(3, RootOfUnity(1, 0))
    assert (sm.sign, sm.magnitude) == (1, 3)
    with pytest.raises(InapplicableError):
        sign_magnitude(5, RootOfUnity(5, 1))


def test_sign_magnitude_reconstructs():
    for m in range(1, 13):
        for n in range(2, 200):
            if n == m:
                continue
            for r in roots(m):
                sm = sign_magnitude(n, r)
                want = eval_phi_exact(n, r).to_complex()
                assert abs(sm.value() - want) < 1e-9 * (1 + abs(want)), (n, r)


def test_one_case_sign():
    for m in range(2, 13):
        for n in range(2, 300):
            for r in roots(m):
                v = eval_phi_exact(n, r)
                if v == 1 or v == -1:
                    assert one_case_value(n, r) == v


def test_abs_value_low_m_matches_oracle():
    for m in (1, 2, 3, 4, 6):
        for n in range(m + 1, 501):
            for r in roots(m):
                got = abs_value_low_m(n, m)
                assert abs(abs(eval_phi_exact(n, r).to_complex()) - got) < 1e-9
    with pytest.raises(InapplicableError):
        abs_value_low_m(10, 5)
    with pytest.raises(InapplicableError):
        abs_value_low_m(3, 4)


def test_gamma_formula_5812():
    for m in (5, 8, 10, 12):
        assert gamma_element(RootOfUnity(m, 1)) == sum((Z(m, k) for k in range({5: 2, 8: 3, 10: 3, 12: 5}[m])), CycloElement.zero(m))
        checked = 0
        for n in range(2, 400):
            for r in roots(m):
                try:
                    lg = abs_log_formula_5812(n, r)
                except InapplicableError:
                    continue
                checked += 1
                z = abs(eval_phi_exact(n, r).to_complex(113))
                assert abs(lg - float(mpmath.log(z))) < 1e-9, (n, r)
        assert checked > 50
    with pytest.raises(InapplicableError, match="prime 11"):
        abs_log_formula_5812(11, RootOfUnity(5, 1))
