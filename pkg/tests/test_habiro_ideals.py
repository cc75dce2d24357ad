import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycloideal.cyclotomic import cyclotomic
from cycloideal.fixtures import T_TABLE
from cycloideal.habiro_ideals import (
    BezoutCertificate,
    IdealLevel,
    f_gen,
    g_exponents,
    g_poly,
    gcd_oracle_lk,
    gcd_oracle_rational,
    h_gen,
    lemma_gl_witness,
    principality_certificate,
    t_exponent,
    t_exponents,
    tilde_g,
    tilde_g_exponents,
    verify_certificate,
)
from cycloideal.poly_core import ONE, divide_exact, parse, try_divide
from cycloideal.qcalc import RangeError, q_factorial, q_int, sub_exponents


def test_generators():
    assert f_gen(3, 1) == q_factorial(2) * q_factorial(1)
    assert f_gen(0, 0) == ONE
    for l in range(6):
        for k in range(l + 1):
            for i in range(k + 1):
                assert h_gen(l, k, i) * q_factorial(l - k) == f_gen(l, i)


@pytest.mark.parametrize("args", [(2, 3), (-1, 0), (3, -1)])
def test_level_range(args):
    with pytest.raises(RangeError):
        f_gen(*args)
    with pytest.raises(RangeError):
        IdealLevel(*args)


def test_t_table():
    for m, row in T_TABLE.items():
        assert [t_exponent(l, m) for l in range(17)] == list(row)


def test_t_examples():
    assert t_exponents(0) == {}
    assert t_exponents(1) == {1: 1}
    assert t_exponents(2) == {1: 2}
    assert t_exponents(5) == {1: 5, 2: 2, 3: 1}
    assert g_poly(2) == parse("(q-1)*(q-1)")


def test_gcd_oracle_example():
    # h_{5,2,i}: {5}{4}, {4}{1}!, {2}! share Phi_1^2 Phi_2
    assert gcd_oracle_lk(5, 2) == {1: 2, 2: 1}
    assert g_exponents(5, 2) == {1: 2, 2: 1}


def test_g_l_k_endpoints():
    for l in range(12):
        assert g_exponents(l, 0) == {}
        assert g_exponents(l, l) == t_exponents(l)


def test_rational_oracle_small():
    for l in range(8):
        assert gcd_oracle_rational(l) == g_poly(l)


def test_telescoping_examples():
    assert tilde_g_exponents(5, 2) == {1: 1, 2: 1}
    assert tilde_g(5, 5) == cyclotomic(1)
    for l in range(1, 14):
        for k in range(1, l + 1):
            step = sub_exponents(g_exponents(l, k), g_exponents(l, k - 1))
            assert step == tilde_g_exponents(l, k)


def test_lemma_gl_example():
    w = lemma_gl_witness(5, 2)
    G = tilde_g(5, 2)
    B = q_int(2) * divide_exact(q_factorial(1), g_poly(5, 1))
    assert w.a == divide_exact(q_int(4), G)
    assert w.b == divide_exact(B, G)
    assert w.u * w.a + w.v * w.b == ONE


def test_certificate_small_levels():
    assert principality_certificate(0).coefficients == (ONE,)
    for l in range(1, 9):
        cert = principality_certificate(l)
        assert len(cert.coefficients) == l + 1
        total = sum((c * f_gen(l, k) for k, c in enumerate(cert.coefficients)), 0 * ONE)
        assert total == g_poly(l)


def test_certificate_tampering_rejected():
    cert = principality_certificate(6)
    assert verify_certificate(cert)
    bumped = (cert.coefficients[0] + ONE,) + cert.coefficients[1:]
    assert not verify_certificate(BezoutCertificate(6, bumped, cert.claimed_generator))
    shifted = cert.claimed_generator.shift(1)
    assert not verify_certificate(BezoutCertificate(6, cert.coefficients, shifted))
    assert not verify_certificate(BezoutCertificate(6, cert.coefficients[:-1], cert.claimed_generator))
    assert not verify_certificate(BezoutCertificate(5, cert.coefficients, cert.claimed_generator))


def test_certificate_json_round_trip():
    cert = principality_certificate(7)
    again = BezoutCertificate.from_json(cert.to_json())
    assert again == cert
    assert verify_certificate(again)


@given(st.integers(0, 25), st.data())
def test_generators_divisible_by_g(l, data):
    k = data.draw(st.integers(0, l))
    assert try_divide(f_gen(l, k), g_poly(l)) is not None
