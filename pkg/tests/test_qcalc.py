import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycloideal.cyclotomic import cyc_multiplicity, factor_cyclotomic
from cycloideal.poly_core import ONE, ZERO, parse
from cycloideal.qcalc import (
    RangeError,
    add_exponents,
    expand,
    factorial_exponents,
    falling_exponents,
    q_factorial,
    q_falling,
    q_int,
    sub_exponents,
)


def test_basic_values():
    assert q_int(0) == ZERO
    assert q_int(3) == parse("q^3-1")
    assert q_int(-2) == parse("q^-2-1")
    assert q_factorial(0) == ONE
    assert q_factorial(3) == parse("(q-1)*(q^2-1)*(q^3-1)")
    assert q_falling(5, 0) == ONE
    assert q_falling(5, 2) == parse("(q^5-1)*(q^4-1)")


def test_exponent_examples():
    assert falling_exponents(5, 3) == {1: 3, 2: 1, 3: 1, 4: 1, 5: 1}
    assert factorial_exponents(4) == {1: 4, 2: 2, 3: 1, 4: 1}
    assert factorial_exponents(0) == {}
    assert falling_exponents(7, 0) == {}


@pytest.mark.parametrize("l,i", [(3, 4), (3, -1), (-1, 0)])
def test_falling_exponents_range(l, i):
    with pytest.raises(RangeError):
        falling_exponents(l, i)


def test_range_errors():
    with pytest.raises(RangeError):
        q_falling(3, -1)
    with pytest.raises(RangeError):
        q_factorial(-1)


def test_exponents_match_expansion_up_to_60():
    for l in range(0, 61):
        for i in {min(i, l) for i in (0, 1, l // 3, l // 2, max(l - 1, 0), l)}:
            assert expand(falling_exponents(l, i)) == q_falling(l, i), (l, i)


def test_exponents_match_factorization():
    for l in range(0, 25):
        for i in range(0, l + 1):
            fac = factor_cyclotomic(q_falling(l, i))
            assert dict(fac.exponents) == falling_exponents(l, i)


def test_factorial_is_full_falling_product():
    for n in range(0, 30):
        assert q_factorial(n) == q_falling(n, n)
        assert factorial_exponents(n) == falling_exponents(n, n)


@given(st.integers(0, 40), st.integers(0, 40))
def test_falling_splits(a, b):
    # {a+b}_{q,a+b} = {a+b}_{q,a} * {b}_q!
    whole = falling_exponents(a + b, a + b)
    assert whole == add_exponents(falling_exponents(a + b, a), factorial_exponents(b))


def test_multiplicity_of_q_integers():
    for m in range(1, 61):
        for k in range(1, 61):
            assert cyc_multiplicity(q_int(k), m) == (1 if k % m == 0 else 0)


def test_exponent_arithmetic():
    assert add_exponents({3: 1, 1: 2}, {1: -2, 2: 1}) == {2: 1, 3: 1}
    assert list(add_exponents({5: 1}, {1: 1})) == [1, 5]
    assert sub_exponents({1: 3, 2: 1}, {1: 1, 2: 1}) == {1: 2}
    assert add_exponents() == {}
