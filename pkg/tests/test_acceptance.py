"""Acceptance criteria, all exact.

Each ``test_criterion_NN_*`` prints a PASS/FAIL line in the pytest terminal
summary (see ``conftest.py``); ``python3 tests/test_acceptance.py`` runs them
standalone and prints the same lines.
"""

import random

import pytest

from cycloideal.cyclotomic import factor_cyclotomic
from cycloideal.fixtures import T_TABLE, Z_A_2222, Z_BR_2222, example_exponents
from cycloideal.habiro_ideals import (
    f_gen,
    g_poly,
    gcd_oracle_lk,
    gcd_oracle_rational,
    lemma_gl_witness,
    principality_certificate,
    t_exponent,
    t_exponents,
    tilde_g,
    tilde_g_exponents,
    verify_certificate,
)
from cycloideal.link_ideals import (
    ColorSpec,
    LinkClass,
    base_exponents,
    deficits,
    membership,
    milnor_fixture,
    z_a_exponents,
    z_a_generator,
    z_br_generator,
    z_intersection_exponents,
    z_rb_exponents,
)
from cycloideal.poly_core import ONE, divide_exact, parse, try_divide
from cycloideal.qcalc import expand, q_factorial, q_falling, q_int

CRITERIA = {
    1: "t-table reproduction (68 cells)",
    2: "g_l from factorizations, l <= 40",
    3: "g_l from rational GCD, l <= 12",
    4: "principality certificates l <= 24, inclusion l <= 40",
    5: "closed form of g_{l,k}, k <= l <= 30",
    6: "coprime induction step, 1 <= k <= l <= 20",
    7: "worked (2,2,2,2) expansions and base factor l <= 30",
    8: "uniform-color generators, n in {3,4,5}, colors 1..3",
    9: "Milnor fixtures n = 3..8",
    10: "inclusion structure, 200 random specs",
}


@pytest.fixture(autouse=True)
def _label(request, record_property):
    num = criterion_of(request.node.name)
    record_property("criterion", (num, CRITERIA[num]))


def test_criterion_01_t_table():
    cells = [(m, l) for m in range(1, 5) for l in range(17)]
    assert len(cells) == 68
    assert all(t_exponent(l, m) == T_TABLE[m][l] for m, l in cells)


def test_criterion_02_oracle_factorizations():
    for l in range(41):
        assert gcd_oracle_lk(l, l) == t_exponents(l), l


def test_criterion_03_oracle_rational_gcd():
    for l in range(13):
        assert gcd_oracle_rational(l) == g_poly(l), l


def test_criterion_04_certificates_and_inclusion():
    for l in range(25):
        assert verify_certificate(principality_certificate(l)), l
    for l in range(41):
        g = g_poly(l)
        for k in range(l + 1):
            assert try_divide(f_gen(l, k), g) is not None, (l, k)


def test_criterion_05_intermediate_gcd():
    for l in range(31):
        for k in range(l + 1):
            got = gcd_oracle_lk(l, k)
            want = {m: (l + 1) // m - 1 - (l - k) // m for m in range(1, k + 1)}
            assert got == {m: e for m, e in want.items() if e}, (l, k)
            assert all(m <= k for m in got)


def test_criterion_06_coprime_step():
    for l in range(1, 21):
        for k in range(1, l + 1):
            A = q_int(l - k + 1)
            B = q_int(k) * divide_exact(q_factorial(k - 1), g_poly(l, k - 1))
            fa, fb = factor_cyclotomic(A), factor_cyclotomic(B)
            common = {m: min(fa.multiplicity(m), fb.multiplicity(m))
                      for m in set(fa.exponents) & set(fb.exponents)}
            assert {m: e for m, e in common.items() if e} == tilde_g_exponents(l, k), (l, k)
            G = tilde_g(l, k)
            w = lemma_gl_witness(l, k)
            assert w.u * divide_exact(A, G) + w.v * divide_exact(B, G) == ONE, (l, k)


def test_criterion_07_worked_expansions():
    twos = (2, 2, 2, 2)
    assert z_a_generator(ColorSpec(LinkClass.ALG_SPLIT, twos)) == parse(Z_A_2222)
    assert z_br_generator(ColorSpec(LinkClass.BRUNNIAN, twos)) == parse(Z_BR_2222)
    for l in range(31):
        assert expand(base_exponents(l)) == divide_exact(q_falling(2 * l + 1, l + 1), q_int(1)), l
    # the floor((l_max - 1)/m) reading of the middle term misses the expansion
    top = 5
    shifted = {m: top // m - 1 // m - (m == 1) for m in range(1, top + 1)}
    assert expand({m: e for m, e in shifted.items() if e}) != parse(Z_A_2222)


def test_criterion_08_uniform_colors():
    for n in (3, 4, 5):
        for color in (1, 2, 3):
            colors = (color,) * n
            assert z_a_exponents(ColorSpec(LinkClass.ALG_SPLIT, colors)) == \
                example_exponents("alg", color, n)
            assert z_rb_exponents(ColorSpec(LinkClass.RIBBON_BOUNDARY, colors)) == \
                example_exponents("rb", color, n)
            assert z_intersection_exponents(ColorSpec(LinkClass.BRUNNIAN_INTERSECT, colors)) == \
                example_exponents("br-cap-a", color, n)


def test_criterion_09_milnor_fixtures():
    for n in range(3, 9):
        value = milnor_fixture(n).value
        ones = (1,) * n
        assert membership(value, ColorSpec(LinkClass.BRUNNIAN_INTERSECT, ones)).member, n
        rb = ColorSpec(LinkClass.RIBBON_BOUNDARY, ones)
        assert not membership(value, rb).member, n
        need, have = deficits(value, rb)[1]
        assert need - have == 2, n


def test_criterion_10_inclusion_structure():
    rng = random.Random(20240101)
    for _ in range(200):
        colors = tuple(rng.randint(0, 6) for _ in range(rng.randint(3, 6)))
        a = expand(z_a_exponents(ColorSpec(LinkClass.ALG_SPLIT, colors)))
        rb = expand(z_rb_exponents(ColorSpec(LinkClass.RIBBON_BOUNDARY, colors)))
        br = z_br_generator(ColorSpec(LinkClass.BRUNNIAN, colors))
        assert try_divide(rb, a) is not None, colors
        assert try_divide(rb, br) is not None, colors
    twos = (2, 2, 2, 2)
    a = z_a_generator(ColorSpec(LinkClass.ALG_SPLIT, twos))
    br = z_br_generator(ColorSpec(LinkClass.BRUNNIAN, twos))
    assert try_divide(a, br) is None and try_divide(br, a) is None


def criterion_of(name):
    """``test_criterion_07_...`` -> 7."""
    return int(name.split("_")[2])


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        num = criterion_of(name)
        try:
            fn()
            status = "PASS"
        except AssertionError:
            status, failed = "FAIL", failed + 1
        print(f"criterion {num:2d} {status}: {CRITERIA[num]}")
    raise SystemExit(1 if failed else 0)
