import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycloideal.fixtures import Z_A_2222, Z_BR_2222, example_exponents
from cycloideal.habiro_ideals import t_exponents
from cycloideal.link_ideals import (
    ColorSpec,
    InvalidSpec,
    LinkClass,
    base_exponents,
    deficits,
    generator,
    generator_exponents,
    membership,
    milnor_fixture,
    z_a_exponents,
    z_a_generator,
    z_br_exponents,
    z_br_generator,
    z_intersection_exponents,
    z_rb_exponents,
)
from cycloideal.poly_core import ZERO, divide_exact, parse, try_divide
from cycloideal.qcalc import RangeError, expand, q_falling, q_int

three_plus = st.lists(st.integers(0, 6), min_size=3, max_size=6)


def spec(cls, *colors):
    return ColorSpec(LinkClass(cls), colors)


def _shifted_variant(l):
    # floor((2l+1)/m) - floor((l-1)/m) - [m=1]
    top = 2 * l + 1
    return {m: e for m in range(1, top + 1) if (e := top // m - (l - 1) // m - (m == 1))}


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        ColorSpec(LinkClass.BRUNNIAN, (1, 1))
    with pytest.raises(InvalidSpec):
        ColorSpec(LinkClass.ALG_SPLIT, ())
    with pytest.raises(InvalidSpec):
        ColorSpec(LinkClass.ALG_SPLIT, (1, -1))
    with pytest.raises(InvalidSpec):
        ColorSpec("nope", (1,))
    assert ColorSpec("rb", [2]).colors == (2,)


def test_index_tie_breaking():
    s = spec("br", 3, 1, 3, 1)
    assert (s.i_max, s.i_min) == (0, 1)
    assert s.others(s.i_max, s.i_min) == [3, 1]


def test_worked_expansions():
    assert z_a_generator(spec("alg", 2, 2, 2, 2)) == parse(Z_A_2222)
    assert z_br_generator(spec("br", 2, 2, 2, 2)) == parse(Z_BR_2222)


def test_base_factor_against_quotient():
    for l in range(0, 21):
        assert expand(base_exponents(l)) == divide_exact(q_falling(2 * l + 1, l + 1), q_int(1))


def test_shifted_floor_variant_disagrees():
    # with floor((l-1)/m) the l = 2 generator picks up a second Phi_2
    assert _shifted_variant(2)[2] == 2
    assert base_exponents(2)[2] == 1
    assert expand(_shifted_variant(2)) != parse(Z_A_2222)


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("color", [1, 2, 3])
def test_uniform_color_generators(n, color):
    colors = (color,) * n
    assert z_a_exponents(spec("alg", *colors)) == example_exponents("alg", color, n)
    assert z_rb_exponents(spec("rb", *colors)) == example_exponents("rb", color, n)
    assert z_intersection_exponents(spec("br-cap-a", *colors)) == example_exponents("br-cap-a", color, n)


def test_zero_colors_collapse():
    # (l, 0, 0, ...) reduces to the single-color algebraically split generator
    for l in range(5):
        for n in (3, 4):
            colors = (l,) + (0,) * (n - 1)
            base = base_exponents(l)
            assert z_rb_exponents(spec("rb", *colors)) == base
            assert z_br_exponents(spec("br", *colors)) == base
            assert z_intersection_exponents(spec("br-cap-a", *colors)) == base


def test_all_two_quotient_oracle():
    # Z_Br at (2,2,2,2,2) is {5}_{q,3}/{1}_q / {2}_q! * g_2^3
    direct = divide_exact(q_falling(5, 3), q_int(1))
    direct = divide_exact(direct, q_int(1) * q_int(2)) * expand(t_exponents(2)) ** 3
    assert z_br_generator(spec("br", 2, 2, 2, 2, 2)) == direct


@given(three_plus)
def test_inclusions(colors):
    a = expand(z_a_exponents(spec("alg", *colors)))
    rb = expand(z_rb_exponents(spec("rb", *colors)))
    br = expand(z_br_exponents(spec("br", *colors)))
    assert try_divide(rb, a) is not None
    assert try_divide(rb, br) is not None


@given(three_plus, st.permutations(range(6)))
def test_permutation_invariance(colors, perm):
    order = [i for i in perm if i < len(colors)]
    permuted = [colors[i] for i in order]
    for cls in ("alg", "rb", "br", "br-cap-a"):
        assert generator_exponents(spec(cls, *colors)) == generator_exponents(spec(cls, *permuted))


@given(three_plus)
def test_intersection_is_exponentwise_max(colors):
    a = z_a_exponents(spec("alg", *colors))
    br = z_br_exponents(spec("br", *colors))
    both = {m: max(a.get(m, 0), br.get(m, 0)) for m in set(a) | set(br)}
    assert z_intersection_exponents(spec("br-cap-a", *colors)) == {m: e for m, e in both.items() if e}


def test_non_inclusion_at_all_twos():
    a = z_a_generator(spec("alg", 2, 2, 2, 2))
    br = z_br_generator(spec("br", 2, 2, 2, 2))
    assert try_divide(a, br) is None
    assert try_divide(br, a) is None


def test_single_component_rb():
    assert z_rb_exponents(spec("rb", 3)) == base_exponents(3)


@pytest.mark.parametrize("n", range(3, 9))
def test_milnor_fixtures(n):
    j = milnor_fixture(n).value
    ones = (1,) * n
    assert membership(j, spec("br-cap-a", *ones)).member
    rb = spec("rb", *ones)
    assert not membership(j, rb).member
    need, have = deficits(j, rb)[1]
    assert need - have == 2
    assert set(deficits(j, rb)) == {1}


def test_borromean_value():
    assert milnor_fixture(3).value == parse("-q^-2*(q-1)*(q+1)*(q^2+q+1)")
    with pytest.raises(RangeError):
        milnor_fixture(2)


def test_membership_edges():
    s = spec("alg", 1)
    assert membership(ZERO, s) == (True, ZERO)
    g = generator(s)
    res = membership(g.shift(-3) * -2, s)
    assert res.member and res.cofactor == parse("-2*q^-3")
    assert deficits(parse("q+1"), s) == {1: (1, 0), 3: (1, 0)}
