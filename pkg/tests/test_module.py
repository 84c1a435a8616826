from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import module_elements, module_monomials, weyl_elements, weyl_monomials
from weylmod.module import (
    FreeModule,
    ModuleElement,
    ModuleMonomial,
    act,
    act_monomial,
    compare,
    divides,
    lcm_mono,
    leading,
    quotient,
)
from weylmod.weyl import WeylElement, WeylMonomial, weyl_mul

E2 = FreeModule(2, 2)
E1 = FreeModule(1, 2)


def mm(alpha, beta, gen):
    return ModuleMonomial(WeylMonomial(tuple(alpha), tuple(beta)), gen)


# --- ordering -----------------------------------------------------------------


def test_degree_beats_generator():
    assert compare(mm((1, 0), (2, 0), 2), mm((0, 0), (0, 3), 1)) == 1


def test_generator_tiebreak():
    assert compare(mm((0, 1), (0, 0), 1), mm((0, 1), (0, 0), 2)) == -1
    u = mm((1, 0), (0, 1), 2)
    assert compare(u, u) == 0


def test_decreasing_order_of_mixed_element():
    f = E2.parse("-2 x1^3 d1 e1 - d2^3 e1 + 5 x2 e1 + 3 x1 d1^2 e2 + 4 x2 e2 + d2^2 e2")
    printed = [(u, c) for u, c in f.sorted_terms()]
    expected = [
        (mm((3, 0), (1, 0), 1), -2),
        (mm((1, 0), (2, 0), 2), 3),
        (mm((0, 0), (0, 3), 1), -1),
        (mm((0, 0), (0, 2), 2), 1),
        (mm((0, 1), (0, 0), 2), 4),
        (mm((0, 1), (0, 0), 1), 5),
    ]
    assert printed == expected
    assert leading(f) == (mm((3, 0), (1, 0), 1), Fraction(-2))


def test_leading_of_constant_and_zero():
    assert leading(E2.monomial((0, 0), (0, 0), 1, 5)) == (mm((0, 0), (0, 0), 1), 5)
    assert leading(E2.parse("x2^2 e1 - x1 e2"))[0] == mm((0, 2), (0, 0), 1)
    with pytest.raises(ValueError, match="no leading term of zero"):
        leading(E2.zero())


@given(module_monomials(E2), module_monomials(E2), module_monomials(E2))
def test_order_is_total_and_transitive(u, v, w):
    assert compare(u, v) == -compare(v, u)
    assert (compare(u, v) == 0) == (u == v)
    if compare(u, v) <= 0 and compare(v, w) <= 0:
        assert compare(u, w) <= 0


@given(module_monomials(E2), weyl_monomials(2))
def test_divisor_is_not_greater(v, theta):
    u = ModuleMonomial(theta.commutative_mul(v.mono), v.gen)
    assert divides(v, u)
    assert compare(v, u) <= 0


# --- divisibility and lcm -----------------------------------------------------


def test_divides_and_quotient():
    F = FreeModule(1, 1)
    assert divides(mm((1,), (2,), 1), mm((2,), (3,), 1))
    assert quotient(mm((2,), (3,), 1), mm((1,), (2,), 1)) == WeylMonomial((1,), (1,))
    assert not divides(mm((1,), (0,), 1), mm((1,), (0,), 2))
    assert quotient(mm((0, 2), (5, 0), 1), mm((0, 2), (0, 0), 1)) == WeylMonomial((0, 0), (5, 0))
    with pytest.raises(ValueError):
        quotient(mm((1,), (0,), 1), mm((0,), (1,), 1))
    assert F.n == 1


def test_lcm_examples():
    assert lcm_mono(mm((1, 0), (2, 0), 2), mm((3, 0), (1, 0), 2)) == mm((3, 0), (2, 0), 2)
    assert lcm_mono(mm((2, 0), (3, 0), 1), mm((0, 2), (0, 0), 1)) == mm((2, 2), (3, 0), 1)
    assert lcm_mono(mm((1, 0), (0, 0), 1), mm((1, 0), (0, 0), 2)) is None


@given(module_monomials(E2), module_monomials(E2), weyl_monomials(2, 4))
def test_lcm_is_least_common_multiple(u, v, theta):
    L = lcm_mono(u, v)
    if u.gen != v.gen:
        assert L is None
        return
    assert divides(u, L) and divides(v, L)
    w = ModuleMonomial(theta.commutative_mul(L.mono), L.gen)
    assert divides(L, w)
    # any common multiple is a multiple of L
    common = ModuleMonomial(u.mono.lcm(v.mono).commutative_mul(theta), u.gen)
    assert divides(L, common)


# --- action -------------------------------------------------------------------


def test_act_examples():
    f = E2.parse("x1 e2")
    D = WeylElement.monomial((2, 0), (3, 0))
    assert act(D, f) == E2.parse("x1^3 d1^3 e2 + 3 x1^2 d1^2 e2")
    assert act(WeylElement.monomial((0, 0), (5, 0)), f) == E2.parse("x1 d1^5 e2 + 5 d1^4 e2")
    g = E2.parse("x1^2 e1 - 3/2 d2 e2")
    assert act(WeylElement.one(2), g) == g


@given(weyl_monomials(2), module_elements(E2))
def test_leading_monomial_of_multiple(theta, f):
    lm = leading(f)[0]
    h = act_monomial(theta, f)
    assert leading(h)[0] == ModuleMonomial(theta.commutative_mul(lm.mono), lm.gen)
    assert leading(h)[1] == leading(f)[1]


@given(weyl_elements(2, 2, 3), weyl_elements(2, 2, 3), module_elements(E2, 2, 3))
def test_action_is_associative(a, b, f):
    assert act(weyl_mul(a, b), f) == act(a, act(b, f))


@given(weyl_elements(2, 2, 3), module_elements(E2, 2, 3), module_elements(E2, 2, 3))
def test_action_is_additive(a, f, g):
    assert act(a, f + g) == act(a, f) + act(a, g)


def test_rmul_dispatches_to_action():
    f = E1.parse("x1 e1 + e2")
    assert WeylElement.d(1, 1) * f == E1.parse("x1 d1 e1 + e1 + d1 e2")
    assert 2 * f == f.scale(2)


# --- canonical form -------------------------------------------------------------


def test_zero_coefficients_pruned_and_equality():
    f = ModuleElement(E2, {mm((1, 0), (0, 0), 1): 0, mm((0, 0), (0, 0), 2): Fraction(3, 6)})
    assert len(f) == 1
    assert f == E2.parse("1/2 e2")
    assert (f - f).is_zero()
    assert hash(f) == hash(E2.parse("1/2 e2"))


def test_rejects_foreign_monomials():
    with pytest.raises(ValueError):
        ModuleElement(E2, {mm((1, 0), (0, 0), 3): 1})
    with pytest.raises(ValueError):
        ModuleElement(E2, {mm((1,), (0,), 1): 1})
    with pytest.raises(ValueError):
        E2.parse("x1 e1") + E1.parse("x1 e1")


@given(st.integers(1, 3), st.integers(1, 3))
def test_free_module_generators(n, m):
    E = FreeModule(n, m)
    for i in range(1, m + 1):
        assert leading(E.gen(i)) == (ModuleMonomial(WeylMonomial.one(n), i), 1)
    with pytest.raises(ValueError):
        E.gen(m + 1)
