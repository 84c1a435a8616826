import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cases import PAPER_CASES, SINGLE_N1, THREE_REL_N3, TWO_GEN_N2, free, presentation
from randgen import random_weyl
from weylmod.bernstein import (
    NOT_DETERMINED,
    ModulePresentation,
    add_redundant_generator,
    bernstein_polynomial,
    delta_by_difference,
    invariants,
    krull_report,
    leading_exponent_sets,
    report_from_basis,
)
from weylmod.groebner import buchberger
from weylmod.module import FreeModule
from weylmod.numpoly import NumericalPolynomial, PointSet
from weylmod.weyl import WeylElement

NP = NumericalPolynomial.from_binomial


# --- exponent sets ------------------------------------------------------------


def test_exponent_sets_two_generators():
    P = presentation(TWO_GEN_N2)
    V = leading_exponent_sets(buchberger(P.relations), 2, 2)
    assert V == [PointSet.of(4, [(2, 0, 3, 0), (0, 2, 0, 0)]), PointSet.of(4, [(3, 0, 3, 0)])]


def test_exponent_sets_three_relations():
    P = presentation(THREE_REL_N3)
    V = leading_exponent_sets(buchberger(P.relations), 3, 1)
    assert V == [PointSet.of(6, [(0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)])]


def test_exponent_sets_empty_basis():
    assert leading_exponent_sets([], 1, 1) == [PointSet(2)]


# --- Bernstein polynomial -------------------------------------------------------


def test_single_relation():
    rep = bernstein_polynomial(presentation(SINGLE_N1))
    assert rep.chi == NP([-1, 2])
    assert rep.chi.to_monomial() == (1, 2)
    assert (rep.d, rep.a_d, rep.a_2n, rep.delta) == (1, 2, 0, 0)


def test_two_generators():
    rep = bernstein_polynomial(presentation(TWO_GEN_N2))
    assert rep.chi == NP([15, -5, -5, 6])
    assert rep.chi.to_monomial() == (11, Fraction(-3, 2), Fraction(7, 2), 1)
    assert (rep.d, rep.a_d, rep.multiplicity, rep.delta) == (3, 6, 6, 0)
    assert rep.literal_paper_multiplicity == 36
    assert (rep.krull_type, rep.krull_dim) == ("< 4", NOT_DETERMINED)
    assert len(rep.groebner_basis) == 3


def test_three_relations():
    rep = bernstein_polynomial(presentation(THREE_REL_N3))
    assert rep.chi == NP([0, 0, 0, 1])
    assert rep.chi.to_monomial() == (1, Fraction(11, 6), 1, Fraction(1, 6))
    assert rep.chi(1) == 4 and rep.chi(4) == 35


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2])
def test_free_module(n, m):
    rep = bernstein_polynomial(presentation(free(n, m)))
    assert all(rep.chi(t) == m * comb(t + 2 * n, 2 * n) for t in range(8))
    assert (rep.d, rep.a_d, rep.delta) == (2 * n, m, m)
    assert (rep.krull_type, rep.krull_dim) == (f"= {2 * n}", m)


def test_zero_module():
    E = FreeModule(1, 1)
    rep = bernstein_polynomial(ModulePresentation(1, 1, (E.parse("2 e1"),)))
    assert rep.chi.is_zero()
    assert (rep.d, rep.a_d, rep.multiplicity, rep.delta) == (-1, 0, 0, 0)
    assert rep.literal_paper_multiplicity == 0


def test_reduce_basis_gives_same_chi():
    for text in PAPER_CASES.values():
        P = presentation(text)
        assert bernstein_polynomial(P, reduce_basis=True).chi == bernstein_polynomial(P).chi


def test_presentation_validation():
    E = FreeModule(1, 1)
    with pytest.raises(ValueError, match="zero relation"):
        ModulePresentation(1, 1, (E.zero(),))
    with pytest.raises(ValueError):
        ModulePresentation(2, 1, (E.gen(1),))


# --- invariants -----------------------------------------------------------------


def test_invariants_examples():
    assert invariants(NP([-1, 2]), 1) == (1, 2, 0, 2, 0)
    assert invariants(NP([15, -5, -5, 6]), 2) == (3, 6, 0, 6, 0)
    assert invariants(NP([0, 0, 0, 0, 1]), 2) == (4, 1, 1, 1, 1)
    assert invariants(NumericalPolynomial(), 2) == (-1, 0, 0, 0, 0)


@given(st.lists(st.integers(-9, 9), max_size=5), st.integers(1, 2))
def test_delta_routes_agree(cs, n):
    chi = NP(cs[: 2 * n + 1])
    assert invariants(chi, n).delta == delta_by_difference(chi, n)
    assert delta_by_difference(chi, n) == chi.coefficient(2 * n)


def test_multiplicity_is_binomial_leading_coefficient():
    # a_d equals d! times the leading monomial coefficient
    for text in PAPER_CASES.values():
        rep = bernstein_polynomial(presentation(text))
        lead = rep.chi.to_monomial()[-1]
        assert rep.multiplicity == lead * factorial(rep.d)


def test_krull_report_examples():
    assert krull_report(1, 1) == ("= 2", 1)
    assert krull_report(0, 3) == ("< 6", NOT_DETERMINED)
    assert krull_report(3, 2) == ("= 4", 3)
    with pytest.raises(ValueError):
        krull_report(-1, 1)


def test_report_rejects_foreign_basis():
    E = FreeModule(1, 2)
    with pytest.raises(ValueError):
        report_from_basis([E.gen(2)], 1, 1)


# --- generator-set invariance ------------------------------------------------


@pytest.mark.parametrize("name", sorted(PAPER_CASES))
@settings(max_examples=5)
@given(seed=st.integers(0, 2**32 - 1))
def test_redundant_generator_preserves_invariants(name, seed):
    rng = random.Random(seed)
    P = presentation(PAPER_CASES[name])
    D = random_weyl(rng, P.n, 2, 3)
    k = rng.randint(1, P.m)
    base = bernstein_polynomial(P)
    aug = bernstein_polynomial(add_redundant_generator(P, D, k))
    assert (aug.d, aug.a_d, aug.a_2n) == (base.d, base.a_d, base.a_2n)


def test_redundant_generator_can_change_chi():
    P = presentation(SINGLE_N1)
    aug = bernstein_polynomial(add_redundant_generator(P, WeylElement.d(1, 1) ** 2, 1))
    base = bernstein_polynomial(P)
    assert aug.chi != base.chi
    assert (aug.d, aug.a_d) == (base.d, base.a_d)


def test_redundant_generator_index_checked():
    with pytest.raises(ValueError):
        add_redundant_generator(presentation(SINGLE_N1), WeylElement.one(1), 2)
