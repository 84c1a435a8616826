"""Bernstein polynomial of a finitely presented A_n-module and its invariants."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import NamedTuple, Sequence

from .groebner import Basis, buchberger
from .module import FreeModule, ModuleElement, act, leading
from .numpoly import NumericalPolynomial, PointSet, forward_difference, kolchin_polynomial
from .weyl import WeylElement

NOT_DETERMINED = "not determined"


@dataclass(frozen=True)
class ModulePresentation:
    """The module E/N with E free of rank m over A_n and N spanned by ``relations``."""

    n: int
    m: int
    relations: tuple[ModuleElement, ...] = ()

    def __post_init__(self):
        module = FreeModule(self.n, self.m)
        rels = tuple(self.relations)
        for k, r in enumerate(rels, start=1):
            if r.module != module:
                raise ValueError(f"relation {k} lives in {r.module}, expected {module}")
            if r.is_zero():
                raise ValueError(f"relation {k} is a zero relation")
        object.__setattr__(self, "relations", rels)

    @property
    def module(self) -> FreeModule:
        return FreeModule(self.n, self.m)


def add_redundant_generator(P: ModulePresentation, D: WeylElement, k: int) -> ModulePresentation:
    """Present the same module with an extra generator f_{m+1} = D f_k.

    The old relations are carried over to the rank m+1 free module and
    e_{m+1} - D e_k is added as a relation.
    """
    if not 1 <= k <= P.m:
        raise ValueError(f"generator index {k} out of range 1..{P.m}")
    E = FreeModule(P.n, P.m + 1)
    rels = [ModuleElement(E, r.terms) for r in P.relations]
    rels.append(E.gen(P.m + 1) - act(D, E.gen(k)))
    return ModulePresentation(P.n, P.m + 1, tuple(rels))


class Invariants(NamedTuple):
    d: int
    a_d: int
    a_2n: int
    multiplicity: int
    delta: int


@dataclass(frozen=True)
class BernsteinReport:
    n: int
    m: int
    groebner_basis: tuple[ModuleElement, ...]
    leading_exponent_sets: tuple[PointSet, ...]
    chi: NumericalPolynomial
    d: int
    a_d: int
    a_2n: int
    multiplicity: int
    literal_paper_multiplicity: int
    delta: int
    krull_type: str
    krull_dim: int | str


def leading_exponent_sets(G: Sequence[ModuleElement], n: int, m: int) -> list[PointSet]:
    """Per generator e_i, the (alpha, beta) exponents of the leading monomials on e_i."""
    sets: list[set] = [set() for _ in range(m)]
    for g in G:
        u = leading(g)[0]
        if not 1 <= u.gen <= m:
            raise ValueError(f"leading monomial {u} is outside generators 1..{m}")
        sets[u.gen - 1].add(u.mono.alpha + u.mono.beta)
    return [PointSet(2 * n, frozenset(s)) for s in sets]


def invariants(chi: NumericalPolynomial, n: int) -> Invariants:
    """(d, a_d, a_2n, multiplicity, delta) read off chi in the binomial basis.

    The multiplicity is a_d itself: in the basis C(t+i, i) the top
    coefficient already carries the d! factor of the monomial leading term.
    """
    if chi.is_zero():
        return Invariants(-1, 0, 0, 0, 0)
    d = chi.degree
    a_d = chi.leading_coefficient()
    a_2n = chi.coefficient(2 * n)
    delta = a_d if d == 2 * n else 0
    return Invariants(d, a_d, a_2n, a_d, delta)


def delta_by_difference(chi: NumericalPolynomial, n: int) -> int:
    """delta as the constant 2n-th forward difference of chi."""
    diff = forward_difference(chi, 2 * n)
    assert diff.degree <= 0, "degree of chi exceeds 2n"
    return diff.coefficient(0)


def krull_report(delta: int, n: int) -> tuple[str, int | str]:
    """Type and dimension over the family of submodules, from delta alone."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if delta > 0:
        return f"= {2 * n}", delta
    return f"< {2 * n}", NOT_DETERMINED


def bernstein_polynomial(P: ModulePresentation, reduce_basis: bool = False) -> BernsteinReport:
    G: Basis = buchberger(P.relations, reduce_basis=reduce_basis)
    return report_from_basis(G, P.n, P.m)


def report_from_basis(G: Sequence[ModuleElement], n: int, m: int) -> BernsteinReport:
    """Assemble the report from an already computed Gröbner basis."""
    V = leading_exponent_sets(G, n, m)
    chi = NumericalPolynomial()
    for A in V:
        chi = chi + kolchin_polynomial(A)
    if chi.degree > 2 * n:
        raise AssertionError(f"deg chi = {chi.degree} exceeds 2n = {2 * n}")
    inv = invariants(chi, n)
    if inv.delta != delta_by_difference(chi, n):
        raise AssertionError("delta disagrees with the 2n-th forward difference of chi")
    ktype, kdim = krull_report(inv.delta, n)
    literal = factorial(inv.d) * inv.a_d if inv.d >= 0 else 0
    return BernsteinReport(
        n=n,
        m=m,
        groebner_basis=tuple(G),
        leading_exponent_sets=tuple(V),
        chi=chi,
        d=inv.d,
        a_d=inv.a_d,
        a_2n=inv.a_2n,
        multiplicity=inv.multiplicity,
        literal_paper_multiplicity=literal,
        delta=inv.delta,
        krull_type=ktype,
        krull_dim=kdim,
    )
