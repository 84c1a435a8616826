"""Brute-force checks of dim_Q M_r that do not go through the Kolchin formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .bernstein import ModulePresentation, report_from_basis
from .groebner import buchberger, reduce_full
from .module import FreeModule, ModuleElement, ModuleMonomial, leading
from .numpoly import kolchin_threshold
from .weyl import WeylMonomial


def exponent_vectors(nvars: int, r: int) -> Iterator[tuple[int, ...]]:
    """All vectors in N^nvars with coordinate sum at most r."""
    if nvars == 0:
        yield ()
        return
    for head in range(r + 1):
        for tail in exponent_vectors(nvars - 1, r - head):
            yield (head,) + tail


def _theta_e(n: int, m: int, r: int) -> Iterator[ModuleMonomial]:
    for v in exponent_vectors(2 * n, r):
        mono = WeylMonomial(v[:n], v[n:])
        for i in range(1, m + 1):
            yield ModuleMonomial(mono, i)


def count_standard_monomials(G: Sequence[ModuleElement], n: int, m: int, r: int) -> int:
    """Number of monomials theta*e_i of degree <= r not divisible by any LM(g)."""
    lms = [leading(g)[0] for g in G]
    return sum(
        1
        for u in _theta_e(n, m, r)
        if not any(v.gen == u.gen and v.mono.divides(u.mono) for v in lms)
    )


def exact_rank(rows: Sequence[dict]) -> int:
    """Rank over Q of sparse integer/rational rows (column -> value).

    Fraction-free elimination: rows are scaled to primitive integer vectors
    and combined with integer multipliers only. Columns must be mutually
    comparable; the largest column of a row is its pivot.
    """
    pivots: dict = {}
    for row in rows:
        row = _primitive(row)
        while row:
            p = max(row)
            piv = pivots.get(p)
            if piv is None:
                pivots[p] = row
                break
            a, b = piv[p], row[p]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                s = new.get(c, 0) - b * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            row = _primitive(new)
    return len(pivots)


def _primitive(row: dict) -> dict:
    if not row:
        return {}
    vals = [Fraction(v) for v in row.values()]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {c: v // g for c, v in ints.items()} if g > 1 else ints


def rank_dimension(G: Sequence[ModuleElement], n: int, m: int, r: int) -> int:
    """dim_Q M_r as the rank of the remainders of all theta*e_i, deg theta <= r."""
    module = FreeModule(n, m)
    rows = []
    for u in _theta_e(n, m, r):
        f = ModuleElement._raw(module, {u: 1})
        rem = reduce_full(f, G).remainder
        rows.append({v.key(): c for v, c in rem.sorted_terms()})
    return exact_rank(rows)


@dataclass
class DimensionRow:
    r: int
    dim: int
    chi_at_r: int
    agree: bool


@dataclass
class DimensionTable:
    rows: list[DimensionRow]
    # start of the final run of agreeing rows (None if the last row disagrees)
    threshold: int | None
    # from here on the Kolchin formula is a count, so disagreement is an error
    guaranteed_from: int
    chi_degree: int = field(default=-1)

    @property
    def mismatch(self) -> bool:
        return any(not row.agree for row in self.rows if row.r >= self.guaranteed_from)

    @property
    def r_max(self) -> int:
        return self.rows[-1].r if self.rows else -1


def default_r_max(G: Sequence[ModuleElement]) -> int:
    return max(10, 2 * max((leading(g)[0].degree() for g in G), default=0))


def build_table(G: Sequence[ModuleElement], n: int, m: int, r_max: int) -> DimensionTable:
    report = report_from_basis(G, n, m)
    chi = report.chi
    rows = []
    for r in range(r_max + 1):
        dim = count_standard_monomials(G, n, m, r)
        val = chi(r)
        rows.append(DimensionRow(r, dim, val, dim == val))
    threshold = None
    for row in reversed(rows):
        if not row.agree:
            break
        threshold = row.r
    guaranteed = max((kolchin_threshold(A) for A in report.leading_exponent_sets), default=0)
    return DimensionTable(rows, threshold, guaranteed, chi.degree)


def verify_presentation(P: ModulePresentation, r_max: int | None = None, reduce_basis: bool = False) -> DimensionTable:
    """Run the pipeline and tabulate chi(r) against direct monomial counts."""
    G = buchberger(P.relations, reduce_basis=reduce_basis)
    if r_max is None:
        r_max = default_r_max(G)
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    return build_table(G, P.n, P.m, r_max)


__all__ = [
    "DimensionRow",
    "DimensionTable",
    "build_table",
    "count_standard_monomials",
    "default_r_max",
    "exact_rank",
    "exponent_vectors",
    "rank_dimension",
    "verify_presentation",
]
