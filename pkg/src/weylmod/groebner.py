"""Division with remainder, S-polynomials and Buchberger's algorithm in E."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .module import (
    ModuleElement,
    ModuleMonomial,
    act_monomial,
    divides,
    lcm_mono,
    leading,
    quotient,
)
from .weyl import WeylElement, WeylMonomial, monomial_product

try:  # GMP numbers; the reduction loop is dominated by big-number arithmetic
    from gmpy2 import gcd as _gcd
    from gmpy2 import mpq as _q
    from gmpy2 import mpz as _z
except ImportError:  # pragma: no cover
    _q, _z, _gcd = Fraction, int, gcd

Basis = list[ModuleElement]


class AlreadyReduced(ValueError):
    """Raised by reduce_step when no term of f is divisible by LM(g)."""


@dataclass
class DivisionResult:
    quotients: list[WeylElement]
    remainder: ModuleElement
    # the G-leader eliminated at each step, in order
    leaders: list[ModuleMonomial] = field(default_factory=list)


def _desc_key(u: ModuleMonomial) -> tuple:
    m = u.mono
    return (-m.degree(), tuple(-a for a in m.alpha), tuple(-b for b in m.beta), -u.gen)


def _check_basis(G: Sequence[ModuleElement]) -> None:
    for g in G:
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")


def reduce_step(f: ModuleElement, g: ModuleElement) -> ModuleElement:
    """One reduction step of f modulo g, eliminating the greatest reducible term."""
    lm, lc = leading(g)
    for w, a in f.sorted_terms():
        if divides(lm, w):
            return f - act_monomial(quotient(w, lm), g, a / lc)
    raise AlreadyReduced("f is already reduced with respect to g")


def is_reduced(f: ModuleElement, G: Sequence[ModuleElement]) -> bool:
    lms = [leading(g)[0] for g in G]
    return not any(divides(v, u) for u in f._terms for v in lms)


def reduce_full(f: ModuleElement, G: Sequence[ModuleElement], strategy: str = "greatest") -> DivisionResult:
    """Divide f by G.

    ``greatest`` always eliminates the greatest reducible term using the
    first basis element whose leading monomial divides it.
    ``first_divisor`` instead picks the first basis element that divides
    any term and eliminates the greatest term it divides; it exists as an
    independent reduction order for cross-checking remainders.
    """
    _check_basis(G)
    if strategy == "greatest":
        return _reduce_greatest(f, G)
    if strategy == "first_divisor":
        return _reduce_first_divisor(f, G)
    raise ValueError(f"unknown strategy {strategy!r}")


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _finish(f: ModuleElement, G, qs, work, leaders) -> DivisionResult:
    n = f.n
    quotients = [WeylElement(n, {m: _to_fraction(c) for m, c in q.items()}) for q in qs]
    remainder = ModuleElement._raw(f.module, {u: _to_fraction(c) for u, c in work.items()})
    return DivisionResult(quotients, remainder, leaders)


def _fast_terms(g: ModuleElement) -> dict:
    return {u: _q(c.numerator, c.denominator) for u, c in g._terms.items()}


def _subtract_multiple(work: dict, theta: WeylMonomial, coef, g_terms: dict, on_new=None) -> None:
    # work -= coef * theta * g, in place
    for u, c in g_terms.items():
        cc = coef * c
        for w, k in monomial_product(theta, u.mono):
            key = ModuleMonomial(w, u.gen)
            old = work.get(key)
            if old is None:
                work[key] = -cc * k
                if on_new is not None:
                    on_new(key)
            else:
                new = old - cc * k
                if new:
                    work[key] = new
                else:
                    del work[key]


def _primitive(terms: dict) -> tuple[dict, Fraction]:
    """Integer terms p and rational s with s * terms = p, p primitive.

    The greatest term of p gets a positive coefficient.
    """
    if not terms:
        return {}, Fraction(1)
    den = 1
    for c in terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {u: _z(c.numerator * (den // c.denominator)) for u, c in terms.items()}
    g = _z(0)
    for v in ints.values():
        g = _gcd(g, v)
    if ints[max(ints, key=ModuleMonomial.key)] < 0:
        g = -g
    if g != 1:
        ints = {u: v // g for u, v in ints.items()}
    return ints, Fraction(den, int(g))


def _remove_content(work: dict, scale: Fraction) -> Fraction:
    g = _z(0)
    for v in work.values():
        g = _gcd(g, v)
        if g == 1:
            return scale
    if g > 1:
        for u in work:
            work[u] //= g
        scale = scale / int(g)
    return scale


class _Divider:
    """Fraction-free reduction against a growing list of divisors.

    Each divisor g is stored as a primitive integer vector p = mu * g. The
    element being reduced is an integer vector W with a rational scale S;
    eliminating a term multiplies W and S by a small integer instead of
    dividing, and common content is stripped after each step.
    """

    def __init__(self, G: Sequence[ModuleElement] = ()):
        self.heads: list[ModuleMonomial] = []
        self.lcs: list = []
        self.mus: list[Fraction] = []
        self.gterms: list[dict] = []
        self.by_gen: dict[int, list[int]] = {}
        for g in G:
            self.add(g)

    def add(self, g: ModuleElement) -> None:
        lm = leading(g)[0]
        p, mu = _primitive(g._terms)
        self.by_gen.setdefault(lm.gen, []).append(len(self.heads))
        self.heads.append(lm)
        self.lcs.append(p[lm])
        self.mus.append(mu)
        self.gterms.append(p)

    def reduce(self, work: dict, scale: Fraction, quotients: list[dict] | None = None):
        """Reduce the integer vector ``work`` (representing work / scale) in place.

        Returns the final scale and the sequence of eliminated leaders.
        Quotient contributions are accumulated as exact rationals.
        """
        heads, lcs, gterms, by_gen = self.heads, self.lcs, self.gterms, self.by_gen
        heap = [(_desc_key(u), u) for u in work]
        heapq.heapify(heap)
        push = lambda u: heapq.heappush(heap, (_desc_key(u), u))  # noqa: E731
        leaders: list[ModuleMonomial] = []
        last = None
        while heap:
            _, z = heapq.heappop(heap)
            if z == last:
                continue
            last = z
            c = work.get(z)
            if c is None:
                continue
            zm = z.mono
            k = next((i for i in by_gen.get(z.gen, ()) if heads[i].mono.divides(zm)), None)
            if k is None:
                continue
            eta = zm.quotient(heads[k].mono)
            lc = lcs[k]
            g = _gcd(c, lc)
            a, b = lc // g, c // g
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for u in work:
                    work[u] *= a
                scale = scale * int(a)
            if quotients is not None:
                # (W/S) - q * g with q = b * mu / S_new after scaling
                inc = Fraction(int(b)) * self.mus[k] / scale
                qk = quotients[k]
                s = qk.get(eta, 0) + inc
                if s:
                    qk[eta] = s
                else:
                    qk.pop(eta, None)
            leaders.append(z)
            # every new term is smaller than z, so it is still ahead of us in the heap order
            _subtract_multiple(work, eta, b, gterms[k], on_new=push)
            if a != 1:
                scale = _remove_content(work, scale)
        return scale, leaders


def _from_ints(module, work: dict, scale: Fraction) -> ModuleElement:
    return ModuleElement._raw(module, {u: Fraction(int(c)) / scale for u, c in work.items()})


def _reduce_greatest(f: ModuleElement, G: Sequence[ModuleElement]) -> DivisionResult:
    qs: list[dict] = [{} for _ in G]
    work, scale = _primitive(f._terms)
    scale, leaders = _Divider(G).reduce(work, scale, qs)
    quotients = [WeylElement(f.n, q) for q in qs]
    return DivisionResult(quotients, _from_ints(f.module, work, scale), leaders)


def _reduce_first_divisor(f: ModuleElement, G: Sequence[ModuleElement]) -> DivisionResult:
    heads = [leading(g) for g in G]
    gterms = [_fast_terms(g) for g in G]
    qs: list[dict] = [{} for _ in G]
    work = _fast_terms(f)
    leaders: list[ModuleMonomial] = []
    while True:
        for k, (lm, lc) in enumerate(heads):
            cands = [u for u in work if divides(lm, u)]
            if cands:
                break
        else:
            break
        z = max(cands, key=ModuleMonomial.key)
        eta = z.mono.quotient(lm.mono)
        coef = work[z] / _q(lc.numerator, lc.denominator)
        s = qs[k].get(eta, 0) + coef
        if s:
            qs[k][eta] = s
        else:
            qs[k].pop(eta, None)
        leaders.append(z)
        _subtract_multiple(work, eta, coef, gterms[k])
    return _finish(f, G, qs, work, leaders)


def s_polynomial(f: ModuleElement, g: ModuleElement) -> ModuleElement:
    """(L/LT(f)) f - (L/LT(g)) g with L = lcm(LM(f), LM(g)); zero across generators."""
    (lf, cf), (lg, cg) = leading(f), leading(g)
    L = lcm_mono(lf, lg)
    if L is None:
        return f.module.zero()
    return act_monomial(quotient(L, lf), f, 1 / cf) - act_monomial(quotient(L, lg), g, 1 / cg)


def _s_terms(div: _Divider, i: int, j: int) -> tuple[dict, Fraction]:
    """S(g_i, g_j) in integer form (W, S) with S * S(g_i, g_j) = W."""
    lf, lg = div.heads[i], div.heads[j]
    L = lcm_mono(lf, lg)
    if L is None:
        return {}, Fraction(1)
    cf, cg = div.lcs[i], div.lcs[j]
    g = _gcd(cf, cg)
    # the mu factors cancel: S = (L/lf) p_i / cf - (L/lg) p_j / cg; clear cf*cg/g
    work: dict = {}
    _subtract_multiple(work, quotient(L, lf), -(cg // g), div.gterms[i])
    _subtract_multiple(work, quotient(L, lg), cf // g, div.gterms[j])
    return work, _remove_content(work, Fraction(int(cf) * int(cg), int(g)))


def buchberger(F: Sequence[ModuleElement], reduce_basis: bool = False, selection: str = "fifo") -> Basis:
    """Gröbner basis of the submodule generated by F.

    ``selection`` picks the next S-pair: ``fifo`` takes pairs in creation
    order, ``normal`` takes the pair with the smallest lcm of leading
    monomials (creation order on ties). New remainders are appended to the
    basis. With ``reduce_basis`` the result is pruned of elements whose
    leading monomial is divisible by that of another element.
    """
    _check_basis(F)
    if selection not in ("fifo", "normal"):
        raise ValueError(f"unknown selection {selection!r}")
    G: Basis = []
    for f in F:
        if f not in G:
            G.append(f)
    div = _Divider(G)
    pairs: list = []
    fifo = deque()
    counter = 0

    def add_pair(i: int, j: int) -> None:
        nonlocal counter
        if selection == "fifo":
            fifo.append((i, j))
        else:
            L = lcm_mono(div.heads[i], div.heads[j])
            # cross-generator pairs have S = 0; skip them up front
            if L is not None:
                heapq.heappush(pairs, (L.key(), counter, i, j))
                counter += 1

    for j in range(len(G)):
        for i in range(j):
            add_pair(i, j)
    while fifo or pairs:
        if selection == "fifo":
            i, j = fifo.popleft()
        else:
            _, _, i, j = heapq.heappop(pairs)
        work, scale = _s_terms(div, i, j)
        if not work:
            continue
        scale, _ = div.reduce(work, scale)
        if not work:
            continue
        h = _from_ints(G[0].module, work, scale)
        G.append(h)
        div.add(h)
        for u in range(len(G) - 1):
            add_pair(u, len(G) - 1)
    if reduce_basis:
        G = minimalize(G)
    return G


def minimalize(G: Sequence[ModuleElement]) -> Basis:
    """Drop elements whose LM is a multiple of another element's LM (first one wins on ties)."""
    lms = [leading(g)[0] for g in G]
    keep = []
    for i, u in enumerate(lms):
        redundant = any(
            divides(v, u) and (v != u or j < i) for j, v in enumerate(lms) if j != i
        )
        if not redundant:
            keep.append(G[i])
    return keep


def is_groebner(G: Sequence[ModuleElement]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    return all(
        reduce_full(s_polynomial(G[i], G[j]), G).remainder.is_zero()
        for j in range(len(G))
        for i in range(j)
    )


def is_member(f: ModuleElement, G: Sequence[ModuleElement]) -> bool:
    """Submodule membership; G must already be a Gröbner basis."""
    return reduce_full(f, G).remainder.is_zero()
