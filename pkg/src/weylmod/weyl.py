"""Exact arithmetic in the Weyl algebra A_n over Q.

Elements are kept in normal form: a Q-linear combination of monomials
x^alpha d^beta with every x written to the left of every d.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple

MultiIndex = tuple[int, ...]


def multi_index(entries: Iterable[int], n: int) -> MultiIndex:
    """Validate and freeze a multi-index of length n."""
    idx = tuple(int(e) for e in entries)
    if len(idx) != n:
        raise ValueError(f"multi-index {idx} has length {len(idx)}, expected {n}")
    if any(e < 0 for e in idx):
        raise ValueError(f"multi-index {idx} has a negative entry")
    return idx


class WeylMonomial(NamedTuple):
    """The monomial x^alpha d^beta."""

    alpha: MultiIndex
    beta: MultiIndex

    @property
    def n(self) -> int:
        return len(self.alpha)

    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def key(self) -> tuple:
        # degree first, then x-exponents, then d-exponents
        return (self.degree(), self.alpha, self.beta)

    def divides(self, other: WeylMonomial) -> bool:
        return all(a <= b for a, b in zip(self.alpha, other.alpha)) and all(
            a <= b for a, b in zip(self.beta, other.beta)
        )

    def quotient(self, other: WeylMonomial) -> WeylMonomial:
        """Return self / other (componentwise difference)."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return WeylMonomial(
            tuple(a - b for a, b in zip(self.alpha, other.alpha)),
            tuple(a - b for a, b in zip(self.beta, other.beta)),
        )

    def lcm(self, other: WeylMonomial) -> WeylMonomial:
        return WeylMonomial(
            tuple(map(max, self.alpha, other.alpha)),
            tuple(map(max, self.beta, other.beta)),
        )

    def commutative_mul(self, other: WeylMonomial) -> WeylMonomial:
        """Exponent addition, i.e. the leading monomial of the Weyl product."""
        return WeylMonomial(
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
            tuple(a + b for a, b in zip(self.beta, other.beta)),
        )

    @classmethod
    def one(cls, n: int) -> WeylMonomial:
        return cls((0,) * n, (0,) * n)


@lru_cache(maxsize=None)
def _commute_one(b: int, a: int) -> tuple[tuple[int, int], ...]:
    # d^b x^a = sum_k C(b,k) C(a,k) k! x^(a-k) d^(b-k)
    return tuple((k, comb(b, k) * comb(a, k) * factorial(k)) for k in range(min(a, b) + 1))


@lru_cache(maxsize=1 << 18)
def monomial_product(u: WeylMonomial, v: WeylMonomial) -> tuple[tuple[WeylMonomial, int], ...]:
    """Normal form of (x^a d^b)(x^c d^e) as (monomial, integer coefficient) pairs.

    The first pair is always the commutative product with coefficient 1.
    """
    if len(u.alpha) != len(v.alpha):
        raise ValueError("monomials from Weyl algebras of different rank")
    per_var = [_commute_one(b, c) for b, c in zip(u.beta, v.alpha)]
    out = []
    for choice in product(*per_var):
        coeff = 1
        for _, c in choice:
            coeff *= c
        ks = [k for k, _ in choice]
        alpha = tuple(a + c - k for a, c, k in zip(u.alpha, v.alpha, ks))
        beta = tuple(b + e - k for b, e, k in zip(u.beta, v.beta, ks))
        out.append((WeylMonomial(alpha, beta), coeff))
    return tuple(out)


class WeylElement:
    """An element of A_n in normal form, immutable.

    ``terms`` maps WeylMonomial -> nonzero Fraction. Iteration order
    (``sorted_terms``) is descending in the degree-lex monomial order.
    """

    __slots__ = ("n", "_terms", "_sorted")

    def __init__(self, n: int, terms: Mapping[WeylMonomial, object] | None = None):
        self.n = n
        clean: dict[WeylMonomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if mono.n != n or len(mono.beta) != n:
                raise ValueError(f"monomial {mono} does not belong to A_{n}")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._sorted = None

    # constructors

    @classmethod
    def zero(cls, n: int) -> WeylElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> WeylElement:
        return cls(n, {WeylMonomial.one(n): 1})

    @classmethod
    def monomial(cls, alpha, beta, coeff=1) -> WeylElement:
        n = len(alpha)
        return cls(n, {WeylMonomial(multi_index(alpha, n), multi_index(beta, n)): coeff})

    @classmethod
    def x(cls, i: int, n: int) -> WeylElement:
        """The generator x_i (1-based)."""
        alpha = tuple(int(j == i - 1) for j in range(n))
        return cls.monomial(alpha, (0,) * n)

    @classmethod
    def d(cls, i: int, n: int) -> WeylElement:
        """The generator d_i (1-based)."""
        beta = tuple(int(j == i - 1) for j in range(n))
        return cls.monomial((0,) * n, beta)

    @classmethod
    def constant(cls, c, n: int) -> WeylElement:
        return cls(n, {WeylMonomial.one(n): c})

    # inspection

    @property
    def terms(self) -> dict[WeylMonomial, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> tuple[tuple[WeylMonomial, Fraction], ...]:
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._terms.items(), key=lambda mc: mc[0].key(), reverse=True)
            )
        return self._sorted

    def is_zero(self) -> bool:
        return not self._terms

    def leading_monomial(self) -> WeylMonomial:
        if not self._terms:
            raise ValueError("no leading term of zero")
        return self.sorted_terms()[0][0]

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            raise ValueError("no leading term of zero")
        return self.sorted_terms()[0][1]

    def coefficient(self, mono: WeylMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylElement.constant(other, self.n)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from .notation import format_weyl

        return f"WeylElement({format_weyl(self)!r})"

    # arithmetic

    def _check(self, other: WeylElement) -> None:
        if self.n != other.n:
            raise ValueError(f"Weyl algebra mismatch: A_{self.n} vs A_{other.n}")

    def _coerce(self, other) -> WeylElement:
        if isinstance(other, (int, Fraction)):
            return WeylElement.constant(other, self.n)
        return other

    def __add__(self, other) -> WeylElement:
        other = self._coerce(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return WeylElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> WeylElement:
        return WeylElement(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> WeylElement:
        other = self._coerce(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> WeylElement:
        return (-self) + other

    def scale(self, c) -> WeylElement:
        c = Fraction(c)
        return WeylElement(self.n, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other) -> WeylElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return weyl_mul(self, other)

    def __rmul__(self, other) -> WeylElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> WeylElement:
        out = WeylElement.one(self.n)
        for _ in range(k):
            out = weyl_mul(out, self)
        return out


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """Product a*b in normal form."""
    if a.n != b.n:
        raise ValueError(f"Weyl algebra mismatch: A_{a.n} vs A_{b.n}")
    out: dict[WeylMonomial, Fraction] = {}
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            c = cu * cv
            for w, k in monomial_product(u, v):
                out[w] = out.get(w, 0) + c * k
    return WeylElement(a.n, out)


def bernstein_degree(a: WeylElement) -> int:
    """Largest |alpha|+|beta| among the terms of a; -1 for zero."""
    return max((m.degree() for m in a._terms), default=-1)


# --- operator action on Q[x_1..x_n], used to check weyl_mul ---------------

Polynomial = dict[MultiIndex, Fraction]


def _apply_monomial(mono: WeylMonomial, p: Mapping[MultiIndex, Fraction]) -> Polynomial:
    out: Polynomial = {}
    for exps, c in p.items():
        # differentiate, then multiply by x^alpha
        coeff = Fraction(c)
        new = []
        for e, b, a in zip(exps, mono.beta, mono.alpha):
            if b > e:
                coeff = Fraction(0)
                break
            coeff *= factorial(e) // factorial(e - b)
            new.append(e - b + a)
        if coeff:
            key = tuple(new)
            out[key] = out.get(key, 0) + coeff
    return out


def apply(a: WeylElement, p: Mapping[MultiIndex, object]) -> Polynomial:
    """Act with the operator a on the polynomial p (exponent tuple -> coefficient).

    x_i acts by multiplication and d_i by partial derivative.
    """
    for exps in p:
        if len(exps) != a.n:
            raise ValueError("polynomial has the wrong number of variables")
    out: Polynomial = {}
    for mono, c in a._terms.items():
        for exps, v in _apply_monomial(mono, p).items():
            out[exps] = out.get(exps, 0) + c * v
    return {e: c for e, c in out.items() if c}
