"""Numerical polynomials in the binomial basis C(t+i, i) and Kolchin polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


@lru_cache(maxsize=None)
def binomial_in_t(shift: int, k: int) -> tuple[Fraction, ...]:
    """Monomial coefficients (constant first) of the polynomial C(t + shift, k).

    Read as (t+shift)(t+shift-1)...(t+shift-k+1)/k!, valid for any integer shift.
    """
    p = [Fraction(1)]
    for j in range(k):
        p = _poly_mul(p, [Fraction(shift - j), Fraction(1)])
    f = factorial(k)
    return tuple(c / f for c in p)


def _trim(cs: Sequence) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class NumericalPolynomial:
    """sum_i binom_coeffs[i] * C(t+i, i) with integer coefficients.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    binom_coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = []
        for a in self.binom_coeffs:
            if Fraction(a).denominator != 1:
                raise ValueError(f"binomial-basis coefficient {a} is not an integer")
            cs.append(int(a))
        object.__setattr__(self, "binom_coeffs", _trim(cs))

    @classmethod
    def from_binomial(cls, coeffs: Iterable[int]) -> NumericalPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def from_monomial(cls, coeffs: Sequence) -> NumericalPolynomial:
        """Convert monomial coefficients (constant first) to the binomial basis.

        Raises ValueError if the polynomial is not numerical.
        """
        rem = [Fraction(c) for c in _trim([Fraction(c) for c in coeffs])]
        out = [0] * len(rem)
        for i in range(len(rem) - 1, -1, -1):
            # C(t+i, i) has leading coefficient 1/i!
            a = rem[i] * factorial(i)
            if a.denominator != 1:
                raise ValueError("polynomial is not numerical (non-integer binomial coefficient)")
            a = int(a)
            out[i] = a
            if a:
                for j, c in enumerate(binomial_in_t(i, i)):
                    rem[j] -= a * c
        assert not any(rem)
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.binom_coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.binom_coeffs[i] if 0 <= i < len(self.binom_coeffs) else 0

    def leading_coefficient(self) -> int:
        return self.binom_coeffs[-1] if self.binom_coeffs else 0

    def to_monomial(self) -> tuple[Fraction, ...]:
        """Monomial coefficients, constant term first."""
        out = [Fraction(0)] * len(self.binom_coeffs)
        for i, a in enumerate(self.binom_coeffs):
            if a:
                for j, c in enumerate(binomial_in_t(i, i)):
                    out[j] += a * c
        return tuple(out)

    def __call__(self, t: int) -> int:
        return sum(a * _binom_value(t + i, i) for i, a in enumerate(self.binom_coeffs))

    def __add__(self, other: NumericalPolynomial) -> NumericalPolynomial:
        k = max(len(self.binom_coeffs), len(other.binom_coeffs))
        return NumericalPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(k)))

    def __sub__(self, other: NumericalPolynomial) -> NumericalPolynomial:
        return self + other.scale(-1)

    def scale(self, c: int) -> NumericalPolynomial:
        return NumericalPolynomial(tuple(c * a for a in self.binom_coeffs))

    def is_zero(self) -> bool:
        return not self.binom_coeffs


def _binom_value(top: int, k: int) -> int:
    # polynomial reading of C(top, k) for any integer top
    if top >= 0:
        return comb(top, k)
    # C(-a, k) = (-1)^k C(a+k-1, k)
    return (-1) ** k * comb(-top + k - 1, k)


def forward_difference(p: NumericalPolynomial, k: int = 1) -> NumericalPolynomial:
    """k-th forward difference p -> sum_j (-1)^(k-j) C(k,j) p(t+j).

    Since Delta C(t+i, i) = C(t+1+(i-1), i-1), dropping the k lowest binomial
    coefficients gives Delta^k p evaluated at t-k; we shift the argument back.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = NumericalPolynomial(p.binom_coeffs[k:])
    return q if k == 0 else _shift_argument(q, k)


def _shift_argument(p: NumericalPolynomial, k: int) -> NumericalPolynomial:
    # p(t + k) via the monomial form
    cs = p.to_monomial()
    out = [Fraction(0)] * len(cs)
    for j, c in enumerate(cs):
        for i in range(j + 1):
            out[i] += c * comb(j, i) * k ** (j - i)
    return NumericalPolynomial.from_monomial(out)


@dataclass(frozen=True)
class PointSet:
    """A finite subset of N^dim."""

    dim: int
    points: frozenset[tuple[int, ...]] = frozenset()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pts = frozenset(tuple(int(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have length {self.dim}")
            if any(c < 0 for c in p):
                raise ValueError(f"point {p} has a negative coordinate")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, dim: int, points: Iterable[Sequence[int]]) -> PointSet:
        return cls(dim, frozenset(tuple(p) for p in points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def max_norm(self) -> int:
        """Largest coordinate sum among the points (0 for the empty set)."""
        return max((sum(p) for p in self.points), default=0)

    def join_norm(self) -> int:
        """Coordinate sum of the componentwise maximum of all points."""
        if not self.points:
            return 0
        return sum(max(p[j] for p in self.points) for j in range(self.dim))


def _leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_points(A: PointSet) -> PointSet:
    """The antichain of minimal elements under the product order."""
    pts = list(A.points)
    mins = [p for p in pts if not any(q != p and _leq(q, p) for q in pts)]
    return PointSet(A.dim, frozenset(mins))


def kolchin_polynomial(A: PointSet) -> NumericalPolynomial:
    """Kolchin dimension polynomial by inclusion-exclusion over subsets of the minimal points."""
    m = A.dim
    pts = sorted(minimal_points(A).points)
    acc = [Fraction(0)] * (m + 1)
    for ell in range(len(pts) + 1):
        sign = -1 if ell % 2 else 1
        for lam in combinations(pts, ell):
            b = sum(max(col) for col in zip(*lam)) if lam else 0
            for j, c in enumerate(binomial_in_t(m - b, m)):
                acc[j] += sign * c
    return NumericalPolynomial.from_monomial(acc)


def kolchin_threshold(A: PointSet) -> int:
    """Smallest s from which the inclusion-exclusion terms all count correctly.

    C(s+m-b, m) read as a polynomial agrees with the number of points of
    N^m above a corner of norm b within norm s exactly when s >= b - m, so
    the formula is a count from max(0, b_max - m) on, where b_max is the
    norm of the componentwise maximum of the minimal points.
    """
    return max(0, minimal_points(A).join_norm() - A.dim)


def count_v_points(A: PointSet, s: int) -> int:
    """Number of v in N^m with |v| <= s that dominate no point of A.

    Exact count by recursion over coordinates. For coordinate j the values
    of v_j are grouped: a value kills (rules out domination of) exactly
    the remaining points whose j-th coordinate exceeds it.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    m = A.dim
    pts = tuple(sorted(A.points))

    @lru_cache(maxsize=None)
    def go(j: int, budget: int, alive: frozenset[int]) -> int:
        if j == m:
            return 0 if alive else 1
        total = 0
        for vj in range(budget + 1):
            still = frozenset(i for i in alive if pts[i][j] <= vj)
            total += go(j + 1, budget - vj, still)
        return total

    return go(0, s, frozenset(range(len(pts))))


def count_v_points_naive(A: PointSet, s: int) -> int:
    """Literal enumeration of the same count; only for small dim and s."""
    from itertools import product

    m = A.dim
    pts = list(A.points)
    total = 0
    for v in product(range(s + 1), repeat=m):
        if sum(v) <= s and not any(_leq(a, v) for a in pts):
            total += 1
    return total
