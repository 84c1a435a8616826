"""Free modules E = A_n e_1 + ... + A_n e_m and their elements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple

from .weyl import WeylElement, WeylMonomial, monomial_product


class ModuleMonomial(NamedTuple):
    """theta * e_gen with 1-based generator index."""

    mono: WeylMonomial
    gen: int

    def degree(self) -> int:
        return self.mono.degree()

    def key(self) -> tuple:
        m = self.mono
        return (m.degree(), m.alpha, m.beta, self.gen)


def compare(u: ModuleMonomial, v: ModuleMonomial) -> int:
    """-1, 0 or 1 as u <, =, > v.

    Monomials are ordered by degree, then lexicographically by the
    x-exponents and d-exponents; among equal theta, the smaller generator
    index is smaller.
    """
    ku, kv = u.key(), v.key()
    return (ku > kv) - (ku < kv)


def divides(v: ModuleMonomial, u: ModuleMonomial) -> bool:
    return v.gen == u.gen and v.mono.divides(u.mono)


def quotient(u: ModuleMonomial, v: ModuleMonomial) -> WeylMonomial:
    """u / v as a Weyl monomial; requires divides(v, u)."""
    if not divides(v, u):
        raise ValueError(f"{v} does not divide {u}")
    return u.mono.quotient(v.mono)


def lcm_mono(u: ModuleMonomial, v: ModuleMonomial) -> ModuleMonomial | None:
    """Least common multiple, or None when the generators differ."""
    if u.gen != v.gen:
        return None
    return ModuleMonomial(u.mono.lcm(v.mono), u.gen)


@dataclass(frozen=True)
class FreeModule:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("need n >= 1 and m >= 1")

    def zero(self) -> ModuleElement:
        return ModuleElement(self, {})

    def gen(self, i: int) -> ModuleElement:
        return ModuleElement(self, {ModuleMonomial(WeylMonomial.one(self.n), i): 1})

    def monomial(self, alpha, beta, gen: int, coeff=1) -> ModuleElement:
        return ModuleElement(self, {ModuleMonomial(WeylMonomial(tuple(alpha), tuple(beta)), gen): coeff})

    def parse(self, text: str) -> ModuleElement:
        from .notation import parse_element

        return parse_element(text, self)

    def __contains__(self, u: ModuleMonomial) -> bool:
        return (
            1 <= u.gen <= self.m
            and len(u.mono.alpha) == self.n
            and len(u.mono.beta) == self.n
            and all(e >= 0 for e in u.mono.alpha + u.mono.beta)
        )


class ModuleElement:
    """A finite Q-combination of module monomials; immutable."""

    __slots__ = ("module", "_terms", "_sorted")

    def __init__(self, module: FreeModule, terms: Mapping[ModuleMonomial, object]):
        self.module = module
        clean: dict[ModuleMonomial, Fraction] = {}
        for u, c in terms.items():
            if u not in module:
                raise ValueError(f"{u} is not a monomial of the free A_{module.n}-module of rank {module.m}")
            c = Fraction(c)
            if c:
                clean[u] = clean.get(u, 0) + c
        self._terms = {u: c for u, c in clean.items() if c}
        self._sorted = None

    @classmethod
    def _raw(cls, module: FreeModule, terms: dict[ModuleMonomial, Fraction]) -> ModuleElement:
        # trusted constructor: terms already valid and nonzero
        obj = cls.__new__(cls)
        obj.module = module
        obj._terms = terms
        obj._sorted = None
        return obj

    @property
    def n(self) -> int:
        return self.module.n

    @property
    def terms(self) -> dict[ModuleMonomial, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> tuple[tuple[ModuleMonomial, Fraction], ...]:
        """Terms in decreasing monomial order."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms.items(), key=lambda t: t[0].key(), reverse=True))
        return self._sorted

    def __iter__(self) -> Iterator[tuple[ModuleMonomial, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, u: ModuleMonomial) -> Fraction:
        return self._terms.get(u, Fraction(0))

    def lm(self) -> ModuleMonomial:
        return leading(self)[0]

    def lc(self) -> Fraction:
        return leading(self)[1]

    def degree(self) -> int:
        return max((u.degree() for u in self._terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.module == other.module and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.module, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from .notation import format_element

        return f"ModuleElement({format_element(self)!r})"

    def _check(self, other: ModuleElement) -> None:
        if self.module != other.module:
            raise ValueError(f"module mismatch: {self.module} vs {other.module}")

    def __add__(self, other: ModuleElement) -> ModuleElement:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for u, c in other._terms.items():
            s = out.get(u, 0) + c
            if s:
                out[u] = s
            else:
                out.pop(u, None)
        return ModuleElement._raw(self.module, out)

    def __neg__(self) -> ModuleElement:
        return ModuleElement._raw(self.module, {u: -c for u, c in self._terms.items()})

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> ModuleElement:
        c = Fraction(c)
        if not c:
            return self.module.zero()
        return ModuleElement._raw(self.module, {u: c * v for u, v in self._terms.items()})

    def __mul__(self, c) -> ModuleElement:
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, WeylElement):
            return act(other, self)
        return NotImplemented


def leading(f: ModuleElement) -> tuple[ModuleMonomial, Fraction]:
    """(LM(f), LC(f)); the leading term is LC * LM."""
    if not f._terms:
        raise ValueError("no leading term of zero")
    return f.sorted_terms()[0]


def act_monomial(theta: WeylMonomial, f: ModuleElement, coeff=1) -> ModuleElement:
    """coeff * theta * f, the workhorse of reduction."""
    coeff = Fraction(coeff)
    out: dict[ModuleMonomial, Fraction] = {}
    for u, c in f._terms.items():
        cc = coeff * c
        for w, k in monomial_product(theta, u.mono):
            key = ModuleMonomial(w, u.gen)
            out[key] = out.get(key, 0) + cc * k
    return ModuleElement._raw(f.module, {u: c for u, c in out.items() if c})


def act(D: WeylElement, f: ModuleElement) -> ModuleElement:
    """Left action D * f."""
    if D.n != f.n:
        raise ValueError(f"Weyl algebra A_{D.n} does not act on a module over A_{f.n}")
    out: dict[ModuleMonomial, Fraction] = {}
    for theta, cd in D.terms.items():
        for u, c in f._terms.items():
            cc = cd * c
            for w, k in monomial_product(theta, u.mono):
                key = ModuleMonomial(w, u.gen)
                out[key] = out.get(key, 0) + cc * k
    return ModuleElement._raw(f.module, {u: c for u, c in out.items() if c})
