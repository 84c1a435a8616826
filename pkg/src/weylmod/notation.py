"""Text notation for Weyl elements, module elements and presentation files.

Presentation files look like::

    weyl n=2 m=2
    rel: x1^2 d1^3 e1 + d1^5 e1
    rel: x2^2 e1 - x1 e2

``d`` stands for the derivation. Factors are multiplied left to right in
A_n, so ``d1 x1 e1`` is read as ``x1 d1 e1 + e1``. On input, the symbols
∂ and − and sub/superscript digits are accepted as well; the printer only
emits ASCII.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .module import FreeModule, ModuleElement, act
from .weyl import WeylElement, WeylMonomial

if TYPE_CHECKING:
    from .bernstein import ModulePresentation
    from .numpoly import NumericalPolynomial


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.msg, self.line, self.col = msg, line, col
        where = []
        if line is not None:
            where.append(f"line {line}")
        if col is not None:
            where.append(f"col {col}")
        super().__init__(f"{', '.join(where)}: {msg}" if where else msg)


_SUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_SUP = dict(zip("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789"))


def _normalize(text: str) -> str:
    out = []
    in_sup = False
    for ch in text.translate(_SUB):
        if ch in _SUP:
            if not in_sup:
                out.append("^")
                in_sup = True
            out.append(_SUP[ch])
            continue
        in_sup = False
        if ch == "∂":
            ch = "d"
        elif ch in "−–":
            ch = "-"
        elif ch in "·*":
            ch = " "
        out.append(ch)
    return "".join(out)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int  # 1-based, in the normalized line


_TOKEN_RE = re.compile(r"\s*(?:(?P<INT>\d+)|(?P<SYM>[xde^+\-/]))")


def _tokenize(text: str, col0: int, line: int | None) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN_RE.match(text, pos)
        if mt is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", line, col0 + bad)
        if mt.group("INT") is not None:
            toks.append(_Tok("INT", mt.group("INT"), col0 + mt.start("INT")))
        else:
            toks.append(_Tok(mt.group("SYM"), mt.group("SYM"), col0 + mt.start("SYM")))
        pos = mt.end()
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], n: int, module: FreeModule | None, line, end_col):
        self.toks, self.i = toks, 0
        self.n, self.module, self.line, self.end_col = n, module, line, end_col

    def peek(self, k: int = 0) -> _Tok | None:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok.col if tok else self.end_col)

    def take(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            what = "end of input" if tok is None else repr(tok.text)
            self.error(f"expected {kind}, found {what}", tok)
        self.i += 1
        return tok

    def index(self, bound: int, what: str) -> int:
        tok = self.take("INT")
        v = int(tok.text)
        if not 1 <= v <= bound:
            self.error(f"{what} index {v} out of range 1..{bound}", tok)
        return v

    def expr(self):
        if self.peek() is None:
            self.error("empty expression")
        total = None
        sign = 1
        if self.peek().kind in "+-" and (self.peek(1) is None or self.peek(1).kind != "INT"):
            sign = -1 if self.take(self.peek().kind).kind == "-" else 1
        while True:
            t = self.term()
            if sign < 0:
                t = -t
            total = t if total is None else total + t
            tok = self.peek()
            if tok is None:
                return total
            if tok.kind not in "+-":
                self.error(f"expected '+' or '-', found {tok.text!r}")
            self.i += 1
            sign = -1 if tok.kind == "-" else 1

    def rational(self) -> Fraction:
        neg = False
        if self.peek() is not None and self.peek().kind == "-":
            self.i += 1
            neg = True
        num = int(self.take("INT").text)
        den = 1
        if self.peek() is not None and self.peek().kind == "/":
            self.i += 1
            tok = self.take("INT")
            den = int(tok.text)
            if den == 0:
                self.error("zero denominator", tok)
        q = Fraction(num, den)
        return -q if neg else q

    def term(self):
        n = self.n
        tok = self.peek()
        coeff = Fraction(1)
        if tok is not None and (tok.kind == "INT" or tok.kind == "-"):
            coeff = self.rational()
        D = WeylElement.constant(coeff, n)
        while (tok := self.peek()) is not None and tok.kind in ("x", "d"):
            self.i += 1
            i = self.index(n, "variable")
            e = 1
            if self.peek() is not None and self.peek().kind == "^":
                self.i += 1
                e = int(self.take("INT").text)
            gen = WeylElement.x(i, n) if tok.kind == "x" else WeylElement.d(i, n)
            D = D * gen**e
        if self.module is None:
            if self.peek() is not None and self.peek().kind == "e":
                self.error("generator symbol in a Weyl algebra expression")
            return D
        tok = self.peek()
        if tok is None or tok.kind != "e":
            self.error("each term must end with a generator e<i>", tok)
        self.i += 1
        g = self.index(self.module.m, "generator")
        return act(D, self.module.gen(g))


def _parse_expr(text: str, n: int, module: FreeModule | None, line=None, col0: int = 1):
    norm = _normalize(text)
    toks = _tokenize(norm, col0, line)
    p = _Parser(toks, n, module, line, col0 + len(norm))
    return p.expr()


def parse_weyl(text: str, n: int) -> WeylElement:
    """Parse an element of A_n such as ``d1 x1 + 3/2``."""
    return _parse_expr(text, n, None)


def parse_element(text: str, module: FreeModule) -> ModuleElement:
    """Parse an element of the free module such as ``x1^2 e1 - x1 e2``."""
    return _parse_expr(text, module.n, module)


_HEADER_RE = re.compile(r"^\s*weyl\s+n\s*=\s*(\d+)\s+m\s*=\s*(\d+)\s*$")
_REL_RE = re.compile(r"^(\s*rel\s*:)(.*)$")


def parse(source: str) -> "ModulePresentation":
    """Parse a presentation file."""
    from .bernstein import ModulePresentation

    module = None
    relations = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if module is None:
            mt = _HEADER_RE.match(line)
            if mt is None:
                raise ParseError("expected header 'weyl n=<int> m=<int>'", lineno, 1)
            n, m = int(mt.group(1)), int(mt.group(2))
            if n < 1 or m < 1:
                raise ParseError("n and m must be positive", lineno, 1)
            module = FreeModule(n, m)
            continue
        mt = _REL_RE.match(line)
        if mt is None:
            raise ParseError("expected 'rel:' line", lineno, 1)
        body = mt.group(2)
        if not body.strip():
            raise ParseError("empty relation", lineno, len(mt.group(1)) + 1)
        f = _parse_expr(body, module.n, module, lineno, len(mt.group(1)) + 1)
        if f.is_zero():
            raise ParseError("zero relation", lineno, len(mt.group(1)) + 1)
        relations.append(f)
    if module is None:
        raise ParseError("missing header 'weyl n=<int> m=<int>'", 1, 1)
    return ModulePresentation(module.n, module.m, tuple(relations))


# --- printing ---------------------------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_weyl_monomial(mono: WeylMonomial) -> str:
    parts = []
    for sym, exps in (("x", mono.alpha), ("d", mono.beta)):
        for i, e in enumerate(exps, start=1):
            if e == 1:
                parts.append(f"{sym}{i}")
            elif e > 1:
                parts.append(f"{sym}{i}^{e}")
    return " ".join(parts)


def _format_terms(items) -> str:
    # items: (monomial text, coefficient) in printing order
    out = []
    for k, (body, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        coef = "" if a == 1 and body else format_rational(a)
        text = " ".join(s for s in (coef, body) if s)
        if k == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out) if out else "0"


def format_weyl(a: WeylElement) -> str:
    return _format_terms((format_weyl_monomial(m), c) for m, c in a.sorted_terms())


def format_element(f: ModuleElement) -> str:
    return _format_terms(
        (" ".join(s for s in (format_weyl_monomial(u.mono), f"e{u.gen}") if s), c)
        for u, c in f.sorted_terms()
    )


def format_presentation(P: "ModulePresentation") -> str:
    lines = [f"weyl n={P.n} m={P.m}"]
    lines += [f"rel: {format_element(r)}" for r in P.relations]
    return "\n".join(lines) + "\n"


def format_binomial(p: "NumericalPolynomial", var: str = "t") -> str:
    """Binomial-basis form, highest term first: ``6 C(t+3,3) - 5 C(t+2,2) + 15 C(t,0)``."""
    items = []
    for i in range(p.degree, -1, -1):
        a = p.coefficient(i)
        if a:
            top = f"{var}+{i}" if i else var
            items.append((f"C({top},{i})", a))
    return _format_terms(items)


def format_monomial_poly(coeffs, var: str = "t") -> str:
    """Monomial form from coefficients listed constant first: ``1/6 t^3 + t^2 + 1``."""
    items = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[j])
        if c:
            body = f"{var}^{j}" if j > 1 else (var if j == 1 else "")
            items.append((body, c))
    return _format_terms(items)
