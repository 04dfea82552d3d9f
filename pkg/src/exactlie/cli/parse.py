"""Literal grammar shared by the CLI and the structure-constant files.

    rational    a | a/b                       e.g. -3/4
    p-adic      padic(x; p, N)                e.g. padic(1/3; 5, 4)
    quaternion  a+bi+cj+dk                    e.g. 1-2i+0j+3/2k
    polynomial  sums of products, ^ powers    e.g. 3/2*t1^2*t2 + t3
    matrix      JSON array of arrays of literals

``format_value`` prints the canonical form and ``parse_expr`` inverts it.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from ..matrices import Matrix, format_matrix
from ..poly import Polynomial, PolynomialRing, format_polynomial
from ..scalars import (
    FieldDescriptor,
    Padic,
    Quaternion,
    QuaternionRing,
    check_prime,
    padic_field,
    padic_of_rational,
    rationals,
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_RATIONAL = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*")
_PADIC = re.compile(r"\s*padic\s*\(\s*([^;]*?)\s*;\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_QTERM = re.compile(r"([+-]?)\s*(\d+(?:\s*/\s*\d+)?)?\s*([ijk]?)\s*")

MAX_PRECISION = 4096


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.fullmatch(text)
    if not m:
        pos = _first_bad(text, set("0123456789+-/ "))
        raise ParseError("expected a rational a/b", text, pos)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", text, text.index("/") + 1)
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign == "-" else value


def _first_bad(text: str, allowed: set) -> int:
    for i, ch in enumerate(text):
        if ch not in allowed:
            return i
    return len(text)


def parse_padic(text: str) -> Padic:
    m = _PADIC.fullmatch(text)
    if not m:
        raise ParseError("expected padic(x; p, N)", text, _first_bad(text, set("padic( ")))
    x, p, N = m.groups()
    p, N = int(p), int(N)
    try:
        check_prime(p)
    except ValueError as exc:
        raise ParseError(str(exc), text, m.start(2)) from None
    if not 1 <= N <= MAX_PRECISION:
        raise ParseError(f"precision must lie in 1..{MAX_PRECISION}", text, m.start(3))
    return padic_of_rational(parse_rational(x), p, N)


def parse_quaternion(text: str) -> Quaternion:
    s = text.strip()
    if not s:
        raise ParseError("empty quaternion", text, 0)
    coords = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    first = True
    while pos < len(s):
        m = _QTERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError("bad quaternion term", text, pos)
        sign, num, unit = m.groups()
        if not first and not sign:
            raise ParseError("expected + or - between terms", text, pos)
        if num is None and not unit:
            raise ParseError("empty quaternion term", text, pos)
        c = parse_rational(num) if num is not None else Fraction(1)
        coords[unit] += -c if sign == "-" else c
        pos = m.end()
        first = False
    return Quaternion(coords[""], coords["i"], coords["j"], coords["k"])


# -- polynomials -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)(\d+)|([-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text_end = len(text.rstrip())
    while pos < text_end:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, len(text) - len(text[pos:].lstrip()))
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            idx = int(m.group(3))
            if idx < 1:
                raise ParseError("variables are numbered from t1", text, start)
            out.append(("var", idx, start))
        else:
            out.append((m.group(4), None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _PolyParser:
    """Recursive descent; builds terms as {multi-index: Fraction} dicts."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = max([1] + [v for k, v, _ in self.tokens if k == "var"])

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}", self.text, tok[2])
        self.i += 1
        return tok

    def const(self, c):
        return {(0,) * self.nvars: Fraction(c)}

    @staticmethod
    def add(f, g, sign=1):
        out = dict(f)
        for a, c in g.items():
            out[a] = out.get(a, 0) + sign * c
            if out[a] == 0:
                del out[a]
        return out

    @staticmethod
    def mul(f, g):
        out = {}
        for a, c in f.items():
            for b, d in g.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + c * d
        return {k: v for k, v in out.items() if v != 0}

    def parse(self):
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("unexpected token", self.text, tok[2])
        return f

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        f = self.add({}, self.term(), sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            f = self.add(f, self.term(), sign)
        return f

    def term(self):
        f = self.power()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            g = self.power()
            if op[0] == "/":
                if any(sum(a) for a in g) or not g:
                    raise ParseError("division by a non-constant or zero", self.text, op[2])
                f = self.mul(f, self.const(1 / next(iter(g.values()))))
            else:
                f = self.mul(f, g)
        return f

    def power(self):
        f = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            out = self.const(1)
            for _ in range(tok[1]):
                out = self.mul(out, f)
            f = out
        return f

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return self.const(tok[1])
        if tok[0] == "var":
            self.take()
            return {tuple(1 if m == tok[1] - 1 else 0 for m in range(self.nvars)): Fraction(1)}
        if tok[0] == "(":
            self.take()
            f = self.expr()
            self.take(")")
            return f
        if tok[0] == "-":
            self.take()
            return self.add({}, self.atom(), -1)
        raise ParseError("expected a number, variable or '('", self.text, tok[2])


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    p = _PolyParser(text)
    if nvars is not None:
        if nvars < p.nvars:
            raise ParseError(f"variable index exceeds nvars={nvars}", text, 0)
        p.nvars = nvars
    terms = p.parse()
    return Polynomial(rationals(), p.nvars, terms)


# -- dispatch ------------------------------------------------------------------


def parse_scalar(text: str, field: FieldDescriptor):
    """A scalar literal interpreted in ``field``."""
    text = text.strip()
    if text.startswith("padic"):
        x = parse_padic(text)
        if field.tag != "Qp" or x.p != field.p:
            raise ParseError(f"p-adic literal in a field {field}", text, 0)
        return x.with_precision(min(x.N, field.N))
    return field.coerce(parse_rational(text))


def _looks_quaternion(text: str) -> bool:
    return bool(re.search(r"[ijk]", text))


def parse_expr(text: str, nvars: int | None = None):
    """Parse any literal: rational, p-adic, quaternion, polynomial or matrix."""
    s = text.strip()
    if not s:
        raise ParseError("empty expression", text, 0)
    if s.startswith("["):
        return parse_matrix(s, nvars)
    if s.startswith("padic"):
        return parse_padic(s)
    if _looks_quaternion(s):
        return parse_quaternion(s)
    if "t" in s:
        return parse_polynomial(s, nvars)
    if re.search(r"[*^()]", s) or re.search(r"\d\s*[+-]", s):
        f = parse_polynomial(s, nvars or 1)
        if f.degree > 0:
            return f
        return f.constant_term()
    return parse_rational(s)


def parse_matrix(text: str, nvars: int | None = None) -> Matrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad matrix JSON ({exc.msg})", text, exc.pos) from None
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError("a matrix is a nonempty JSON array of arrays", text, 0)
    n = len(data)
    if any(len(r) != n for r in data):
        raise ParseError("matrix must be square", text, 0)
    cells = [[str(x) for x in r] for r in data]
    flat = [c.strip() for r in cells for c in r]
    if any(c.startswith("padic") for c in flat):
        vals = [parse_padic(c) if c.startswith("padic") else None for c in flat]
        first = next(v for v in vals if v is not None)
        N = min(v.N for v in vals if v is not None)
        if any(v is not None and v.p != first.p for v in vals):
            raise ParseError("mixed primes in a p-adic matrix", text, 0)
        ring = padic_field(first.p, N)
        rows = [[parse_scalar(c, ring) for c in r] for r in cells]
        return Matrix(ring, rows)
    if any(_looks_quaternion(c) for c in flat):
        ring = QuaternionRing()
        return Matrix(ring, [[parse_quaternion(c) for c in r] for r in cells])
    if any("t" in c for c in flat):
        k = nvars or max(
            [1] + [int(v) for c in flat for v in re.findall(r"t(\d+)", c)]
        )
        base = rationals()
        ring = PolynomialRing(base, k)
        return Matrix(ring, [[parse_polynomial(c, k) for c in r] for r in cells])
    ring = rationals()
    return Matrix(ring, [[parse_rational(c) for c in r] for r in cells])


def format_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (Padic, Quaternion)):
        return str(v)
    if isinstance(v, Polynomial):
        return format_polynomial(v)
    if isinstance(v, Matrix):
        return format_matrix(v)
    return str(v)
