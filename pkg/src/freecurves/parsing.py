"""Text grammar for scalars, curves, and points.

Expressions use variables x, y, z, the symbol w for the cube root of unity,
integer and p/q fraction constants, and the operators + - * ^ with
parentheses (`**` is accepted as a synonym for `^`).  Multiplication is
always explicit.  w-powers are normalized on input via w^2 = -1 - w; curve
input must be homogeneous and the parser lists offending monomials when it
is not.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .eisenstein import EisensteinNumber, omega_power
from .polynomials import HomogeneousPoly, Monomial, ProjectivePoint

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[xyzw])|(?P<op>\*\*|[-+*/^()])|(?P<bad>\S))"
)


class ParseError(ValueError):
    """Malformed expression text."""


class HomogeneityError(ParseError):
    """Curve input mixing degrees; carries the offending monomials."""

    def __init__(self, degrees: dict[int, list[str]]) -> None:
        self.degrees = degrees
        top = max(degrees)
        offending = [m for d, ms in degrees.items() if d != top for m in ms]
        super().__init__(
            "non-homogeneous input: monomials "
            + ", ".join(sorted(offending))
            + f" do not have degree {top}"
        )


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r} at offset {m.start('bad')}")
        tok = m.group("number") or m.group("name") or m.group("op")
        tokens.append("^" if tok == "**" else tok)
        pos = m.end()
    return tokens


# Raw terms are exponent 4-tuples (ex, ey, ez, ew) with Fraction coefficients;
# the w exponent is reduced only after full expansion.
_RawPoly = dict[tuple[int, int, int, int], Fraction]

_VAR_SLOT = {"x": 0, "y": 1, "z": 2, "w": 3}


def _raw_const(c: Fraction) -> _RawPoly:
    return {(0, 0, 0, 0): c} if c else {}


def _raw_add(a: _RawPoly, b: _RawPoly, sign: int = 1) -> _RawPoly:
    out = dict(a)
    for k, v in b.items():
        acc = out.get(k, Fraction(0)) + sign * v
        if acc:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


def _raw_mul(a: _RawPoly, b: _RawPoly) -> _RawPoly:
    out: _RawPoly = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
            acc = out.get(k, Fraction(0)) + va * vb
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
    return out


class _Parser:
    def __init__(self, tokens: list[str]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> _RawPoly:
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input near {self.peek()!r}")
        return value

    def expr(self) -> _RawPoly:
        sign = 1
        tok = self.peek()
        if tok in ("+", "-"):
            self.take()
            sign = -1 if tok == "-" else 1
        value = self.term()
        if sign < 0:
            value = _raw_add({}, value, -1)
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = _raw_add(value, rhs, -1 if op == "-" else 1)
        return value

    def term(self) -> _RawPoly:
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = _raw_mul(value, self.factor())
        return value

    def factor(self) -> _RawPoly:
        tok = self.peek()
        if tok == "-":
            self.take()
            return _raw_add({}, self.factor(), -1)
        base = self.base()
        if self.peek() == "^":
            self.take()
            exp_tok = self.take()
            if not exp_tok.isdigit():
                raise ParseError(f"exponent must be a nonnegative integer, got {exp_tok!r}")
            e = int(exp_tok)
            out = _raw_const(Fraction(1))
            for _ in range(e):
                out = _raw_mul(out, base)
            return out
        return base

    def base(self) -> _RawPoly:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return inner
        if tok in _VAR_SLOT:
            key = [0, 0, 0, 0]
            key[_VAR_SLOT[tok]] = 1
            return {tuple(key): Fraction(1)}
        if tok.isdigit():
            value = Fraction(int(tok))
            if self.peek() == "/":
                self.take()
                den_tok = self.take()
                if not den_tok.isdigit() or int(den_tok) == 0:
                    raise ParseError(f"fraction denominator must be a positive integer, got {den_tok!r}")
                value /= int(den_tok)
            return _raw_const(value)
        raise ParseError(f"unexpected token {tok!r}")


def _reduce_omega(raw: _RawPoly) -> dict[Monomial, EisensteinNumber]:
    out: dict[Monomial, EisensteinNumber] = {}
    for (ex, ey, ez, ew), c in raw.items():
        mono = (ex, ey, ez)
        acc = out.get(mono, EisensteinNumber(0)) + omega_power(ew) * c
        if acc:
            out[mono] = acc
        else:
            out.pop(mono, None)
    return out


def _format_monomial(mono: Monomial) -> str:
    if mono == (0, 0, 0):
        return "1"
    return "*".join(
        (name if e == 1 else f"{name}^{e}")
        for name, e in zip(("x", "y", "z"), mono)
        if e
    )


def parse_scalar(text: str) -> EisensteinNumber:
    """Parse a constant over Q(w), e.g. `3*w^2 - 1/2`."""
    reduced = _reduce_omega(_Parser(_tokenize(text)).parse())
    for mono in reduced:
        if mono != (0, 0, 0):
            raise ParseError(f"variables not allowed in a scalar: {_format_monomial(mono)}")
    return reduced.get((0, 0, 0), EisensteinNumber(0))


def parse_curve(text: str) -> HomogeneousPoly:
    """Parse a homogeneous polynomial in x, y, z over Q(w).

    Lines starting with `#` are comments; the remaining text is one
    expression.  Non-homogeneous input raises HomogeneityError naming the
    offending monomials.
    """
    source = " ".join(
        line for line in text.splitlines() if not line.lstrip().startswith("#")
    )
    reduced = _reduce_omega(_Parser(_tokenize(source)).parse())
    if not reduced:
        return HomogeneousPoly.zero(0)
    by_degree: dict[int, list[str]] = {}
    for mono in reduced:
        by_degree.setdefault(sum(mono), []).append(_format_monomial(mono))
    if len(by_degree) > 1:
        raise HomogeneityError(by_degree)
    degree = next(iter(by_degree))
    return HomogeneousPoly(degree, reduced)


def parse_point(text: str) -> ProjectivePoint:
    """Parse `a : b : c` with scalar components over Q(w)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError("a projective point needs exactly three ':'-separated coordinates")
    return ProjectivePoint(*(parse_scalar(p) for p in parts))
