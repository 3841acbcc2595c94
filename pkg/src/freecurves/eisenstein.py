"""Exact arithmetic in Q and in the quadratic cyclotomic field Q(w), w^2 + w + 1 = 0.

Every value is immutable and arithmetic is exact; the coefficient field for all
curve data in this package is Q(w) with w a primitive cube root of unity.
`Rational` is the stdlib Fraction, which already keeps gcd-reduced canonical
form with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Fraction

_Scalar = Union[int, Fraction, "EisensteinNumber"]


class EisensteinNumber:
    """Element a + b*w of Q(w), reduced modulo w^2 = -1 - w.

    No representation ever stores a w^2 term, so equality of values is
    equality of (re, wc) pairs. Instances are immutable and hashable.
    """

    __slots__ = ("re", "wc")

    def __init__(self, re: int | Fraction = 0, wc: int | Fraction = 0) -> None:
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "wc", Fraction(wc))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("EisensteinNumber is immutable")

    @staticmethod
    def _coerce(value: object) -> "EisensteinNumber | None":
        if isinstance(value, EisensteinNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return EisensteinNumber(value)
        return None

    # -- ring/field structure ------------------------------------------------

    def __add__(self, other: _Scalar) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinNumber(self.re + o.re, self.wc + o.wc)

    __radd__ = __add__

    def __sub__(self, other: _Scalar) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinNumber(self.re - o.re, self.wc - o.wc)

    def __rsub__(self, other: _Scalar) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "EisensteinNumber":
        return EisensteinNumber(-self.re, -self.wc)

    def __mul__(self, other: _Scalar) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.wc, o.re, o.wc
        bd = b * d
        return EisensteinNumber(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> "EisensteinNumber":
        """Galois conjugate: w -> w^2 = -1 - w."""
        return EisensteinNumber(self.re - self.wc, -self.wc)

    def norm(self) -> Fraction:
        """Field norm a*conj(a) = a^2 - a*b + b^2; zero iff the element is zero."""
        return self.re * self.re - self.re * self.wc + self.wc * self.wc

    def inverse(self) -> "EisensteinNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return EisensteinNumber(c.re / n, c.wc / n)

    def __truediv__(self, other: _Scalar) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: _Scalar) -> "EisensteinNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "EisensteinNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = EisensteinNumber(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure queries ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.wc)

    @property
    def is_rational(self) -> bool:
        return self.wc == 0

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.wc == o.wc

    def __hash__(self) -> int:
        if self.wc == 0:
            return hash(self.re)
        return hash((self.re, self.wc))

    def __repr__(self) -> str:
        return f"EisensteinNumber({self.re!r}, {self.wc!r})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = EisensteinNumber(0)
ONE = EisensteinNumber(1)
OMEGA = EisensteinNumber(0, 1)


def omega_power(k: int) -> EisensteinNumber:
    """w^k reduced by w^3 = 1."""
    k %= 3
    if k == 0:
        return ONE
    if k == 1:
        return OMEGA
    return EisensteinNumber(-1, -1)


def format_scalar(a: EisensteinNumber | Fraction | int) -> str:
    """Canonical text form: `p/q`, `w`, `-2*w`, `1/2 - 3*w`.  Parsable back."""
    if isinstance(a, (int, Fraction)):
        return str(a)
    if a.wc == 0:
        return str(a.re)
    if a.wc == 1:
        wpart = "w"
    elif a.wc == -1:
        wpart = "-w"
    else:
        wpart = f"{a.wc}*w"
    if a.re == 0:
        return wpart
    if a.wc > 0:
        return f"{a.re} + {wpart}"
    mag = -a.wc
    wmag = "w" if mag == 1 else f"{mag}*w"
    return f"{a.re} - {wmag}"


# -- exact square roots ------------------------------------------------------


def rational_sqrt(q: Fraction | int) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def eisenstein_sqrt(a: EisensteinNumber) -> EisensteinNumber | None:
    """A square root of `a` inside Q(w) if one exists, else None.

    Works through Q(w) = Q(sqrt(-3)): writing a = u + v*sqrt(-3) with
    u = re - wc/2, v = wc/2, a square root p + q*sqrt(-3) needs
    p^2 - 3 q^2 = u and 2 p q = v, and sqrt(-3) = 1 + 2w.
    """
    if not a:
        return ZERO
    u = a.re - a.wc / 2
    v = a.wc / 2
    if v == 0:
        r = rational_sqrt(u)
        if r is not None:
            return EisensteinNumber(r)
        q = rational_sqrt(-u / 3)
        if q is not None:
            return EisensteinNumber(q, 2 * q)
        return None
    n = rational_sqrt(u * u + 3 * v * v)
    if n is None:
        return None
    for half in ((u + n) / 2, (u - n) / 2):
        p = rational_sqrt(half)
        if p is not None and p != 0:
            q = v / (2 * p)
            cand = EisensteinNumber(p + q, 2 * q)
            if cand * cand == a:
                return cand
    return None


# -- one quadratic extension level Q(w)[s], s^2 = disc -----------------------


class QuadExtNumber:
    """Element a + b*s of Q(w)[s] with s^2 = disc, disc a non-square in Q(w).

    Used for singular points whose coordinates need one square root that
    Q(w) does not contain (line-conic crossings).  Mixed arithmetic with
    EisensteinNumber, Fraction and int coerces into the extension.
    """

    __slots__ = ("a", "b", "disc")

    def __init__(self, a: _Scalar, b: _Scalar, disc: EisensteinNumber) -> None:
        ea = EisensteinNumber._coerce(a)
        eb = EisensteinNumber._coerce(b)
        if ea is None or eb is None:
            raise TypeError("QuadExtNumber components must be scalars over Q(w)")
        object.__setattr__(self, "a", ea)
        object.__setattr__(self, "b", eb)
        object.__setattr__(self, "disc", disc)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadExtNumber is immutable")

    @classmethod
    def generator(cls, disc: EisensteinNumber) -> "QuadExtNumber":
        return cls(ZERO, ONE, disc)

    def _coerce(self, value: object) -> "QuadExtNumber | None":
        if isinstance(value, QuadExtNumber):
            if value.disc != self.disc:
                raise ValueError("mixing incompatible quadratic extensions")
            return value
        base = EisensteinNumber._coerce(value)
        if base is None:
            return None
        return QuadExtNumber(base, ZERO, self.disc)

    def __add__(self, other: object) -> "QuadExtNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtNumber(self.a + o.a, self.b + o.b, self.disc)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadExtNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtNumber(self.a - o.a, self.b - o.b, self.disc)

    def __rsub__(self, other: object) -> "QuadExtNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QuadExtNumber":
        return QuadExtNumber(-self.a, -self.b, self.disc)

    def __mul__(self, other: object) -> "QuadExtNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtNumber(
            self.a * o.a + self.b * o.b * self.disc,
            self.a * o.b + self.b * o.a,
            self.disc,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtNumber":
        return QuadExtNumber(self.a, -self.b, self.disc)

    def norm_to_base(self) -> EisensteinNumber:
        return self.a * self.a - self.b * self.b * self.disc

    def inverse(self) -> "QuadExtNumber":
        n = self.norm_to_base()
        if not n:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        ninv = n.inverse()
        return QuadExtNumber(self.a * ninv, -self.b * ninv, self.disc)

    def __truediv__(self, other: object) -> "QuadExtNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadExtNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "QuadExtNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExtNumber(ONE, ZERO, self.disc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExtNumber):
            return self.disc == other.disc and self.a == other.a and self.b == other.b
        base = EisensteinNumber._coerce(other)
        if base is None:
            return NotImplemented
        return self.b == ZERO and self.a == base

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.disc))

    def __repr__(self) -> str:
        return f"QuadExtNumber({self.a!r}, {self.b!r}, disc={self.disc!r})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        return f"({self.a}) + ({self.b})*sqrt({self.disc})"


def field_sqrt(a: object) -> object | None:
    """Square root of a scalar inside its own field, or None.

    Only Q(w) supports square-root extraction here; the quadratic extension
    level never needs one for the in-scope singularities.
    """
    if isinstance(a, EisensteinNumber):
        return eisenstein_sqrt(a)
    if isinstance(a, (int, Fraction)):
        return eisenstein_sqrt(EisensteinNumber(a))
    return None
