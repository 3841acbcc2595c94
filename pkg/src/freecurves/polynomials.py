"""Homogeneous trivariate polynomial algebra over Q(w).

Polynomials are sparse term maps from exponent triples to EisensteinNumber
coefficients.  The monomial order used everywhere a matrix indexes monomials
is graded lexicographic with x > y > z, fixed once in `monomial_basis`.
All operations are pure; values are treated as immutable.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .eisenstein import EisensteinNumber, ZERO, ONE

Monomial = tuple[int, int, int]

VARIABLE_NAMES = ("x", "y", "z")


class DegreeError(ValueError):
    """Operands with incompatible degrees (or a non-homogeneous term map)."""


@lru_cache(maxsize=None)
def monomial_basis(degree: int) -> tuple[Monomial, ...]:
    """All degree-`degree` monomials in graded-lex order (x > y > z).

    Length is C(degree+2, 2).  This ordering is the row/column indexing
    contract for every exact matrix built downstream.
    """
    if degree < 0:
        return ()
    basis = []
    for ex in range(degree, -1, -1):
        for ey in range(degree - ex, -1, -1):
            basis.append((ex, ey, degree - ex - ey))
    return tuple(basis)


def _coerce_coeff(c: object) -> EisensteinNumber:
    e = EisensteinNumber._coerce(c)
    if e is None:
        raise TypeError(f"cannot use {type(c).__name__} as a Q(w) coefficient")
    return e


class HomogeneousPoly:
    """Sparse homogeneous polynomial in x, y, z over Q(w).

    The zero polynomial keeps its degree metadata with an empty term map.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Monomial, object] | None = None) -> None:
        if degree < 0:
            raise DegreeError("degree must be nonnegative")
        clean: dict[Monomial, EisensteinNumber] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != 3 or any(e < 0 for e in mono):
                    raise DegreeError(f"bad exponent triple {mono!r}")
                if sum(mono) != degree:
                    raise DegreeError(f"monomial {mono!r} does not have degree {degree}")
                ce = _coerce_coeff(c)
                if ce:
                    clean[tuple(mono)] = ce
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("HomogeneousPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, degree: int = 0) -> "HomogeneousPoly":
        return cls(degree, {})

    @classmethod
    def constant(cls, c: object) -> "HomogeneousPoly":
        return cls(0, {(0, 0, 0): c})

    @classmethod
    def variable(cls, index: int) -> "HomogeneousPoly":
        mono = [0, 0, 0]
        mono[index] = 1
        return cls(1, {tuple(mono): ONE})

    # -- basic structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> EisensteinNumber:
        return self.terms.get(mono, ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic -----------------------------------------------------------

    def _add_like(self, other: "HomogeneousPoly", sign: int) -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            other = HomogeneousPoly(0, {(0, 0, 0): other})
        if self.is_zero:
            deg = other.degree
        elif other.is_zero:
            deg = self.degree
        elif self.degree != other.degree:
            raise DegreeError(
                f"cannot combine degrees {self.degree} and {other.degree}"
            )
        else:
            deg = self.degree
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            acc = terms.get(mono, ZERO) + (c if sign > 0 else -c)
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        return HomogeneousPoly(deg, terms)

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self._add_like(other, +1)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self._add_like(other, -1)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, {m: -c for m, c in self.terms.items()})

    def scale(self, c: object) -> "HomogeneousPoly":
        ce = _coerce_coeff(c)
        if not ce:
            return HomogeneousPoly.zero(self.degree)
        return HomogeneousPoly(self.degree, {m: ce * v for m, v in self.terms.items()})

    def __mul__(self, other: object) -> "HomogeneousPoly":
        if isinstance(other, HomogeneousPoly):
            if self.is_zero or other.is_zero:
                return HomogeneousPoly.zero(self.degree + other.degree)
            acc: dict[Monomial, EisensteinNumber] = {}
            for (a1, a2, a3), c1 in self.terms.items():
                for (b1, b2, b3), c2 in other.terms.items():
                    mono = (a1 + b1, a2 + b2, a3 + b3)
                    v = acc.get(mono, ZERO) + c1 * c2
                    if v:
                        acc[mono] = v
                    else:
                        acc.pop(mono, None)
            return HomogeneousPoly(self.degree + other.degree, acc)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomogeneousPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = HomogeneousPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus -------------------------------------------------------------

    def partial(self, var: int | str) -> "HomogeneousPoly":
        """Exact formal partial derivative; degree drops by one."""
        idx = VARIABLE_NAMES.index(var) if isinstance(var, str) else var
        terms: dict[Monomial, EisensteinNumber] = {}
        for mono, c in self.terms.items():
            e = mono[idx]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[idx] = e - 1
            terms[tuple(lowered)] = c * e
        return HomogeneousPoly(max(self.degree - 1, 0), terms)

    def gradient(self) -> tuple["HomogeneousPoly", "HomogeneousPoly", "HomogeneousPoly"]:
        return (self.partial(0), self.partial(1), self.partial(2))

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, point: object) -> object:
        """Value at a point (ProjectivePoint or coordinate triple).

        The value depends on the chosen representative; only zero/nonzero is
        projectively meaningful.  Coordinates may live in Q(w) or one of its
        quadratic extensions; coefficients coerce into the point's field.
        """
        coords = point.coords if isinstance(point, ProjectivePoint) else tuple(point)
        if len(coords) != 3:
            raise ValueError("need exactly three coordinates")
        maxes = [0, 0, 0]
        for mono in self.terms:
            for i in range(3):
                maxes[i] = max(maxes[i], mono[i])
        powers: list[list[object]] = []
        for i in range(3):
            row: list[object] = [1]
            for _ in range(maxes[i]):
                row.append(row[-1] * coords[i])
            powers.append(row)
        total: object = None
        for (e1, e2, e3), c in self.terms.items():
            term = c * powers[0][e1]
            term = term * powers[1][e2]
            term = term * powers[2][e3]
            total = term if total is None else total + term
        if total is None:
            zero = coords[0] * 0
            return zero if not isinstance(zero, int) else ZERO
        return total

    def dehomogenize(self, chart: int) -> dict[tuple[int, int], EisensteinNumber]:
        """Affine model with coordinate `chart` set to 1.

        Keys are exponent pairs of the remaining variables in (x, y, z) order.
        """
        others = [i for i in range(3) if i != chart]
        out: dict[tuple[int, int], EisensteinNumber] = {}
        for mono, c in self.terms.items():
            key = (mono[others[0]], mono[others[1]])
            acc = out.get(key, ZERO) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return out

    # -- coordinate change -----------------------------------------------------

    def substitute_linear(self, matrix: Sequence[Sequence[object]]) -> "HomogeneousPoly":
        """Compose with the linear change of coordinates given by `matrix`.

        Returns g with g(p) = f(M p); `matrix` must be invertible over Q(w).
        """
        rows = [[_coerce_coeff(matrix[i][j]) for j in range(3)] for i in range(3)]
        if not _det3(rows):
            raise ValueError("singular substitution matrix")
        forms = [
            HomogeneousPoly(1, {(1, 0, 0): rows[i][0], (0, 1, 0): rows[i][1], (0, 0, 1): rows[i][2]})
            for i in range(3)
        ]
        pow_cache: list[dict[int, HomogeneousPoly]] = [dict() for _ in range(3)]

        def form_power(i: int, e: int) -> HomogeneousPoly:
            if e not in pow_cache[i]:
                pow_cache[i][e] = forms[i] ** e
            return pow_cache[i][e]

        total = HomogeneousPoly.zero(self.degree)
        for (e1, e2, e3), c in self.terms.items():
            piece = form_power(0, e1) * form_power(1, e2) * form_power(2, e3)
            total = total + piece.scale(c)
        return total

    # -- rendering ------------------------------------------------------------

    def ordered_terms(self) -> list[tuple[Monomial, EisensteinNumber]]:
        return [(m, self.terms[m]) for m in monomial_basis(self.degree) if m in self.terms]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for mono, c in self.ordered_terms():
            mono_txt = "*".join(
                (name if e == 1 else f"{name}^{e}")
                for name, e in zip(VARIABLE_NAMES, mono)
                if e
            )
            if not mono_txt:
                coeff_txt = str(c) if c.is_rational else f"({c})"
                piece = coeff_txt
            elif c == ONE:
                piece = mono_txt
            elif c == EisensteinNumber(-1):
                piece = f"-{mono_txt}"
            elif c.is_rational:
                piece = f"{c.re}*{mono_txt}"
            else:
                piece = f"({c})*{mono_txt}"
            parts.append(piece)
        text = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                text += " - " + piece[1:]
            else:
                text += " + " + piece
        return text

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self.degree}, {self})"


def _det3(rows: Sequence[Sequence[EisensteinNumber]]) -> EisensteinNumber:
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def hessian_det(f: HomogeneousPoly) -> HomogeneousPoly:
    """Determinant of the symmetric matrix of second partials; degree 3(d-2)."""
    if f.degree < 2:
        raise DegreeError("Hessian needs degree >= 2")
    fx, fy, fz = f.gradient()
    rows = [
        [fx.partial(0), fx.partial(1), fx.partial(2)],
        [fx.partial(1), fy.partial(1), fy.partial(2)],
        [fx.partial(2), fy.partial(2), fz.partial(2)],
    ]
    a, b, c = rows[0]
    d, e, g = rows[1]
    h, i, j = rows[2]
    return a * (e * j - g * i) - b * (d * j - g * h) + c * (d * i - e * h)


def euler_combination(f: HomogeneousPoly) -> HomogeneousPoly:
    """x*f_x + y*f_y + z*f_z, which must equal deg(f) * f exactly."""
    x, y, z = (HomogeneousPoly.variable(i) for i in range(3))
    fx, fy, fz = f.gradient()
    return x * fx + y * fy + z * fz


def proportional(f: HomogeneousPoly, g: HomogeneousPoly) -> bool:
    """True when f = c*g for some nonzero scalar c (both nonzero)."""
    if f.is_zero or g.is_zero:
        return f.is_zero and g.is_zero
    if f.degree != g.degree or len(f.terms) != len(g.terms):
        return False
    mono = next(iter(f.terms))
    if mono not in g.terms:
        return False
    ratio = f.terms[mono] / g.terms[mono]
    return all(g.terms.get(m, ZERO) * ratio == c for m, c in f.terms.items())


class ProjectivePoint:
    """Point of P^2 with coordinates in Q(w) or a quadratic extension of it.

    Equality is up to a nonzero scalar; the canonical representative scales
    the rightmost nonzero coordinate to 1 and is what hashing and printing
    use.
    """

    __slots__ = ("coords",)

    def __init__(self, c0: object, c1: object, c2: object) -> None:
        coords = []
        for c in (c0, c1, c2):
            e = EisensteinNumber._coerce(c)
            coords.append(e if e is not None else c)
        if not any(bool(c) for c in coords):
            raise ValueError("projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ProjectivePoint is immutable")

    def chart(self) -> int:
        """Index of the rightmost nonzero coordinate."""
        for i in (2, 1, 0):
            if self.coords[i]:
                return i
        raise AssertionError("unreachable: zero point")

    def canonical(self) -> tuple[object, object, object]:
        i = self.chart()
        pivot = self.coords[i]
        return tuple(c / pivot if c else c * 0 for c in self.coords)

    def normalized(self) -> "ProjectivePoint":
        return ProjectivePoint(*self.canonical())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.canonical()) + ")"

    def __repr__(self) -> str:
        return f"ProjectivePoint{self.coords!r}"
