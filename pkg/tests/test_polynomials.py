"""Homogeneous polynomial algebra, parsing, and projective points."""

import random
from fractions import Fraction
from math import comb

import pytest

from freecurves.eisenstein import EisensteinNumber, OMEGA, ONE
from freecurves.parsing import HomogeneityError, ParseError, parse_curve, parse_point
from freecurves.polynomials import (
    DegreeError,
    HomogeneousPoly,
    ProjectivePoint,
    euler_combination,
    hessian_det,
    monomial_basis,
    proportional,
)


def rand_poly(rng: random.Random, degree: int, density: float = 0.6) -> HomogeneousPoly:
    terms = {}
    for mono in monomial_basis(degree):
        if rng.random() < density:
            c = EisensteinNumber(rng.randint(-9, 9), rng.randint(-3, 3))
            if c:
                terms[mono] = c
    if not terms:
        terms[monomial_basis(degree)[0]] = ONE
    return HomogeneousPoly(degree, terms)


def rand_matrix(rng: random.Random):
    while True:
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det:
            return m


def test_monomial_basis_order_and_length():
    assert monomial_basis(0) == ((0, 0, 0),)
    assert monomial_basis(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(monomial_basis(5)) == 21
    for d in range(8):
        assert len(monomial_basis(d)) == comb(d + 2, 2)
        # strictly decreasing in lexicographic order
        basis = monomial_basis(d)
        assert all(basis[i] > basis[i + 1] for i in range(len(basis) - 1))


def test_arithmetic_examples():
    f = parse_curve("x^3 + y^3 - x*y*z")
    doubled = f.scale(2)
    assert doubled == parse_curve("2*x^3 + 2*y^3 - 2*x*y*z")
    x, y = HomogeneousPoly.variable(0), HomogeneousPoly.variable(1)
    assert x * y == parse_curve("x*y")
    s = parse_curve("x + y") + parse_curve("-x - y")
    assert s.is_zero


def test_add_degree_mismatch():
    with pytest.raises(DegreeError):
        parse_curve("x") + parse_curve("x^2")
    # adding a zero polynomial of any recorded degree is allowed
    assert (HomogeneousPoly.zero(5) + parse_curve("x")) == parse_curve("x")


def test_partials():
    f = parse_curve("x^3 + y^3 - x*y*z")
    assert f.partial("x") == parse_curve("3*x^2 - y*z")
    assert f.partial("z") == parse_curve("-x*y")
    assert parse_curve("x^2").partial("y").is_zero


def test_hessian_fermat():
    f = parse_curve("x^3 + y^3 + z^3")
    assert hessian_det(f) == parse_curve("216*x*y*z")
    with pytest.raises(DegreeError):
        hessian_det(parse_curve("x"))


def test_hessian_vanishing_at_flex_and_node():
    f = parse_curve("x^3 + y^3 - x*y*z")
    h = hessian_det(f)
    assert h.degree == 3
    assert not h.evaluate(parse_point("1 : -1 : 0"))
    assert not h.evaluate(parse_point("0 : 0 : 1"))


def test_evaluate_examples():
    E = parse_curve("x^3 + y^3 - x*y*z")
    assert not E.evaluate(parse_point("1 : 1 : 2"))
    L1 = parse_curve("3*x + 3*y + z")
    assert not L1.evaluate(parse_point("1 : -1 : 0"))
    assert not HomogeneousPoly.variable(0).evaluate(parse_point("0 : 0 : 1"))


def test_evaluate_homogeneity():
    rng = random.Random(5)
    for _ in range(50):
        f = rand_poly(rng, rng.randint(1, 5))
        coords = [EisensteinNumber(rng.randint(-5, 5), rng.randint(-2, 2)) for _ in range(3)]
        lam = EisensteinNumber(rng.randint(1, 5), rng.randint(0, 2))
        scaled = [lam * c for c in coords]
        assert f.evaluate(scaled) == lam ** f.degree * f.evaluate(coords)


def test_euler_relation_random():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.randint(1, 9)
        f = rand_poly(rng, d, density=0.4)
        assert euler_combination(f) == f.scale(d)


def test_mul_commutative_associative():
    rng = random.Random(17)
    for _ in range(25):
        f, g, h = (rand_poly(rng, rng.randint(1, 3), 0.5) for _ in range(3))
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)


def test_substitute_examples():
    x = parse_curve("x")
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert x.substitute_linear(ident) == x
    f = parse_curve("x^2 + y^2 + z^2")
    assert f.substitute_linear([[1, 0, 0], [0, 1, 0], [0, 0, 2]]) == parse_curve(
        "x^2 + y^2 + 4*z^2"
    )
    with pytest.raises(ValueError):
        f.substitute_linear([[1, 0, 0], [2, 0, 0], [0, 0, 1]])


def test_hessian_covariance_under_substitution():
    rng = random.Random(23)
    for _ in range(10):
        f = rand_poly(rng, 3, 0.5)
        m = rand_matrix(rng)
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        lhs = hessian_det(f.substitute_linear(m))
        rhs = hessian_det(f).substitute_linear(m).scale(Fraction(det) ** 2)
        assert lhs == rhs


def test_parser_rejects_non_homogeneous_with_monomials():
    with pytest.raises(HomogeneityError) as err:
        parse_curve("x^2 + y*z^2 + 3")
    message = str(err.value)
    assert "1" in message and "x^2" in message


def test_parser_errors():
    with pytest.raises(ParseError):
        parse_curve("x +")
    with pytest.raises(ParseError):
        parse_curve("q + x")
    with pytest.raises(ParseError):
        parse_point("1 : 2")


def test_parser_accepts_comments_and_double_star():
    f = parse_curve("# label\nx**2 + y^2 \n # more\n+ z^2")
    assert f == parse_curve("x^2 + y^2 + z^2")


def test_projective_point_canonicalization():
    p = ProjectivePoint(EisensteinNumber(2), EisensteinNumber(2), EisensteinNumber(4))
    q = parse_point("1 : 1 : 2")
    assert p == q and hash(p) == hash(q)
    assert str(q) == "(1/2 : 1/2 : 1)"
    assert parse_point("1 : -1 : 0") == parse_point("-1 : 1 : 0")
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0, 0)


def test_string_rendering_is_deterministic():
    f = parse_curve("z^2 - 22*x*y + 21*y^2 + 21*x^2 - 6*y*z - 6*x*z")
    assert str(f) == "21*x^2 - 22*x*y - 6*x*z + 21*y^2 - 6*y*z + z^2"
    assert proportional(f, f.scale(OMEGA))
