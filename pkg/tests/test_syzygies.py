"""Jacobian syzygies, Hilbert functions, Tjurina numbers, freeness checks."""

import random
from fractions import Fraction

import pytest

from freecurves.catalog import build
from freecurves.eisenstein import ZERO
from freecurves.linalg import field_nullspace
from freecurves.parsing import parse_curve
from freecurves.polynomials import HomogeneousPoly, monomial_basis
from freecurves.syzygies import (
    FREE,
    NEARLY_FREE,
    NonReducedInputError,
    certify,
    jacobian_algebra_hilbert,
    jacobian_generators,
    mdr,
    syzygy_dim,
    syzygy_witness,
    total_tjurina,
)

E = parse_curve("x^3 + y^3 - x*y*z")
CONIC = parse_curve("x^2 + y^2 + z^2")


def koszul_syzygies(f):
    fx, fy, fz = f.gradient()
    zero = HomogeneousPoly.zero(f.degree - 1)
    return [(fy, -fx, zero), (fz, zero, -fx), (zero, fz, -fy)]


def is_syzygy(f, triple):
    fx, fy, fz = f.gradient()
    a, b, c = triple
    return (a * fx + b * fy + c * fz).is_zero


def test_jacobian_generators_examples():
    fx, fy, fz = jacobian_generators(E)
    assert fx == parse_curve("3*x^2 - y*z")
    assert fy == parse_curve("3*y^2 - x*z")
    assert fz == parse_curve("-x*y")
    gens = jacobian_generators(parse_curve("x^2"))
    assert gens[0] == parse_curve("2*x") and gens[1].is_zero and gens[2].is_zero
    assert jacobian_generators(parse_curve("x*y*z")) == (
        parse_curve("y*z"),
        parse_curve("x*z"),
        parse_curve("x*y"),
    )


def test_syzygy_dim_conic_oracle():
    # independent oracle: the three Koszul relations are genuine syzygies and
    # linearly independent, so they span a 3-dimensional space in degree 1
    assert syzygy_dim(CONIC, 0) == 0
    for triple in koszul_syzygies(CONIC):
        assert is_syzygy(CONIC, triple)
    assert syzygy_dim(CONIC, 1) == 3


def test_syzygy_dim_brute_force_cross_check():
    # Fraction-based nullspace of the same linear system, built independently
    k = 1
    fx, fy, fz = CONIC.gradient()
    target = monomial_basis(k + CONIC.degree - 1)
    idx = {m: i for i, m in enumerate(target)}
    cols = []
    for p in (fx, fy, fz):
        for mono in monomial_basis(k):
            col = [ZERO] * len(target)
            for t, c in p.terms.items():
                col[idx[(mono[0] + t[0], mono[1] + t[1], mono[2] + t[2])]] = c
            cols.append(col)
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
    from freecurves.eisenstein import ONE

    assert len(field_nullspace(rows, len(cols), ONE)) == 3


def test_mdr_examples():
    assert mdr(CONIC) == 1
    assert mdr(E) == 2
    f11 = build("F(1,1)").product
    assert syzygy_dim(f11, 1) == 0
    assert mdr(f11) == 2


def test_witness_syzygy_is_exact():
    for f in (CONIC, E):
        r = mdr(f)
        witness = syzygy_witness(f, r)
        assert witness is not None
        assert is_syzygy(f, witness)
        assert all(p.is_zero or p.degree == r for p in witness)
    assert syzygy_witness(E, 1) is None


def test_hilbert_function_examples():
    assert jacobian_algebra_hilbert(CONIC, 4) == 0
    assert jacobian_algebra_hilbert(E, 3) == 1
    assert jacobian_algebra_hilbert(E, 0) == 1
    assert jacobian_algebra_hilbert(CONIC, 0) == 1


def test_total_tjurina_examples():
    assert total_tjurina(E) == 1
    assert total_tjurina(CONIC) == 0
    assert total_tjurina(parse_curve("x^3 + y^3 + z^3")) == 0


def test_total_tjurina_rejects_non_reduced():
    with pytest.raises(NonReducedInputError):
        total_tjurina(parse_curve("x^2 * y"))


def test_certify_f11():
    cert = certify(build("F(1,1)").product)
    assert cert.status == FREE
    assert (cert.mdr, cert.tjurina, cert.exponents) == (2, 19, (2, 3))
    # balanced-count identity r^2 - r(d-1) + (d-1)^2 = tau
    d, r = cert.degree, cert.mdr
    assert r * r - r * (d - 1) + (d - 1) ** 2 == cert.tjurina
    # exponent identities for a free certificate
    d1, d2 = cert.exponents
    assert d1 + d2 == d - 1
    assert d1 * d2 == (d - 1) ** 2 - cert.tjurina


def test_certify_nearly_free():
    cert = certify(build("nearly_free_1").product)
    assert cert.status == NEARLY_FREE
    assert cert.tjurina == 36
    d, r = cert.degree, cert.mdr
    assert cert.tjurina == (d - 1) ** 2 - r * (d - 1 - r) - 1


def test_koszul_lower_bound():
    for f in (CONIC, E, build("F(1,1)").product):
        assert syzygy_dim(f, f.degree - 1) >= 3


def test_invariance_under_coordinate_change():
    rng = random.Random(314)
    f = build("F(1,1)").product
    base_tau = total_tjurina(f)
    base_mdr = mdr(f)
    for _ in range(2):
        m = None
        while m is None:
            cand = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            det = (
                cand[0][0] * (cand[1][1] * cand[2][2] - cand[1][2] * cand[2][1])
                - cand[0][1] * (cand[1][0] * cand[2][2] - cand[1][2] * cand[2][0])
                + cand[0][2] * (cand[1][0] * cand[2][1] - cand[1][1] * cand[2][0])
            )
            if det:
                m = cand
        g = f.substitute_linear(m)
        assert total_tjurina(g) == base_tau
        assert mdr(g) == base_mdr


def test_certificate_probe_degrees():
    cert = certify(E)
    assert cert.probe_degrees == (3, 4, 5)
    assert cert.as_dict()["probe_degrees"] == [3, 4, 5]
