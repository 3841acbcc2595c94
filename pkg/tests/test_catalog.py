"""Curated data integrity, arrangement builders, osculating conics."""

from fractions import Fraction

import pytest

from freecurves.catalog import (
    Arrangement,
    CatalogError,
    all_free_arrangement_names,
    bezout_budgets,
    build,
    component,
    conic_conic_points,
    curated_data,
    is_sextactic,
    line_conic_points,
    line_line_point,
    osculating_conic,
    point,
    verify_catalog,
)
from freecurves.eisenstein import QuadExtNumber
from freecurves.localsing import expand_branches, branch_mult
from freecurves.parsing import parse_curve, parse_point
from freecurves.polynomials import proportional

E = component("E").poly


def test_curated_constants():
    assert point("P1") == parse_point("1 : 1 : 2")
    assert point("Q1") == parse_point("1 : -1 : 0")
    assert point("node") == parse_point("0 : 0 : 1")
    assert component("L1").poly == parse_curve("3*x + 3*y + z")
    assert component("C1").poly == parse_curve(
        "21*x^2 + 21*y^2 - 22*x*y - 6*x*z - 6*y*z + z^2"
    )
    data = curated_data()
    assert {"E", "C1", "C2", "C3", "L1", "L2", "L3"} <= set(data)


def test_incidences_hold_exactly():
    for i in (1, 2, 3):
        assert not E.evaluate(point(f"P{i}"))
        assert not component(f"C{i}").poly.evaluate(point(f"P{i}"))
        assert not E.evaluate(point(f"Q{i}"))
        assert not component(f"L{i}").poly.evaluate(point(f"Q{i}"))


def test_verify_catalog_all_checks_pass():
    report = verify_catalog()
    assert report.ok, [c for c in report.checks if not c.ok]
    names = {c.name for c in report.checks}
    assert "E/Hessian intersection budget is 9" in names


def test_line_line_point():
    p = line_line_point(component("L1").poly, component("L2").poly)
    assert not component("L1").poly.evaluate(p)
    assert not component("L2").poly.evaluate(p)


def test_line_conic_points_rational_case():
    chord = component("chord").poly
    pts = line_conic_points(chord, component("C1").poly)
    assert point("P1") in pts
    other = next(p for p in pts if p != point("P1"))
    assert other == parse_point("1 : 1 : 10")


def test_line_conic_points_extension_case():
    pts = line_conic_points(component("L1").poly, component("C1").poly)
    assert len(pts) == 2
    assert pts[0] != pts[1]
    for p in pts:
        assert any(isinstance(c, QuadExtNumber) for c in p.coords)
        assert not component("L1").poly.evaluate(p)
        assert not component("C1").poly.evaluate(p)


def test_line_conic_tangent_rejected():
    tangent_at_p1 = osculating_conic(E, point("P1"))
    # a line meeting C1 twice at the same point does not exist; force the
    # tangent-line case instead
    from freecurves.localsing import tangent_line

    lt = tangent_line(component("C1").poly, point("P1"))
    with pytest.raises(CatalogError):
        line_conic_points(lt, component("C1").poly)


def test_conic_conic_points():
    pts = conic_conic_points("C1", "C2")
    assert len(pts) == 4
    c1, c2 = component("C1").poly, component("C2").poly
    for p in pts:
        assert not c1.evaluate(p)
        assert not c2.evaluate(p)
    assert len(set(pts)) == 4


def test_build_f_and_c_shapes():
    arr = build("F(1,1)")
    assert isinstance(arr, Arrangement)
    assert arr.product.degree == 6
    assert len(arr.singular_points) == 5
    arr = build("C(1,1,2)")
    assert arr.product.degree == 7
    assert len(arr.singular_points) == 9
    assert build("Example_3_2").name == "node_chord"
    assert build("Example_3_3").name == "flex_triangle"
    assert len(build("node_chord").singular_points) == 3
    assert len(build("flex_triangle").singular_points) == 7
    assert len(build("NearlyFree_1").singular_points) == 14
    assert len(build("NearlyFree_2").singular_points) == 12


def test_build_rejects_bad_names():
    with pytest.raises(CatalogError):
        build("C(1,2,2)")
    with pytest.raises(CatalogError):
        build("F(0,1)")
    with pytest.raises(CatalogError):
        build("unknown")


def test_product_degree_is_component_sum():
    for name in ("F(2,3)", "C(3,1,2)", "nearly_free_2"):
        arr = build(name)
        assert arr.product.degree == sum(c.poly.degree for c in arr.components)


def test_bezout_budgets_exhausted_on_sample():
    for name in ("F(1,1)", "node_chord"):
        arr = build(name)
        for la, lb, expected, got in bezout_budgets(arr):
            assert expected == got, (name, la, lb)


def test_osculating_conics_reproduce_curated():
    for i in (1, 2, 3):
        conic = osculating_conic(E, point(f"P{i}"))
        assert proportional(conic, component(f"C{i}").poly)
        assert is_sextactic(E, point(f"P{i}"))


def test_osculating_conic_generic_point_contact_five():
    rho = Fraction(3, 2)
    p = parse_point(f"1 : {rho} : {(1 + rho**3) / rho}")
    assert not E.evaluate(p)
    conic = osculating_conic(E, p)
    branch = expand_branches(E, p, 16)[0]
    assert branch_mult(conic, branch) == 5
    assert not is_sextactic(E, p)


def test_osculating_conic_rejects_flexes():
    with pytest.raises(ValueError):
        osculating_conic(E, point("Q1"))


def test_all_free_arrangement_names():
    names = all_free_arrangement_names()
    assert len(names) == 18
    assert "F(2,3)" in names and "C(3,2,3)" in names
    assert "C(1,2,2)" not in names
