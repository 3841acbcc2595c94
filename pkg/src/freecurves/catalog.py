"""Curated geometric data: the nodal cubic, its inflectional lines and
hyperosculating conics, arrangement builders, and exact verification of all
incidence and contact claims.

The equations and points below are pinned reference data; `verify_catalog`
re-derives each object (tangent lines from gradients, hyperosculating conics
from contact conditions) and cross-checks the recorded coefficients instead
of trusting them.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from functools import lru_cache

from . import series
from .eisenstein import (
    EisensteinNumber,
    ONE,
    ZERO,
    QuadExtNumber,
    eisenstein_sqrt,
)
from .linalg import field_nullspace
from .localsing import (
    DEFAULT_ORDER,
    branch_mult,
    expand_branches,
    inflection_order,
    tangent_line,
)
from .parsing import parse_curve, parse_point
from .polynomials import HomogeneousPoly, ProjectivePoint, proportional
from .syzygies import jacobian_generators

CUBIC = "cubic"
CONIC = "conic"
LINE = "line"


@dataclass(frozen=True)
class CuratedComponent:
    label: str
    poly: HomogeneousPoly
    kind: str


@dataclass(frozen=True)
class Arrangement:
    """A reduced union of curated components with its closed-form singular locus."""

    name: str
    components: tuple[CuratedComponent, ...]
    product: HomogeneousPoly
    singular_points: tuple[ProjectivePoint, ...]

    def labelled(self) -> list[tuple[str, HomogeneousPoly]]:
        return [(c.label, c.poly) for c in self.components]


class CatalogError(ValueError):
    pass


_EQUATIONS = {
    "E": "x^3 + y^3 - x*y*z",
    "C1": "21*x^2 + 21*y^2 - 22*x*y - 6*x*z - 6*y*z + z^2",
    "C2": "21*w*x^2 + 21*w^2*y^2 - 22*x*y - 6*w^2*x*z - 6*w*y*z + z^2",
    "C3": "21*w^2*x^2 + 21*w*y^2 - 22*x*y - 6*w*x*z - 6*w^2*y*z + z^2",
    "L1": "3*x + 3*y + z",
    "L2": "3*x + 3*w^2*y + w*z",
    "L3": "3*x + 3*w*y - (w + 1)*z",
    "chord": "x - y",
}

_POINTS = {
    "P1": "1 : 1 : 2",
    "P2": "w : w^2 : 2",
    "P3": "w^2 : w : 2",
    "Q1": "1 : -1 : 0",
    "Q2": "1 : -w : 0",
    "Q3": "1 : w + 1 : 0",
    "node": "0 : 0 : 1",
}

# C1 - C2 splits into these two lines (up to the factor 3*(1 - w)), which is
# how the four conic-conic crossings reduce to two line-conic quadratics.
_CONIC_PENCIL_LINES = {
    ("C1", "C2"): ("x - w*y", "7*x + 7*w*y + 2*w^2*z"),
}


@lru_cache(maxsize=1)
def curated_data() -> dict[str, object]:
    """All curated constants: curves E, C1-C3, L1-L3, chord; points P, Q, node."""
    data: dict[str, object] = {}
    for label, eq in _EQUATIONS.items():
        poly = parse_curve(eq)
        kind = {1: LINE, 2: CONIC, 3: CUBIC}[poly.degree]
        data[label] = CuratedComponent(label, poly, kind)
    for label, coords in _POINTS.items():
        data[label] = parse_point(coords)
    return data


def component(label: str) -> CuratedComponent:
    item = curated_data()[label]
    if not isinstance(item, CuratedComponent):
        raise KeyError(label)
    return item


def point(label: str) -> ProjectivePoint:
    item = curated_data()[label]
    if not isinstance(item, ProjectivePoint):
        raise KeyError(label)
    return item


# -- intersection point solvers ------------------------------------------------


def line_line_point(l1: HomogeneousPoly, l2: HomogeneousPoly) -> ProjectivePoint:
    rows = []
    for line in (l1, l2):
        rows.append([line.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))])
    basis = field_nullspace(rows, 3, ONE)
    if len(basis) != 1:
        raise CatalogError("lines do not meet in a single point")
    return ProjectivePoint(*basis[0])


def line_conic_points(
    line: HomogeneousPoly, conic: HomogeneousPoly
) -> list[ProjectivePoint]:
    """The two (distinct) intersection points of a line and a smooth conic.

    Solves the restricted quadratic exactly; when its discriminant is not a
    square in Q(w) the pair lives in the quadratic extension Q(w)[s],
    s^2 = disc, and both conjugate points are returned over that field.
    """
    coeffs = [line.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    basis = field_nullspace([coeffs], 3, ONE)
    if len(basis) != 2:
        raise CatalogError("degenerate line")
    v0, v1 = basis
    qa = conic.evaluate(v0)
    qc = conic.evaluate(v1)
    mixed = conic.evaluate([a + b for a, b in zip(v0, v1)])
    qb = mixed - qa - qc
    if not qa:
        # (s : t) = (1 : 0) is a root; the other is (-qc : qb)
        if not qb:
            raise CatalogError("line tangent to the conic")
        p1 = ProjectivePoint(*v0)
        s, t = -qc, qb
        p2 = ProjectivePoint(*(s * a + t * b for a, b in zip(v0, v1)))
        return [p1, p2]
    disc = qb * qb - 4 * qa * qc
    if not disc:
        raise CatalogError("line tangent to the conic")
    root = eisenstein_sqrt(disc)
    points = []
    if root is None:
        gen = QuadExtNumber.generator(disc)
        candidates = [(-qb + gen, 2 * qa), (-qb - gen, 2 * qa)]
        # lift the parametrization into the extension before combining
        candidates = [
            (QuadExtNumber(ZERO, ZERO, disc) + s, QuadExtNumber(ZERO, ZERO, disc) + t)
            for s, t in candidates
        ]
    else:
        candidates = [(-qb + root, 2 * qa), (-qb - root, 2 * qa)]
    for s, t in candidates:
        coords = tuple(s * a + t * b for a, b in zip(v0, v1))
        points.append(ProjectivePoint(*coords))
    if points[0] == points[1]:
        raise CatalogError("line tangent to the conic")
    return points


def conic_conic_points(
    c1_label: str, c2_label: str
) -> list[ProjectivePoint]:
    """Four crossings of two curated conics, via the split pencil member."""
    key = (c1_label, c2_label) if (c1_label, c2_label) in _CONIC_PENCIL_LINES else (
        c2_label,
        c1_label,
    )
    if key not in _CONIC_PENCIL_LINES:
        raise CatalogError(f"no pencil split recorded for {c1_label}, {c2_label}")
    m1_text, m2_text = _CONIC_PENCIL_LINES[key]
    m1, m2 = parse_curve(m1_text), parse_curve(m2_text)
    ca, cb = component(key[0]).poly, component(key[1]).poly
    difference = ca - cb
    if not proportional(difference, m1 * m2):
        raise CatalogError("recorded pencil factorization does not match")
    return line_conic_points(m1, ca) + line_conic_points(m2, ca)


# -- osculating conics ----------------------------------------------------------

_CONIC_MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


def osculating_conic(f: HomogeneousPoly, p: ProjectivePoint) -> HomogeneousPoly:
    """The unique conic with contact >= 5 with f at a smooth non-flex point.

    Solves the 5x6 linear system asking the conic to vanish along the local
    branch through t^4; a one-dimensional nullspace is required and the
    result is scaled so its first nonzero coefficient (in the fixed conic
    monomial order) is 1.
    """
    if f.degree < 3:
        raise ValueError("osculating conics need curve degree >= 3")
    if inflection_order(f, p) > 0:
        raise ValueError("point is a flex; the osculating conic degenerates")
    branch = expand_branches(f, p, DEFAULT_ORDER)[0]
    rows = [[ZERO] * 6 for _ in range(5)]
    for col, mono in enumerate(_CONIC_MONOMIALS):
        basis_poly = HomogeneousPoly(2, {mono: ONE})
        affine = basis_poly.dehomogenize(branch.chart)
        composed = series.eval_bivariate(affine, list(branch.u), list(branch.v))
        for r in range(5):
            val = EisensteinNumber._coerce(composed[r])
            if val is None:
                raise ValueError("osculating conic solver needs a Q(w) point")
            rows[r][col] = val
    basis = field_nullspace(rows, 6, ONE)
    if len(basis) != 1:
        raise ValueError(
            f"degenerate contact system at {p}: nullspace dimension {len(basis)}"
        )
    vec = basis[0]
    lead = next(c for c in vec if c)
    vec = [c / lead for c in vec]
    terms = {m: c for m, c in zip(_CONIC_MONOMIALS, vec) if c}
    return HomogeneousPoly(2, terms)


def is_sextactic(f: HomogeneousPoly, p: ProjectivePoint) -> bool:
    """True when the osculating conic's contact reaches 6."""
    conic = osculating_conic(f, p)
    branch = expand_branches(f, p, DEFAULT_ORDER)[0]
    return branch_mult(conic, branch) >= 6


# -- catalog verification --------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class CatalogVerification:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
        }


def _conic_matrix(c: HomogeneousPoly) -> list[list[EisensteinNumber]]:
    half = EisensteinNumber(1) / 2
    a = c.coefficient((2, 0, 0))
    b = c.coefficient((0, 2, 0))
    cc = c.coefficient((0, 0, 2))
    d = c.coefficient((1, 1, 0)) * half
    e = c.coefficient((1, 0, 1)) * half
    g = c.coefficient((0, 1, 1)) * half
    return [[a, d, e], [d, b, g], [e, g, cc]]


def _det3_scalar(m: list[list[EisensteinNumber]]) -> EisensteinNumber:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def verify_catalog() -> CatalogVerification:
    """Exact verification of every incidence/contact claim in the curated data."""
    from .polynomials import hessian_det

    data = curated_data()
    E = component("E").poly
    checks: list[CheckResult] = []

    def record(name: str, ok: bool, detail: str) -> None:
        checks.append(CheckResult(name, bool(ok), detail))

    for i in (1, 2, 3):
        Ci = component(f"C{i}").poly
        Pi = point(f"P{i}")
        on_curves = not E.evaluate(Pi) and not Ci.evaluate(Pi)
        record(f"P{i} on E and C{i}", on_curves, f"P{i} = {Pi}")
        branch = expand_branches(E, Pi, DEFAULT_ORDER)[0]
        contact = branch_mult(Ci, branch)
        record(f"contact(E, C{i}) at P{i}", contact == 6, f"order {contact}")
        osc = osculating_conic(E, Pi)
        record(
            f"C{i} is the osculating conic at P{i}",
            proportional(osc, Ci),
            str(osc),
        )
        record(f"P{i} sextactic", is_sextactic(E, Pi), "contact >= 6")

    for j in (1, 2, 3):
        Lj = component(f"L{j}").poly
        Qj = point(f"Q{j}")
        on_curves = not E.evaluate(Qj) and not Lj.evaluate(Qj)
        record(f"Q{j} on E and L{j}", on_curves, f"Q{j} = {Qj}")
        tangent = tangent_line(E, Qj)
        record(
            f"L{j} is the tangent line at Q{j}",
            proportional(tangent, Lj),
            str(tangent),
        )
        branch = expand_branches(E, Qj, DEFAULT_ORDER)[0]
        contact = branch_mult(Lj, branch)
        record(f"contact(E, L{j}) at Q{j}", contact == 3, f"order {contact}")
        iota = inflection_order(E, Qj)
        record(f"inflection order at Q{j}", iota == 1, f"iota = {iota}")

    H = hessian_det(E)
    node = point("node")
    flex_budget = 0
    for j in (1, 2, 3):
        Qj = point(f"Q{j}")
        record(f"Hessian vanishes at Q{j}", not H.evaluate(Qj), "")
        branch = expand_branches(E, Qj, DEFAULT_ORDER)[0]
        flex_budget += branch_mult(H, branch)
    record("Hessian vanishes at the node", not H.evaluate(node), "")
    node_budget = 0
    for branch in expand_branches(E, node, DEFAULT_ORDER):
        node_budget += branch_mult(H, branch)
    record(
        "E/Hessian intersection budget is 9",
        flex_budget + node_budget == 9,
        f"flexes {flex_budget} + node {node_budget}",
    )

    for i in (1, 2, 3):
        Ci = component(f"C{i}").poly
        det = _det3_scalar(_conic_matrix(Ci))
        record(f"C{i} is a smooth conic", bool(det), f"det = {det}")

    return CatalogVerification(tuple(checks))


# -- arrangement builders ---------------------------------------------------------

_NAME_ALIASES = {
    "Example_3_2": "node_chord",
    "Example_3_3": "flex_triangle",
    "NearlyFree_1": "nearly_free_1",
    "NearlyFree_2": "nearly_free_2",
}

_F_PATTERN = _re.compile(r"^F\(\s*(\d)\s*,\s*(\d)\s*\)$")
_C_PATTERN = _re.compile(r"^C\(\s*(\d)\s*,\s*(\d)\s*,\s*(\d)\s*\)$")


def _assemble(name: str, labels: list[str], points: list[ProjectivePoint]) -> Arrangement:
    comps = tuple(component(lbl) for lbl in labels)
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            if comps[a].poly.degree == comps[b].poly.degree and proportional(
                comps[a].poly, comps[b].poly
            ):
                raise CatalogError(f"{name}: repeated component, product not reduced")
    product = comps[0].poly
    for c in comps[1:]:
        product = product * c.poly
    seen: list[ProjectivePoint] = []
    for p in points:
        if p not in seen:
            seen.append(p)
    if len(seen) != len(points):
        raise CatalogError(f"{name}: coincident singular points in the closed-form list")
    for g in jacobian_generators(product):
        for p in seen:
            if g.evaluate(p):
                raise CatalogError(f"{name}: listed point {p} is not singular")
    return Arrangement(name, comps, product, tuple(seen))


def build(name: str) -> Arrangement:
    """Construct a named arrangement with its closed-form singular locus.

    Accepted names: F(i,j), C(i,j,k) with j != k, node_chord, flex_triangle,
    nearly_free_1, nearly_free_2 (plus the aliases Example_3_2, Example_3_3,
    NearlyFree_1, NearlyFree_2).
    """
    name = name.strip()
    name = _NAME_ALIASES.get(name, name)
    m = _F_PATTERN.match(name)
    if m:
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= 3 and 1 <= j <= 3):
            raise CatalogError("F(i,j) needs indices in 1..3")
        labels = ["E", f"C{i}", f"L{j}"]
        pts = [point("node"), point(f"P{i}"), point(f"Q{j}")]
        pts += line_conic_points(component(f"L{j}").poly, component(f"C{i}").poly)
        return _assemble(f"F({i},{j})", labels, pts)
    m = _C_PATTERN.match(name)
    if m:
        i, j, k = (int(m.group(g)) for g in (1, 2, 3))
        if not all(1 <= v <= 3 for v in (i, j, k)):
            raise CatalogError("C(i,j,k) needs indices in 1..3")
        if j == k:
            raise CatalogError("C(i,j,k) needs two distinct lines")
        labels = ["E", f"C{i}", f"L{j}", f"L{k}"]
        pts = [point("node"), point(f"P{i}"), point(f"Q{j}"), point(f"Q{k}")]
        pts += line_conic_points(component(f"L{j}").poly, component(f"C{i}").poly)
        pts += line_conic_points(component(f"L{k}").poly, component(f"C{i}").poly)
        pts.append(line_line_point(component(f"L{j}").poly, component(f"L{k}").poly))
        return _assemble(f"C({i},{j},{k})", labels, pts)
    if name == "node_chord":
        labels = ["E", "C1", "chord"]
        chord = component("chord").poly
        pts = [point("node"), point("P1")]
        pts += [
            p
            for p in line_conic_points(chord, component("C1").poly)
            if p != point("P1")
        ]
        return _assemble(name, labels, pts)
    if name == "flex_triangle":
        labels = ["E", "L1", "L2", "L3"]
        pts = [point("node"), point("Q1"), point("Q2"), point("Q3")]
        for a, b in ((1, 2), (1, 3), (2, 3)):
            pts.append(
                line_line_point(component(f"L{a}").poly, component(f"L{b}").poly)
            )
        return _assemble(name, labels, pts)
    if name == "nearly_free_1":
        labels = ["E", "C1", "L1", "L2", "L3"]
        pts = [point("node"), point("P1"), point("Q1"), point("Q2"), point("Q3")]
        for j in (1, 2, 3):
            pts += line_conic_points(component(f"L{j}").poly, component("C1").poly)
        for a, b in ((1, 2), (1, 3), (2, 3)):
            pts.append(
                line_line_point(component(f"L{a}").poly, component(f"L{b}").poly)
            )
        return _assemble(name, labels, pts)
    if name == "nearly_free_2":
        labels = ["E", "C1", "C2", "L2"]
        pts = [point("node"), point("P1"), point("P2"), point("Q2")]
        pts += line_conic_points(component("L2").poly, component("C1").poly)
        pts += line_conic_points(component("L2").poly, component("C2").poly)
        pts += conic_conic_points("C1", "C2")
        return _assemble(name, labels, pts)
    raise CatalogError(f"unknown arrangement name {name!r}")


def all_free_arrangement_names() -> list[str]:
    """The nine cubic+conic+line names and nine cubic+conic+two-line names."""
    names = [f"F({i},{j})" for i in (1, 2, 3) for j in (1, 2, 3)]
    names += [
        f"C({i},{j},{k})"
        for i in (1, 2, 3)
        for (j, k) in ((1, 2), (1, 3), (2, 3))
    ]
    return names


def bezout_budgets(arr: Arrangement) -> list[tuple[str, str, int, int]]:
    """Per component pair: (labels, expected deg*deg, sum of local contacts).

    The sum runs over the listed singular points using branch expansions of
    the first component; exact exhaustion of every budget certifies that the
    closed-form singular locus is complete.
    """
    out = []
    comps = arr.labelled()
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            la, ga = comps[a]
            lb, gb = comps[b]
            expected = ga.degree * gb.degree
            total = 0
            for p in arr.singular_points:
                if ga.evaluate(p) or gb.evaluate(p):
                    continue
                for branch in expand_branches(ga, p, DEFAULT_ORDER):
                    m = branch_mult(gb, branch)
                    total += int(m)
            out.append((la, lb, expected, total))
    return out
