"""Local analysis of curve germs at a point.

Expands smooth local branches as truncated power series, measures contact
orders between components, computes inflection orders, and classifies the
resulting singularity profiles into the ADE types this package handles
(A1, A3, A5, A7, A11, D4, D14), with Milnor and Tjurina numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

from . import series
from .eisenstein import EisensteinNumber, field_sqrt
from .polynomials import HomogeneousPoly, ProjectivePoint, monomial_basis

DEFAULT_ORDER = 16
MAX_ORDER = 64

INFINITE = inf

A1, A3, A5, A7, A11, D4, D14, UNKNOWN = "A1", "A3", "A5", "A7", "A11", "D4", "D14", "UNKNOWN"

_TWO_BRANCH_TAGS = {1: A1, 2: A3, 3: A5, 4: A7, 6: A11}


class OutOfScopeGermError(ValueError):
    """Local structure outside the supported smooth-branch catalog."""


class ContainmentSuspectedError(RuntimeError):
    """Contact order exceeded the escalation cap without proving containment."""


@dataclass(frozen=True)
class BranchExpansion:
    """One smooth local branch of `parent` at `center`, as series in t.

    The parametrization (u(t), v(t)) lives in the affine chart obtained by
    scaling coordinate `chart` to 1; u and v are the remaining coordinates
    in (x, y, z) order, truncated mod t^(order+1).  `index` is the branch's
    position in the deterministic branch ordering at this point, so the
    expansion can be re-derived at higher truncation.
    """

    parent: HomogeneousPoly
    center: ProjectivePoint
    chart: int
    u: tuple
    v: tuple
    tangent: tuple
    order: int
    index: int


@dataclass(frozen=True)
class SingularityType:
    tag: str
    milnor: int
    tjurina: int | None

    @property
    def is_known(self) -> bool:
        return self.tag != UNKNOWN


@dataclass(frozen=True)
class SingularityProfile:
    """Branches through a point and their pairwise intersection multiplicities."""

    point: ProjectivePoint
    branches: tuple[tuple[str, BranchExpansion], ...]
    pairwise: tuple[tuple[int, int, int], ...]  # (i, j, multiplicity), i < j

    def multiplicities(self) -> list[int]:
        return sorted(m for _, _, m in self.pairwise)


def _local_model(
    f: HomogeneousPoly, p: ProjectivePoint
) -> tuple[int, object, object, dict[tuple[int, int], object]]:
    """Affine model of f centered at p: chart, center coords, shifted terms.

    Returns G with G(u, v) = f~(u0 + u, v0 + v) in the canonical chart of p,
    so the point of interest is the origin.
    """
    chart = p.chart()
    canon = p.canonical()
    others = [i for i in range(3) if i != chart]
    u0, v0 = canon[others[0]], canon[others[1]]
    affine = f.dehomogenize(chart)
    zero = u0 * 0
    shifted: dict[tuple[int, int], object] = {}
    max_i = max((k[0] for k in affine), default=0)
    max_j = max((k[1] for k in affine), default=0)
    # binomial-shift power tables: (u0 + u)^i expanded by u-degree
    u_pows: list[list[object]] = [[zero + 1]]
    for _ in range(max_i):
        prev = u_pows[-1]
        nxt = [prev[0] * u0] + [
            prev[a] + (prev[a + 1] * u0 if a + 1 < len(prev) else zero)
            for a in range(len(prev))
        ]
        u_pows.append(nxt)
    v_pows: list[list[object]] = [[zero + 1]]
    for _ in range(max_j):
        prev = v_pows[-1]
        nxt = [prev[0] * v0] + [
            prev[a] + (prev[a + 1] * v0 if a + 1 < len(prev) else zero)
            for a in range(len(prev))
        ]
        v_pows.append(nxt)
    for (i, j), c in affine.items():
        for a, ua in enumerate(u_pows[i]):
            if not ua:
                continue
            cu = c * ua
            for b, vb in enumerate(v_pows[j]):
                if not vb:
                    continue
                key = (a, b)
                acc = shifted.get(key)
                acc = cu * vb if acc is None else acc + cu * vb
                if acc:
                    shifted[key] = acc
                else:
                    shifted.pop(key, None)
    return chart, u0, v0, shifted


def _poly2_partial(G: dict[tuple[int, int], object], var: int) -> dict[tuple[int, int], object]:
    out: dict[tuple[int, int], object] = {}
    for (i, j), c in G.items():
        e = (i, j)[var]
        if e == 0:
            continue
        key = (i - 1, j) if var == 0 else (i, j - 1)
        out[key] = c * e
    return out


def _solve_graph_branch(
    G: dict[tuple[int, int], object],
    slope: object,
    order: int,
) -> list[object]:
    """Series phi with G(t, phi(t)) = 0 mod t^(order+1), phi = slope*t + ...

    Newton iteration on the truncated equation; converges quadratically at a
    smooth point and one order per step along a nodal branch (the derivative
    has valuation 1 there).  The residual is re-checked exactly at the end.
    """
    n = order + 1
    zero = slope * 0
    t_series: list[object] = [zero] * n
    if n > 1:
        t_series[1] = zero + 1
    phi = [zero] * n
    if n > 1:
        phi[1] = slope
    Gv = _poly2_partial(G, 1)
    for _ in range(order + 2):
        residual = series.eval_bivariate(G, t_series, phi)
        if series.valuation(residual) is None:
            break
        deriv = series.eval_bivariate(Gv, t_series, phi)
        correction = series.divide(residual, deriv)
        if series.valuation(correction) is None:
            break
        phi = series.sub(phi, correction)
    residual = series.eval_bivariate(G, t_series, phi)
    if series.valuation(residual) is not None:
        raise OutOfScopeGermError("branch iteration failed to reach the requested order")
    return phi


def _tangent_factors(
    q20: object, q11: object, q02: object
) -> list[tuple[object, object]]:
    """Distinct linear factors (alpha, beta) of a binary quadratic over its field.

    Factors satisfy q = c * prod(alpha*u + beta*v); raises when the cone is
    degenerate (repeated factor) or irreducible over the coefficient field.
    """
    zero = q20 * 0
    one = zero + 1
    if not q02 and not q20:
        if not q11:
            raise OutOfScopeGermError("zero tangent cone")
        return [(one, zero), (zero, one)]
    if q02:
        disc = q11 * q11 - 4 * q02 * q20
        if not disc:
            raise OutOfScopeGermError("repeated tangent direction (not a node)")
        root = field_sqrt(disc)
        if root is None:
            raise OutOfScopeGermError(
                "tangent cone irreducible over the coefficient field"
            )
        two_q02 = q02 + q02
        lam1 = (zero - q11 + root) / two_q02
        lam2 = (zero - q11 - root) / two_q02
        # v = lam*u lines, i.e. factors (-lam, 1)
        return [(zero - lam1, one), (zero - lam2, one)]
    # q02 == 0, q20 != 0: factors u and (q20*u + q11*v), q11 != 0
    if not q11:
        raise OutOfScopeGermError("repeated tangent direction (not a node)")
    return [(one, zero), (q20, q11)]


def expand_branches(
    f: HomogeneousPoly, p: ProjectivePoint, order: int = DEFAULT_ORDER
) -> list[BranchExpansion]:
    """Smooth-branch expansions of f at p (one for a smooth point, two at a node).

    The supported germs have multiplicity at most 2 with distinct tangents
    split over the coefficient field; anything else raises
    OutOfScopeGermError.  Every returned expansion satisfies the residual
    invariant: f composed with it vanishes mod t^(order+1).
    """
    chart, u0, v0, G = _local_model(f, p)
    zero = u0 * 0
    if G.get((0, 0)):
        raise ValueError("point does not lie on the curve")
    g10 = G.get((1, 0), zero)
    g01 = G.get((0, 1), zero)
    if g10 or g01:
        factors = [(g10, g01)]
    else:
        q20 = G.get((2, 0), zero)
        q11 = G.get((1, 1), zero)
        q02 = G.get((0, 2), zero)
        if not (q20 or q11 or q02):
            raise OutOfScopeGermError("multiplicity >= 3 at the point")
        factors = _tangent_factors(q20, q11, q02)
    branches: list[BranchExpansion] = []
    n = order + 1
    for idx, (alpha, beta) in enumerate(factors):
        if beta:
            # tangent alpha*u + beta*v = 0 is not vertical: graph v = phi(u)
            slope = (zero - alpha) / beta
            phi = _solve_graph_branch(G, slope, order)
            u_series = [zero] * n
            if n > 1:
                u_series[1] = zero + 1
            u_series[0] = u0
            v_series = list(phi)
            v_series[0] = v0
            tangent = (zero + 1, slope)
        else:
            # vertical tangent u = 0: graph u = psi(v); swap the variables
            swapped = {(j, i): c for (i, j), c in G.items()}
            psi = _solve_graph_branch(swapped, zero, order)
            v_series = [zero] * n
            if n > 1:
                v_series[1] = zero + 1
            v_series[0] = v0
            u_series = list(psi)
            u_series[0] = u0
            tangent = (zero, zero + 1)
        branches.append(
            BranchExpansion(
                parent=f,
                center=p,
                chart=chart,
                u=tuple(u_series),
                v=tuple(v_series),
                tangent=tangent,
                order=order,
                index=idx,
            )
        )
    return branches


def _is_divisible(f: HomogeneousPoly, g: HomogeneousPoly) -> bool:
    """Exact divisibility f | g by single-divisor monomial reduction."""
    if f.is_zero:
        return g.is_zero
    lead = None
    for m in monomial_basis(f.degree):
        if m in f.terms:
            lead = m
            break
    assert lead is not None
    rem_terms = dict(g.terms)
    rem_deg = g.degree
    lc = f.terms[lead]
    while rem_terms:
        target = None
        for m in monomial_basis(rem_deg):
            if m in rem_terms:
                target = m
                break
        quot = tuple(a - b for a, b in zip(target, lead))
        if any(e < 0 for e in quot):
            return False
        factor = HomogeneousPoly(
            rem_deg - f.degree, {quot: rem_terms[target] / lc}
        )
        reduced = HomogeneousPoly(rem_deg, rem_terms) - factor * f
        rem_terms = reduced.terms
    return True


def branch_mult(g: HomogeneousPoly, b: BranchExpansion) -> int | float:
    """Order of vanishing of g along the branch, or INFINITE on containment.

    Re-expands the branch at doubled truncation whenever the observed order
    reaches the current window, and escalates up to a hard cap before
    checking polynomial divisibility to distinguish containment from a
    suspiciously deep contact.
    """
    branch = b
    while True:
        affine = g.dehomogenize(branch.chart)
        composed = series.eval_bivariate(affine, list(branch.u), list(branch.v))
        order = series.valuation(composed)
        if order is not None and order < branch.order:
            return order
        if branch.order >= MAX_ORDER:
            if _is_divisible(branch.parent, g):
                return INFINITE
            raise ContainmentSuspectedError(
                f"contact order exceeds {MAX_ORDER}; suspected component containment"
            )
        branch = expand_branches(branch.parent, branch.center, 2 * branch.order)[
            branch.index
        ]


def tangent_line(f: HomogeneousPoly, p: ProjectivePoint) -> HomogeneousPoly:
    """Projective tangent line at a smooth point, from the gradient."""
    fx, fy, fz = f.gradient()
    a, b, c = (g.evaluate(p) for g in (fx, fy, fz))
    if not (a or b or c):
        raise ValueError("tangent line undefined at a singular point")
    coerced = []
    for v in (a, b, c):
        e = EisensteinNumber._coerce(v)
        if e is None:
            raise ValueError("tangent line only supported over Q(w) points")
        coerced.append(e)
    terms = {}
    for mono, value in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), coerced):
        if value:
            terms[mono] = value
    return HomogeneousPoly(1, terms)


def inflection_order(f: HomogeneousPoly, p: ProjectivePoint) -> int:
    """Contact of the tangent line beyond the generic 2 at a smooth point."""
    line = tangent_line(f, p)
    branch = expand_branches(f, p, DEFAULT_ORDER)[0]
    contact = branch_mult(line, branch)
    if contact is INFINITE:
        raise ContainmentSuspectedError("curve contains its own tangent line")
    return contact - 2


def classify(profile: SingularityProfile) -> SingularityType:
    """ADE classification from branch count and pairwise contacts.

    For smooth branches the Milnor number is 2*delta - r + 1 with delta the
    sum of pairwise multiplicities; every in-scope tag is quasi-homogeneous
    so the local Tjurina number equals it (None when UNKNOWN).
    """
    r = len(profile.branches)
    mults = profile.multiplicities()
    delta = sum(mults)
    milnor = 2 * delta - r + 1
    tag = UNKNOWN
    if r == 2:
        tag = _TWO_BRANCH_TAGS.get(mults[0], UNKNOWN)
    elif r == 3:
        if mults == [1, 1, 1]:
            tag = D4
        elif mults == [1, 1, 6]:
            tag = D14
    if tag == UNKNOWN:
        return SingularityType(UNKNOWN, milnor, None)
    return SingularityType(tag, milnor, milnor)


def _pairwise_contact(
    bi: BranchExpansion,
    bj: BranchExpansion,
    branch_count: dict[int, int],
) -> int:
    """Intersection multiplicity of two distinct smooth branches at a point."""
    if bi.parent is bj.parent:
        if bi.tangent != bj.tangent:
            return 1
        raise OutOfScopeGermError("same-component branches sharing a tangent")
    if branch_count[id(bj.parent)] == 1:
        m = branch_mult(bj.parent, bi)
    elif branch_count[id(bi.parent)] == 1:
        m = branch_mult(bi.parent, bj)
    elif bi.tangent != bj.tangent:
        return 1
    else:
        raise OutOfScopeGermError("two multi-branch components sharing a tangent")
    if m is INFINITE:
        raise OutOfScopeGermError("components share a common factor")
    return int(m)


def profile_at(
    components: list[tuple[str, HomogeneousPoly]],
    p: ProjectivePoint,
    order: int = DEFAULT_ORDER,
) -> SingularityProfile:
    """Branches and pairwise contacts of the labelled components through p."""
    labelled: list[tuple[str, BranchExpansion]] = []
    count_by_poly: dict[int, int] = {}
    for label, g in components:
        if g.evaluate(p):
            continue
        branches = expand_branches(g, p, order)
        count_by_poly[id(g)] = len(branches)
        for b in branches:
            labelled.append((label, b))
    if not labelled:
        raise ValueError("no arrangement component passes through the point")
    pairwise: list[tuple[int, int, int]] = []
    for i in range(len(labelled)):
        for j in range(i + 1, len(labelled)):
            m = _pairwise_contact(labelled[i][1], labelled[j][1], count_by_poly)
            pairwise.append((i, j, m))
    return SingularityProfile(
        point=p, branches=tuple(labelled), pairwise=tuple(pairwise)
    )


def analyze_arrangement(
    components: list[HomogeneousPoly] | list[tuple[str, HomogeneousPoly]],
    points: list[ProjectivePoint],
) -> tuple[list[tuple[ProjectivePoint, SingularityProfile, SingularityType]], int]:
    """Profile and classify every supplied singular point; returns the tau sum.

    UNKNOWN classifications are kept in the result list (never dropped); the
    returned total is the sum of local Tjurina numbers over the classified
    points and raises if any point stayed UNKNOWN.
    """
    labelled: list[tuple[str, HomogeneousPoly]] = []
    for i, comp in enumerate(components):
        if isinstance(comp, tuple):
            labelled.append(comp)
        else:
            labelled.append((f"g{i}", comp))
    results = []
    total = 0
    unknown_points = []
    for p in points:
        prof = profile_at(labelled, p)
        stype = classify(prof)
        results.append((p, prof, stype))
        if stype.tjurina is None:
            unknown_points.append(p)
        else:
            total += stype.tjurina
    if unknown_points:
        error = OutOfScopeGermError(
            "UNKNOWN classification at "
            + ", ".join(str(p) for p in unknown_points)
            + "; local tau total undefined"
        )
        error.results = results
        raise error
    return results, total
