"""Graded linear algebra on the Jacobian ideal of a reduced plane curve.

Computes dimensions of the Jacobian syzygy module AR(f) in each degree, its
minimal degree, the Hilbert function of the Jacobian (Milnor) algebra, the
global Tjurina number via Hilbert-function stabilization, and free /
nearly-free certification.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, comb

from .eisenstein import EisensteinNumber, ONE
from .linalg import eis_rank_from_pairs, field_nullspace
from .polynomials import HomogeneousPoly, monomial_basis

FREE = "free"
NEARLY_FREE = "nearly_free"
NEITHER = "neither"


class NonReducedInputError(ValueError):
    """Hilbert probes failed to stabilize; the input is suspected non-reduced."""


@dataclass(frozen=True)
class FreenessCertificate:
    """Outcome of a freeness check.

    `status` is `free` when mdr r satisfies r <= (d-1)/2 and
    tau = (d-1)^2 - r(d-r-1); `nearly_free` when tau falls short of that
    count by exactly one (the convention this package adopts, recorded here
    so reports are auditable); `neither` otherwise.  `exponents` is
    (r, d-1-r) for free curves.
    """

    degree: int
    mdr: int
    tjurina: int
    status: str
    exponents: tuple[int, int] | None
    probe_degrees: tuple[int, int, int]

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "mdr": self.mdr,
            "tjurina": self.tjurina,
            "status": self.status,
            "exponents": list(self.exponents) if self.exponents else None,
            "probe_degrees": list(self.probe_degrees),
        }


def jacobian_generators(
    f: HomogeneousPoly,
) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
    """The three partial derivatives, each of degree d-1."""
    if f.degree < 1 or f.is_zero:
        raise ValueError("need a nonconstant polynomial")
    return f.gradient()


def _integer_model(f: HomogeneousPoly) -> HomogeneousPoly:
    """Scale f by the lcm of coefficient denominators.

    Scaling by a nonzero constant changes neither AR(f) dimensions nor the
    Jacobian algebra, and lets matrices be built directly over Z[w].
    """
    denom = 1
    for c in f.terms.values():
        for part in (c.re, c.wc):
            denom = denom * part.denominator // gcd(denom, part.denominator)
    return f if denom == 1 else f.scale(denom)


def _multiplication_matrix_pairs(
    f: HomogeneousPoly, k: int
) -> tuple[list[list[int]], list[list[int]], int, int]:
    """Integer-pair matrix of S_k^3 -> S_{k+d-1}, (a,b,c) -> a f_x + b f_y + c f_z.

    Rows are indexed by monomial_basis(k+d-1), columns by the three partials
    (outer) and monomial_basis(k) (inner); this layout plus the first-nonzero
    pivot rule makes elimination reproducible.
    """
    fi = _integer_model(f)
    partials = fi.gradient()
    target = k + fi.degree - 1
    rows_idx = {m: i for i, m in enumerate(monomial_basis(target))}
    nrows = len(rows_idx)
    cols_basis = monomial_basis(k)
    ncols = 3 * len(cols_basis)
    re_rows = [[0] * ncols for _ in range(nrows)]
    wc_rows = [[0] * ncols for _ in range(nrows)]
    col = 0
    for p in partials:
        terms = [(m, int(c.re), int(c.wc)) for m, c in p.terms.items()]
        for mono in cols_basis:
            m0, m1, m2 = mono
            for (t0, t1, t2), cre, cwc in terms:
                r = rows_idx[(m0 + t0, m1 + t1, m2 + t2)]
                re_rows[r][col] = cre
                wc_rows[r][col] = cwc
            col += 1
    return re_rows, wc_rows, nrows, ncols


def _multiplication_rank(f: HomogeneousPoly, k: int) -> int:
    if k < 0:
        return 0
    re_rows, wc_rows, _, _ = _multiplication_matrix_pairs(f, k)
    return eis_rank_from_pairs(re_rows, wc_rows)


def syzygy_dim(f: HomogeneousPoly, k: int) -> int:
    """dim AR(f)_k: nullity of the multiplication map S_k^3 -> S_{k+d-1}."""
    if k < 0:
        return 0
    ncols = 3 * comb(k + 2, 2)
    return ncols - _multiplication_rank(f, k)


def mdr(f: HomogeneousPoly) -> int:
    """Minimal k with AR(f)_k nonzero.

    The Koszul relations among the partials live in degree d-1, so the
    search over k = 0, 1, ... always terminates by then.
    """
    if f.degree < 2:
        raise ValueError("mdr needs degree >= 2")
    for k in range(f.degree):
        if syzygy_dim(f, k) > 0:
            return k
    raise AssertionError("no syzygy found through degree d-1; partials degenerate")


def syzygy_witness(
    f: HomogeneousPoly, k: int
) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly] | None:
    """One exact syzygy (a, b, c) in degree k, or None when AR(f)_k = 0.

    Built from the deterministic nullspace of the multiplication matrix;
    a f_x + b f_y + c f_z = 0 holds exactly.
    """
    partials = f.gradient()
    target = k + f.degree - 1
    rows_idx = {m: i for i, m in enumerate(monomial_basis(target))}
    cols_basis = monomial_basis(k)
    rows = [[EisensteinNumber(0)] * (3 * len(cols_basis)) for _ in rows_idx]
    col = 0
    for p in partials:
        for mono in cols_basis:
            for t, c in p.terms.items():
                r = rows_idx[(mono[0] + t[0], mono[1] + t[1], mono[2] + t[2])]
                rows[r][col] = rows[r][col] + c
            col += 1
    basis = field_nullspace(rows, 3 * len(cols_basis), ONE)
    if not basis:
        return None
    vec = basis[0]
    n = len(cols_basis)
    out = []
    for i in range(3):
        terms = {m: vec[i * n + j] for j, m in enumerate(cols_basis) if vec[i * n + j]}
        out.append(HomogeneousPoly(k, terms))
    return tuple(out)


def jacobian_algebra_hilbert(f: HomogeneousPoly, t: int) -> int:
    """dim (S / J_f)_t, via the rank of the multiplication map into S_t."""
    if t < 0:
        return 0
    dim_st = comb(t + 2, 2)
    k = t - f.degree + 1
    if k < 0:
        return dim_st
    return dim_st - _multiplication_rank(f, k)


def tjurina_probe_degrees(d: int) -> tuple[int, int, int]:
    return (3 * d - 6, 3 * d - 5, 3 * d - 4)


def total_tjurina(f: HomogeneousPoly) -> int:
    """Global Tjurina number as the stabilized Hilbert value of S/J_f.

    Probes the three degrees 3d-6, 3d-5, 3d-4 and requires agreement.  A
    smooth curve's Jacobian algebra is Artinian with socle exactly at 3d-6,
    so the upper two probes reading 0 certifies smoothness (the Jacobian
    ideal has become everything) and tau = 0 is returned.
    """
    probes = tjurina_probe_degrees(f.degree)
    values = [jacobian_algebra_hilbert(f, t) for t in probes]
    if values[0] == values[1] == values[2]:
        return values[0]
    if values[1] == values[2] == 0:
        return 0
    raise NonReducedInputError(
        f"Hilbert probes {dict(zip(probes, values))} do not stabilize; "
        "is the input reduced?"
    )


def certify(f: HomogeneousPoly) -> FreenessCertificate:
    """Freeness / near-freeness certificate for a reduced curve."""
    d = f.degree
    r = mdr(f)
    tau = total_tjurina(f)
    balanced = (d - 1) ** 2 - r * (d - 1 - r)
    if 2 * r <= d - 1 and tau == balanced:
        status: str = FREE
        exponents = (r, d - 1 - r)
    elif tau == balanced - 1:
        status = NEARLY_FREE
        exponents = None
    else:
        status = NEITHER
        exponents = None
    return FreenessCertificate(
        degree=d,
        mdr=r,
        tjurina=tau,
        status=status,
        exponents=exponents,
        probe_degrees=tjurina_probe_degrees(d),
    )
