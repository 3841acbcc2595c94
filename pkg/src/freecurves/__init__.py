"""Exact certification of freeness for plane curve arrangements built from a
nodal cubic, its inflectional lines and hyperosculating conics, plus weak
combinatorics checks for line-conic-elliptic arrangements.

All arithmetic is exact over the field Q(w), w^2 + w + 1 = 0, extended by
one square root where singular points need it.
"""

from .eisenstein import (
    EisensteinNumber,
    OMEGA,
    QuadExtNumber,
    Rational,
    eisenstein_sqrt,
    rational_sqrt,
)
from .polynomials import (
    HomogeneousPoly,
    ProjectivePoint,
    hessian_det,
    monomial_basis,
    proportional,
)
from .parsing import HomogeneityError, ParseError, parse_curve, parse_point, parse_scalar
from .linalg import ExactMatrix
from .syzygies import (
    FreenessCertificate,
    certify,
    jacobian_algebra_hilbert,
    jacobian_generators,
    mdr,
    syzygy_dim,
    syzygy_witness,
    total_tjurina,
)
from .localsing import (
    BranchExpansion,
    SingularityProfile,
    SingularityType,
    analyze_arrangement,
    branch_mult,
    classify,
    expand_branches,
    inflection_order,
    profile_at,
    tangent_line,
)
from .catalog import (
    Arrangement,
    CuratedComponent,
    bezout_budgets,
    build,
    curated_data,
    is_sextactic,
    osculating_conic,
    verify_catalog,
)
from .combinatorics import (
    WeakCombinatorics,
    bmy_sides,
    derive_inequality,
    enumerate_admissible,
    hirzebruch_slack,
    naive_count_residual,
    orbifold_euler,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BranchExpansion",
    "CuratedComponent",
    "EisensteinNumber",
    "ExactMatrix",
    "FreenessCertificate",
    "HomogeneityError",
    "HomogeneousPoly",
    "OMEGA",
    "ParseError",
    "ProjectivePoint",
    "QuadExtNumber",
    "Rational",
    "SingularityProfile",
    "SingularityType",
    "WeakCombinatorics",
    "analyze_arrangement",
    "bezout_budgets",
    "bmy_sides",
    "branch_mult",
    "build",
    "certify",
    "classify",
    "curated_data",
    "derive_inequality",
    "eisenstein_sqrt",
    "enumerate_admissible",
    "expand_branches",
    "hessian_det",
    "hirzebruch_slack",
    "inflection_order",
    "is_sextactic",
    "jacobian_algebra_hilbert",
    "jacobian_generators",
    "mdr",
    "monomial_basis",
    "naive_count_residual",
    "orbifold_euler",
    "osculating_conic",
    "parse_curve",
    "parse_point",
    "parse_scalar",
    "profile_at",
    "proportional",
    "rational_sqrt",
    "syzygy_dim",
    "syzygy_witness",
    "tangent_line",
    "total_tjurina",
    "verify_catalog",
]
