"""Weak-combinatorics constraints for line-conic-elliptic arrangements.

Implements the naive degree count, the local orbifold Euler data feeding an
orbifold BMY-type inequality, exact evaluation of both sides at rational
weights, the symbolic re-derivation of the final inequality's coefficients,
and the enumeration of count vectors compatible with both constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

SING_FIELDS = ("n2", "t3", "n3", "t5", "t7", "t11", "d14")
SING_TAGS = dict(zip(SING_FIELDS, ("A1", "A3", "D4", "A5", "A7", "A11", "D14")))

# Bezout weight of each singularity type in the naive count, i.e. the local
# intersection multiplicity sum 2*delta it absorbs.
COUNT_WEIGHTS = {"n2": 2, "t3": 4, "n3": 6, "t5": 6, "t7": 8, "t11": 12, "d14": 16}


class AlphaDomainError(ValueError):
    """Weight alpha outside the validity interval of a type's Euler data."""


class EnumerationSizeError(ValueError):
    """Naive-count left side exceeds the configured enumeration cap."""


@dataclass(frozen=True)
class WeakCombinatorics:
    """Component counts (d lines, k conics, l elliptic curves) and
    singularity counts for the seven supported types."""

    d: int
    k: int
    l: int
    n2: int = 0
    t3: int = 0
    n3: int = 0
    t5: int = 0
    t7: int = 0
    t11: int = 0
    d14: int = 0

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 1 or self.l < 1:
            raise ValueError("need at least one line, one conic, one elliptic curve")
        for name in SING_FIELDS:
            if getattr(self, name) < 0:
                raise ValueError(f"negative count {name}")

    @property
    def total_degree(self) -> int:
        return self.d + 2 * self.k + 3 * self.l

    def counts(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in SING_FIELDS}


@dataclass(frozen=True)
class OrbifoldEntry:
    """Local orbifold Euler number (a - b*alpha)^2 / c on its alpha interval."""

    tag: str
    milnor: int
    a: int
    b: int
    c: int
    alpha_min: Fraction
    alpha_max: Fraction
    min_open: bool

    def contains(self, alpha: Fraction) -> bool:
        if alpha > self.alpha_max:
            return False
        if self.min_open:
            return alpha > self.alpha_min
        return alpha >= self.alpha_min

    def value(self, alpha: Fraction) -> Fraction:
        if not self.contains(alpha):
            raise AlphaDomainError(
                f"alpha = {alpha} outside {self.tag} domain "
                f"({self.alpha_min}, {self.alpha_max}]"
            )
        base = Fraction(self.a) - Fraction(self.b) * alpha
        return base * base / self.c


ORBIFOLD_TABLE = {
    "A1": OrbifoldEntry("A1", 1, 1, 1, 1, Fraction(0), Fraction(1), False),
    "D4": OrbifoldEntry("D4", 4, 2, 3, 4, Fraction(0), Fraction(2, 3), True),
    "A3": OrbifoldEntry("A3", 3, 3, 4, 8, Fraction(1, 3), Fraction(3, 4), True),
    "A5": OrbifoldEntry("A5", 5, 4, 6, 12, Fraction(1, 3), Fraction(2, 3), True),
    "A7": OrbifoldEntry("A7", 7, 5, 8, 16, Fraction(3, 8), Fraction(5, 8), True),
    "A11": OrbifoldEntry("A11", 11, 7, 12, 24, Fraction(5, 12), Fraction(7, 12), True),
    "D14": OrbifoldEntry("D14", 14, 7, 13, 24, Fraction(5, 11), Fraction(7, 13), True),
}


def naive_count_residual(w: WeakCombinatorics) -> int:
    """Left side minus right side of the degree count; zero when consistent.

    Also asserts the internal identity
    (d+2k+3l)^2 - d - 4k - 9l = d(d-1) + 4k(k-1) + 9l(l-1) + 4dk + 6dl + 12kl.
    """
    d, k, l = w.d, w.k, w.l
    lhs = (
        d * (d - 1)
        + 4 * k * (k - 1)
        + 9 * l * (l - 1)
        + 4 * d * k
        + 6 * d * l
        + 12 * k * l
    )
    assert lhs == (d + 2 * k + 3 * l) ** 2 - d - 4 * k - 9 * l
    rhs = sum(COUNT_WEIGHTS[name] * getattr(w, name) for name in SING_FIELDS)
    return lhs - rhs


def orbifold_euler(tag: str, alpha: Fraction | int) -> Fraction:
    """Exact local orbifold Euler number for a supported singularity type."""
    if tag not in ORBIFOLD_TABLE:
        raise KeyError(f"unsupported singularity type {tag}")
    return ORBIFOLD_TABLE[tag].value(Fraction(alpha))


def bmy_applicable(w: WeakCombinatorics) -> bool:
    """Degree hypothesis m = d + 2k + 3l >= 6 under which the bound is invoked."""
    return w.total_degree >= 6


def lhs_type_coefficient(tag: str, alpha: Fraction) -> Fraction:
    """Per-point contribution 3*(alpha*(mu - 1) + 1 - e_orb(tag, alpha))."""
    entry = ORBIFOLD_TABLE[tag]
    return 3 * (alpha * (entry.milnor - 1) + 1 - entry.value(alpha))


def bmy_sides(
    w: WeakCombinatorics, alpha: Fraction | int
) -> tuple[Fraction, Fraction]:
    """Exact (lhs, rhs) of the orbifold bound at weight alpha.

    lhs sums the per-type contributions over the declared counts; rhs is
    (3*alpha - alpha^2) m^2 - 3*alpha*m with m the total degree.
    """
    alpha = Fraction(alpha)
    lhs = Fraction(0)
    for name in SING_FIELDS:
        count = getattr(w, name)
        if count:
            lhs += count * lhs_type_coefficient(SING_TAGS[name], alpha)
    m = w.total_degree
    rhs = (3 * alpha - alpha * alpha) * m * m - 3 * alpha * m
    return lhs, rhs


def hirzebruch_slack(w: WeakCombinatorics) -> Fraction:
    """Margin of the final inequality; the constraint holds iff slack >= 0."""
    gain = (
        27 * w.l
        + 8 * w.k
        + w.n2
        + Fraction(3, 4) * w.n3
    )
    cost = (
        w.d
        + Fraction(5, 2) * w.t3
        + 5 * w.t5
        + Fraction(29, 4) * w.t7
        + Fraction(23, 2) * w.t11
        + Fraction(79, 8) * w.d14
    )
    return gain - cost


# Reference coefficient data the derivation is checked against: the final
# inequality's printed coefficients, and the printed per-type left-side list
# whose A7 entry disagrees with exact evaluation (189/4 vs computed 189/16;
# the final 29/4 is consistent only with 189/16).
FINAL_COEFFS_REFERENCE = {
    "l": Fraction(27),
    "k": Fraction(8),
    "n2": Fraction(1),
    "n3": Fraction(3, 4),
    "d": Fraction(1),
    "t3": Fraction(5, 2),
    "t5": Fraction(5),
    "t7": Fraction(29, 4),
    "t11": Fraction(23, 2),
    "d14": Fraction(79, 8),
}

INTERMEDIATE_COEFFS_REFERENCE = {
    "n2": Fraction(9, 4),
    "t3": Fraction(45, 8),
    "n3": Fraction(117, 16),
    "t5": Fraction(35, 4),
    "t7": Fraction(189, 4),
    "t11": Fraction(143, 8),
    "d14": Fraction(719, 32),
}


@dataclass(frozen=True)
class DerivationReport:
    """Symbolic re-derivation of the inequality at alpha = 1/2.

    `final_coefficients` maps each variable to its coefficient in the
    normalized form gain >= cost (all positive), `intermediate_computed`
    holds the exact per-type lhs coefficients, and `intermediate_mismatches`
    lists the types whose computed value differs from the quoted list.
    """

    alpha: Fraction
    intermediate_computed: dict[str, Fraction]
    intermediate_reference: dict[str, Fraction]
    intermediate_mismatches: tuple[str, ...]
    final_coefficients: dict[str, Fraction]
    final_matches_reference: bool

    def as_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "intermediate_computed": {k: str(v) for k, v in self.intermediate_computed.items()},
            "intermediate_reference": {k: str(v) for k, v in self.intermediate_reference.items()},
            "intermediate_mismatches": list(self.intermediate_mismatches),
            "final_coefficients": {k: str(v) for k, v in self.final_coefficients.items()},
            "final_matches_reference": self.final_matches_reference,
        }


def derive_inequality(alpha: Fraction | int = Fraction(1, 2)) -> DerivationReport:
    """Re-derive the inequality's coefficients exactly at the given weight.

    Combines the orbifold bound with the naive-count substitution
    m^2 = d + 4k + 9l + sum(weight * count) and normalizes by 4 so the
    coefficient vector can be compared with the reference form.
    """
    alpha = Fraction(alpha)
    variables = ("d", "k", "l") + SING_FIELDS
    # rhs - lhs of the orbifold bound as a linear form over the variables
    linear: dict[str, Fraction] = {v: Fraction(0) for v in variables}
    quad = 3 * alpha - alpha * alpha  # multiplies m^2 before substitution
    # m^2 substitution from the naive count
    m2_sub = {"d": Fraction(1), "k": Fraction(4), "l": Fraction(9)}
    m2_sub.update({name: Fraction(COUNT_WEIGHTS[name]) for name in SING_FIELDS})
    for v, c in m2_sub.items():
        linear[v] += quad * c
    for v, c in (("d", 1), ("k", 2), ("l", 3)):
        linear[v] -= 3 * alpha * c
    intermediate: dict[str, Fraction] = {}
    for name in SING_FIELDS:
        coeff = lhs_type_coefficient(SING_TAGS[name], alpha)
        intermediate[name] = coeff
        linear[name] -= coeff
    # normalize: multiply by 4 and flip signs on the cost side so the
    # comparison form lists every coefficient positively
    final: dict[str, Fraction] = {}
    for v in variables:
        scaled = 4 * linear[v]
        final[v] = scaled if v in ("k", "l", "n2", "n3") else -scaled
    mismatches = tuple(
        name
        for name in SING_FIELDS
        if intermediate[name] != INTERMEDIATE_COEFFS_REFERENCE[name]
    )
    return DerivationReport(
        alpha=alpha,
        intermediate_computed=intermediate,
        intermediate_reference=dict(INTERMEDIATE_COEFFS_REFERENCE),
        intermediate_mismatches=mismatches,
        final_coefficients=final,
        final_matches_reference=(final == FINAL_COEFFS_REFERENCE),
    )


@dataclass(frozen=True)
class AdmissibleRecord:
    combinatorics: WeakCombinatorics
    slack: Fraction
    passes: bool
    bmy_hypothesis: bool


def enumerate_admissible(
    d: int, k: int, l: int, cap: int = 200
) -> list[AdmissibleRecord]:
    """All singularity-count vectors satisfying the naive count exactly.

    Solutions are emitted in ascending lexicographic order of
    (n2, t3, n3, t5, t7, t11, d14), each annotated with its inequality slack
    and pass flag.  The count's left side must not exceed `cap`.
    """
    base = WeakCombinatorics(d, k, l)
    lhs = naive_count_residual(base)
    if lhs > cap:
        raise EnumerationSizeError(
            f"naive-count left side {lhs} exceeds the cap {cap}"
        )
    out: list[AdmissibleRecord] = []
    w2, w3, wn3, w5, w7, w11, w14 = (COUNT_WEIGHTS[n] for n in SING_FIELDS)
    for n2 in range(lhs // w2 + 1):
        r2 = lhs - w2 * n2
        for t3 in range(r2 // w3 + 1):
            r3 = r2 - w3 * t3
            for n3 in range(r3 // wn3 + 1):
                rn3 = r3 - wn3 * n3
                for t5 in range(rn3 // w5 + 1):
                    r5 = rn3 - w5 * t5
                    for t7 in range(r5 // w7 + 1):
                        r7 = r5 - w7 * t7
                        for t11 in range(r7 // w11 + 1):
                            r11 = r7 - w11 * t11
                            if r11 % w14:
                                continue
                            w = WeakCombinatorics(
                                d, k, l, n2, t3, n3, t5, t7, t11, r11 // w14
                            )
                            slack = hirzebruch_slack(w)
                            out.append(
                                AdmissibleRecord(
                                    combinatorics=w,
                                    slack=slack,
                                    passes=slack >= 0,
                                    bmy_hypothesis=bmy_applicable(w),
                                )
                            )
    return out
