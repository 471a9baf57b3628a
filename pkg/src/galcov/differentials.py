"""q-differential bookkeeping: eigendivisors, dimensions, traces, and
multiplicities for spaces of q-differentials bounded by the pullback of an
integral divisor on the base.

The dimension formula

    (2q-1)(g_S - 1) + deg Gamma
        + sum_C r_C [ (q-1)(1 - 1/o(C)) + frac((q - 1 - u_{chi,C}) / o(C)) ]

is exact except for a single character chi_delta that picks up +1; the
correction is present exactly when Gamma is trivial and either q = 1 or the
cover has genus 1.  The admissibility window (genus >= 2 with q >= 1, genus
1 with any q, genus 0 with q <= 1) is enforced; outside it the formula does
not compute dimensions and callers get a hard error rather than a number.

Traces of nontrivial deck transformations are evaluated by the fixed-point
formula and returned as floating-point complex numbers together with the
exact list of root-of-unity terms; downstream consumers reconstruct exact
integer multiplicities from them, so no cyclotomic arithmetic is needed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .cover import CharLike, ClassKey, CoverSpec
from .errors import (
    AdmissibilityViolation,
    IdentityElement,
    InternalInconsistency,
    NonIntegralInvariant,
    NotAbelian,
    NTableMismatch,
    UnsupportedBaseGenus,
)
from .groups import Character, GroupElement


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def check_admissible(genus_cover: int, q: int):
    if genus_cover >= 2 and q >= 1:
        return
    if genus_cover == 1:
        return
    if genus_cover == 0 and q <= 1:
        return
    raise AdmissibilityViolation(genus_cover, q)


@dataclass(frozen=True)
class AlphaBeta:
    """Euclidean split q(o(C)-1) - u_{conj chi,C} = alpha * o(C) + beta."""

    alpha: int
    beta: int


def alpha_beta(cover: CoverSpec, chi: CharLike, class_key: ClassKey, q: int) -> AlphaBeta:
    o = cover.class_order(class_key)
    u_conj = cover.u_value(cover.conjugate_character(chi), class_key)
    alpha, beta = divmod(q * (o - 1) - u_conj, o)
    return AlphaBeta(alpha, beta)


@dataclass(frozen=True)
class OmegaDivisor:
    """Divisor of the normalized q-differential generator attached to chi on a
    genus-0 base, plus its symbolic presentation over dz^q."""

    cover: CoverSpec
    character: CharLike
    q: int
    branch_exponents: tuple[int, ...]
    infinity_exponent: int
    linear_factor_powers: tuple[tuple[object, int], ...]  # (label, alpha) per branch value

    def degree(self) -> int:
        n = self.cover.degree
        return (
            sum(
                n * e // self.cover.point_order(j)
                for j, e in enumerate(self.branch_exponents)
            )
            + n * self.infinity_exponent
        )

    def presentation(self) -> str:
        denom = [f"h[{_conj_name(self.cover, self.character)}]"]
        denom.extend(
            f"(z-{label})^{alpha}" if alpha != 1 else f"(z-{label})"
            for label, alpha in self.linear_factor_powers
            if alpha
        )
        return f"(dz)^{self.q} / ({' * '.join(denom)})"


def _conj_name(cover: CoverSpec, chi: CharLike):
    return cover.conjugate_character(chi)


def omega_divisor(cover: CoverSpec, chi: CharLike, q: int = 1) -> OmegaDivisor:
    """Exponents of the normalized q-differential generator: beta at every
    branch preimage, and t_{conj chi} - 2q + sum_C r_C alpha at infinity."""
    if cover.base_genus != 0:
        raise UnsupportedBaseGenus("explicit generators need a genus-0 base")
    splits = {cls.key: alpha_beta(cover, chi, cls.key, q) for cls in cover.branch_classes}
    branch = tuple(splits[cover.point_class(j)].beta for j in range(len(cover.branch_points)))
    conj = cover.conjugate_character(chi)
    infinity = cover.t_chi(conj) - 2 * q + sum(
        cls.count * splits[cls.key].alpha for cls in cover.branch_classes
    )
    powers = tuple(
        (cover.branch_points[j].label, splits[cover.point_class(j)].alpha)
        for j in range(len(cover.branch_points))
    )
    return OmegaDivisor(cover, chi, q, branch, infinity, powers)


@dataclass(frozen=True)
class DeltaInfo:
    """Whether one character receives the +1 dimension correction, and which."""

    delta: int
    character: CharLike | None


def raw_dimension_value(cover: CoverSpec, chi: CharLike, q: int, gamma_degree: int) -> int:
    """The uncorrected dimension formula; an integer for consistent branch data."""
    value = (
        Fraction((2 * q - 1) * (cover.base_genus - 1) + gamma_degree)
        + sum(
            cls.count
            * (
                (q - 1) * (1 - Fraction(1, cls.order))
                + _frac(Fraction(q - 1 - cover.u_value(chi, cls.key), cls.order))
            )
            for cls in cover.branch_classes
        )
    )
    if value.denominator != 1:
        raise NonIntegralInvariant(chi, f"dimension value {value}")
    return int(value)


def same_character(cover: CoverSpec, a: CharLike, b: CharLike) -> bool:
    """Equality of characters as the formulas see them.

    Abelian characters compare exactly.  Generic characters compare by their
    values on the branch classes, which determine them whenever the branch
    classes generate the group; an unramified generic cover carries no such
    data, so there the supplied names decide.
    """
    if isinstance(a, Character) and isinstance(b, Character):
        return a == b
    if isinstance(a, Character) or isinstance(b, Character):
        return False
    if cover.branch_classes:
        return all(
            cover.u_value(a, cls.key) == cover.u_value(b, cls.key)
            for cls in cover.branch_classes
        )
    return a.name == b.name


def delta_info(cover: CoverSpec, q: int = 1, gamma_degree: int = 0) -> DeltaInfo:
    """Locate the dimension correction.

    The correction exists iff the auxiliary divisor is trivial and either
    q = 1 or the cover has genus 1.  For genus >= 2 (or genus 0), q must then
    be 1 and the corrected character is trivial.  A genus-1 cover of the line
    carries the correction at the unique character whose raw value is -1,
    found by scanning; a genus-1 cover of a genus-1 base is unramified, every
    raw value vanishes, and the trivial character is corrected.
    """
    if gamma_degree < 0:
        raise ValueError("the auxiliary divisor must be integral")
    g_x = cover.genus()
    check_admissible(g_x, q)
    if gamma_degree != 0 or (g_x != 1 and q != 1):
        return DeltaInfo(0, None)
    if g_x != 1:
        return DeltaInfo(1, cover.trivial_character)
    if cover.base_genus == 1:
        return DeltaInfo(1, cover.trivial_character)
    candidates = [
        chi for chi in cover.characters() if raw_dimension_value(cover, chi, q, 0) == -1
    ]
    if len(candidates) != 1:
        raise InternalInconsistency(
            f"expected exactly one character with raw value -1, found {len(candidates)}"
        )
    chi_delta = candidates[0]
    branching_orders = [cls.order for cls in cover.branch_classes]
    expected_trivial = (q - 1) % math.lcm(*branching_orders) == 0 if branching_orders else True
    if chi_delta.is_trivial != expected_trivial:
        raise InternalInconsistency(
            "corrected character fails the congruence criterion for triviality"
        )
    return DeltaInfo(1, chi_delta)


def dim_omega_chi(cover: CoverSpec, chi: CharLike, q: int = 1, gamma_degree: int = 0) -> int:
    """Dimension of the chi-part of q-differentials bounded by the pullback of
    an integral degree-``gamma_degree`` divisor on the base."""
    info = delta_info(cover, q, gamma_degree)
    value = raw_dimension_value(cover, chi, q, gamma_degree)
    if info.delta and same_character(cover, chi, info.character):
        value += 1
    if value < 0:
        raise InternalInconsistency(f"negative dimension {value} at {chi}")
    return value


def total_dim_omega(cover: CoverSpec, q: int = 1, gamma_degree: int = 0) -> int:
    """(2q-1)(g-1) + n * deg Gamma + delta, the full space dimension."""
    info = delta_info(cover, q, gamma_degree)
    return (2 * q - 1) * (cover.genus() - 1) + cover.degree * gamma_degree + info.delta


# -- traces -------------------------------------------------------------------


@dataclass(frozen=True)
class FixedPointTerm:
    """``multiplicity`` fixed points whose local rotation is zeta_order^exponent."""

    order: int
    exponent: int
    multiplicity: int

    def value(self, q: int) -> complex:
        zeta = cmath.exp(2j * cmath.pi * self.exponent / self.order)
        return self.multiplicity * zeta**q / (1 - zeta)


@dataclass(frozen=True)
class EichlerTrace:
    """Trace of a deck transformation on a q-differential space.

    ``value`` is the floating-point evaluation; the delta term and the exact
    fixed-point terms are kept alongside so integer data can be reconstructed
    without cyclotomic arithmetic.
    """

    value: complex
    q: int
    delta: int
    delta_character_angle: Fraction | None
    terms: tuple[FixedPointTerm, ...]


def trace_from_fixed_points(
    terms: Sequence[FixedPointTerm],
    q: int,
    delta: int = 0,
    delta_character_angle: Fraction | None = None,
) -> EichlerTrace:
    """Assemble a trace from explicit fixed-point data (generic-group route)."""
    value = sum((term.value(q) for term in terms), 0j)
    if delta:
        if delta_character_angle is None:
            raise ValueError("delta = 1 needs the corrected character's value")
        value += delta * cmath.exp(2j * cmath.pi * float(delta_character_angle))
    return EichlerTrace(value, q, delta, delta_character_angle, tuple(terms))


def eichler_trace(
    cover: CoverSpec, tau: GroupElement, q: int = 1, gamma_degree: int = 0
) -> EichlerTrace:
    """Fixed-point-formula trace of a nontrivial deck transformation on the
    space of q-differentials bounded by a pullback divisor.

    A branch value of class sigma contributes n / o(sigma) fixed points when
    tau lies in the cyclic group generated by sigma, each with local rotation
    zeta_{o(sigma)}^beta where sigma^beta = tau.
    """
    if not cover.is_abelian:
        raise NotAbelian(
            "fixed points are computed for abelian covers; supply FixedPointTerm "
            "data and use trace_from_fixed_points otherwise"
        )
    group = cover.group
    if group.element_order(tau) == 1:
        raise IdentityElement("the identity trace is the total dimension; use total_dim_omega")
    info = delta_info(cover, q, gamma_degree)
    n = cover.degree
    terms = []
    for cls in cover.branch_classes:
        beta = group.power_index(cls.key, tau)
        if beta is None:
            continue
        terms.append(FixedPointTerm(cls.order, beta % cls.order, cls.count * (n // cls.order)))
    angle = None
    if info.delta:
        angle = group.pairing(info.character, tau)
    return trace_from_fixed_points(terms, q, info.delta, angle)


# -- Chevalley-Weil multiplicities ---------------------------------------------


@dataclass(frozen=True)
class IrrepClassData:
    """An irreducible representation described by its dimension and, per
    class, the multiplicities of the eigenvalues zeta_{o(C)}^alpha of a class
    representative.

    ``character`` identifies one-dimensional representations explicitly; it
    is filled in when the data is built from a character and is used to
    detect the corrected character.
    """

    dim: int
    n_table: tuple[tuple[ClassKey, tuple[int, ...]], ...]
    character: CharLike | None = None

    @property
    def n_map(self) -> dict[ClassKey, tuple[int, ...]]:
        return dict(self.n_table)

    @classmethod
    def from_character(cls, cover: CoverSpec, chi: CharLike) -> "IrrepClassData":
        rows = tuple(
            (
                bcls.key,
                tuple(
                    1 if alpha == cover.u_value(chi, bcls.key) else 0
                    for alpha in range(bcls.order)
                ),
            )
            for bcls in cover.branch_classes
        )
        return cls(1, rows, chi)

    def row(self, cover: CoverSpec, key: ClassKey) -> tuple[int, ...]:
        try:
            row = self.n_map[key]
        except KeyError:
            raise NTableMismatch(f"no eigenvalue multiplicities supplied for class {key}") from None
        if len(row) != cover.class_order(key):
            raise NTableMismatch(
                f"class {key} has order {cover.class_order(key)}, "
                f"but {len(row)} multiplicities were supplied"
            )
        if sum(row) != self.dim:
            raise NTableMismatch(
                f"eigenvalue multiplicities at class {key} sum to {sum(row)}, "
                f"expected the dimension {self.dim}"
            )
        return row


def _as_irrep(cover: CoverSpec, rho: Union[IrrepClassData, CharLike]) -> IrrepClassData:
    if isinstance(rho, IrrepClassData):
        return rho
    return IrrepClassData.from_character(cover, rho)


def _matches_delta_character(cover: CoverSpec, rho: IrrepClassData, chi_delta: CharLike) -> bool:
    if rho.dim != 1:
        return False
    if rho.character is not None:
        return same_character(cover, rho.character, chi_delta)
    # fall back to comparing eigenvalue rows on the branch classes
    return all(
        rho.row(cover, cls.key)[cover.u_value(chi_delta, cls.key)] == 1
        for cls in cover.branch_classes
    )


def cw_multiplicity(
    cover: CoverSpec,
    rho: Union[IrrepClassData, CharLike],
    q: int = 1,
    gamma_degree: int = 0,
) -> int:
    """Multiplicity of an irreducible representation in the deck action on
    q-differentials bounded by a pullback divisor."""
    rho = _as_irrep(cover, rho)
    info = delta_info(cover, q, gamma_degree)
    value = Fraction(rho.dim * ((2 * q - 1) * (cover.base_genus - 1) + gamma_degree))
    for cls in cover.branch_classes:
        row = rho.row(cover, cls.key)
        value += cls.count * sum(
            n_alpha
            * ((q - 1) * (1 - Fraction(1, cls.order)) + _frac(Fraction(q - 1 - alpha, cls.order)))
            for alpha, n_alpha in enumerate(row)
        )
    if value.denominator != 1:
        raise NTableMismatch(f"multiplicity {value} is not an integer; eigenvalue table inconsistent")
    result = int(value)
    if info.delta and _matches_delta_character(cover, rho, info.character):
        result += 1
    return result
