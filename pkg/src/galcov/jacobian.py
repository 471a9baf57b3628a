"""Dimensions in the isogeny decomposition of the Jacobian of a cover.

Multiplicities of irreducibles in the analytic and rational representations
of the deck group on the Jacobian, dimensions of the isotypical abelian
subvarieties, and, for abelian deck groups, the cyclic-quotient pieces: one
per Galois orbit of characters, realized as the primitive Prym variety of
the corresponding cyclic quotient cover.  Only integers are computed here;
no period matrices, polarizations, or isogenies are constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cover import CharLike, ClassKey, CoverSpec
from .differentials import IrrepClassData
from .errors import InternalInconsistency, NonIntegralDimension, NotAbelian, NTableMismatch
from .groups import Character, CharacterOrbit, euler_phi


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _as_irrep(cover: CoverSpec, rho: Union[IrrepClassData, CharLike]) -> IrrepClassData:
    if isinstance(rho, IrrepClassData):
        return rho
    return IrrepClassData.from_character(cover, rho)


def _is_trivial_rep(cover: CoverSpec, rho: IrrepClassData) -> bool:
    if rho.dim != 1:
        return False
    if rho.character is not None:
        return rho.character.is_trivial
    return all(rho.row(cover, cls.key)[0] == 1 for cls in cover.branch_classes)


def analytic_multiplicity(cover: CoverSpec, rho: Union[IrrepClassData, CharLike]) -> int:
    """Multiplicity of the irreducible in the deck action on the tangent
    space of the Jacobian at the origin."""
    rho = _as_irrep(cover, rho)
    value = Fraction(rho.dim * (cover.base_genus - 1))
    if _is_trivial_rep(cover, rho):
        value += 1
    for cls in cover.branch_classes:
        row = rho.row(cover, cls.key)
        value += cls.count * sum(
            n_alpha * Fraction(alpha, cls.order) for alpha, n_alpha in enumerate(row)
        )
    if value.denominator != 1:
        raise NTableMismatch(f"analytic multiplicity {value} is not an integer")
    return int(value)


def rational_multiplicity(cover: CoverSpec, rho: Union[IrrepClassData, CharLike]) -> int:
    """Multiplicity of the irreducible in the complexified action on the
    rational homology of the Jacobian."""
    rho = _as_irrep(cover, rho)
    value = rho.dim * (2 * cover.base_genus - 2)
    if _is_trivial_rep(cover, rho):
        value += 2
    for cls in cover.branch_classes:
        row = rho.row(cover, cls.key)
        value += cls.count * (rho.dim - row[0])
    return value


@dataclass(frozen=True)
class RationalIrrepData:
    """A rational irreducible: complex dimension d of a constituent, the
    degree k of its character field, the Schur index m, and the per-class
    invariant-subspace dimensions N_{C,0}.

    ``trivial`` may be set explicitly; when left None it is inferred from the
    numerical data (exact over a genus-0 base, where only the trivial
    representation fixes every branch class).
    """

    dim: int
    field_degree: int
    schur_index: int
    invariant_dims: tuple[tuple[ClassKey, int], ...]
    trivial: bool | None = None

    def __post_init__(self):
        if self.dim < 1 or self.field_degree < 1 or self.schur_index < 1:
            raise ValueError("dimension, field degree, and Schur index must be positive")
        if self.dim % self.schur_index:
            raise ValueError(
                f"Schur index {self.schur_index} does not divide the dimension {self.dim}"
            )

    @property
    def n0_map(self) -> dict[ClassKey, int]:
        return dict(self.invariant_dims)

    def n0(self, cover: CoverSpec, key: ClassKey) -> int:
        try:
            value = self.n0_map[key]
        except KeyError:
            raise NTableMismatch(f"no invariant dimension supplied for class {key}") from None
        if not 0 <= value <= self.dim:
            raise NTableMismatch(f"invariant dimension {value} at class {key} out of range")
        return value

    def is_trivial(self, cover: CoverSpec) -> bool:
        if self.trivial is not None:
            return self.trivial
        return (
            self.dim == 1
            and self.field_degree == 1
            and self.schur_index == 1
            and all(self.n0(cover, cls.key) == 1 for cls in cover.branch_classes)
        )

    @classmethod
    def from_character_orbit(cls, cover: CoverSpec, orbit: CharacterOrbit) -> "RationalIrrepData":
        chi = orbit.representative
        rows = tuple(
            (bcls.key, 1 if cover.u_value(chi, bcls.key) == 0 else 0)
            for bcls in cover.branch_classes
        )
        return cls(1, orbit.field_degree, 1, rows, trivial=orbit.order == 1)


def dim_A_W(cover: CoverSpec, w: RationalIrrepData) -> int:
    """Dimension of the isotypical abelian subvariety attached to a rational
    irreducible."""
    k, d = w.field_degree, w.dim
    value = Fraction(k * d * d * (cover.base_genus - 1))
    if w.is_trivial(cover):
        value += 1
    for cls in cover.branch_classes:
        value += Fraction(k * d, 2) * cls.count * (d - w.n0(cover, cls.key))
    if value.denominator != 1:
        raise NonIntegralDimension(f"dim A_W = {value} is not an integer")
    return int(value)


def dim_B_W(cover: CoverSpec, w: RationalIrrepData) -> int:
    """Dimension of the primitive factor B_W, of which A_W is the
    (d/m)-th power up to isogeny."""
    k, d, m = w.field_degree, w.dim, w.schur_index
    value = Fraction(k * d * m * (cover.base_genus - 1))
    if w.is_trivial(cover):
        value += 1
    for cls in cover.branch_classes:
        value += Fraction(k * m, 2) * cls.count * (d - w.n0(cover, cls.key))
    if value.denominator != 1:
        raise NonIntegralDimension(f"dim B_W = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class QuotientPiece:
    """One cyclic quotient of the deck group and its subvariety dimension."""

    orbit: CharacterOrbit
    quotient_order: int
    dim: int


@dataclass(frozen=True)
class PrymPiece:
    """A cyclic quotient cover and its primitive Prym dimension, computed both
    from the kernel sum and from the quotient cover's own branch data."""

    orbit: CharacterOrbit
    quotient_order: int
    quotient_genus: int
    dim: int
    dim_from_quotient: int
    nontrivial: bool


def cyclic_quotient_dims(cover: CoverSpec) -> tuple[QuotientPiece, ...]:
    """One entry per cyclic quotient of an abelian deck group (equivalently
    per Galois orbit of characters): dim B_Q = phi(|Q|) (g_S - 1 + delta +
    sum over classes outside the kernel of r_C / 2)."""
    if not cover.is_abelian:
        raise NotAbelian("cyclic quotients are enumerated for abelian deck groups")
    pieces = []
    for orbit in cover.group.rational_character_orbits():
        chi = orbit.representative
        value = Fraction(cover.base_genus - 1) + (1 if orbit.order == 1 else 0)
        value += sum(
            Fraction(cls.count, 2)
            for cls in cover.branch_classes
            if cover.u_value(chi, cls.key) != 0
        )
        value *= orbit.field_degree
        if value.denominator != 1:
            raise NonIntegralDimension(f"dim B_Q = {value} is not an integer")
        pieces.append(QuotientPiece(orbit, orbit.order, int(value)))
    return tuple(pieces)


def _kernel_elements(cover: CoverSpec, chi: Character):
    group = cover.group
    return [x for x in group.elements() if group.u_value(chi, x) == 0]


def primitive_prym_dims(cover: CoverSpec) -> tuple[PrymPiece, ...]:
    """Primitive Prym dimensions of the cyclic quotient covers.

    For each Galois orbit the quotient cover by the kernel of a representative
    character is built explicitly; its genus feeds the cross-check formula
    phi(|Q|)/|Q| * (g_Y - 1) + delta + phi(|Q|) * sum_y r_y / (2 o(y)), which
    must agree with the kernel-sum dimension.  A piece is flagged nontrivial
    per the quotient-genus criterion: g_Y >= 1, except for a nontrivial
    quotient with g_Y = g_S = 1.
    """
    if not cover.is_abelian:
        raise NotAbelian("cyclic quotients are enumerated for abelian deck groups")
    pieces = []
    for piece in cyclic_quotient_dims(cover):
        chi = piece.orbit.representative
        quotient = cover.quotient(_kernel_elements(cover, chi))
        g_y = quotient.genus()
        e = piece.quotient_order
        value = Fraction(euler_phi(e), e) * (g_y - 1) + (1 if e == 1 else 0)
        value += euler_phi(e) * sum(
            Fraction(cls.count, 2 * cls.order) for cls in quotient.branch_classes
        )
        if value.denominator != 1:
            raise NonIntegralDimension(f"quotient-form dim = {value} is not an integer")
        nontrivial = g_y >= 1 and not (e > 1 and g_y == 1 and cover.base_genus == 1)
        pieces.append(PrymPiece(piece.orbit, e, g_y, piece.dim, int(value), nontrivial))
    return tuple(pieces)


@dataclass(frozen=True)
class OrbitSummary:
    orbit: CharacterOrbit
    dim_A: int
    dim_B: int


@dataclass(frozen=True)
class DecompositionReport:
    """Per-character multiplicities and the full table of isotypical and
    cyclic-quotient dimensions for an abelian cover."""

    cover: CoverSpec
    analytic: tuple[tuple[Character, int], ...]
    rational: tuple[tuple[Character, int], ...]
    orbits: tuple[OrbitSummary, ...]
    quotients: tuple[PrymPiece, ...]

    @property
    def genus(self) -> int:
        return self.cover.genus()


def decompose(cover: CoverSpec) -> DecompositionReport:
    """Assemble the full decomposition report; the isotypical dimensions are
    checked to sum to the genus."""
    if not cover.is_abelian:
        raise NotAbelian("the decomposition report enumerates the dual group")
    chars = tuple(cover.characters())
    analytic = tuple((chi, analytic_multiplicity(cover, chi)) for chi in chars)
    rational = tuple((chi, rational_multiplicity(cover, chi)) for chi in chars)
    orbits = tuple(
        OrbitSummary(
            orbit,
            dim_A_W(cover, RationalIrrepData.from_character_orbit(cover, orbit)),
            dim_B_W(cover, RationalIrrepData.from_character_orbit(cover, orbit)),
        )
        for orbit in cover.group.rational_character_orbits()
    )
    total = sum(summary.dim_A for summary in orbits)
    genus = cover.genus()
    if total != genus:
        raise InternalInconsistency(
            f"isotypical dimensions sum to {total}, expected the genus {genus}"
        )
    return DecompositionReport(cover, analytic, rational, orbits, primitive_prym_dims(cover))
