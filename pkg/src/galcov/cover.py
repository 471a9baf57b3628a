"""Covers of a base surface described by branch data.

A CoverSpec carries the base genus, the deck group (abelian, or a trusted
conjugacy-class table), and the finite list of branch values together with
the deck-group class attached to each by lifting small loops.  Everything
downstream (genus, t-invariants, divisor dimensions, traces, Jacobian
dimensions) is derived from this data alone.

The distinguished base point used for normalization (infinity when the base
has genus 0) is implicit and never allowed to be a branch value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from .errors import DegenerateCover, NonIntegralInvariant, NotAbelian
from .groups import (
    Character,
    ClassTable,
    GenericCharacter,
    GroupElement,
    GroupSpec,
    smith_diagonal,
)


@dataclass(frozen=True)
class Coord:
    """Exact point of the affine line: a complex number with rational parts.

    Equality of branch values is exact; callers with approximate inputs must
    rationalize them first.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Label = Union[Coord, str]
CharLike = Union[Character, GenericCharacter]
ClassKey = Union[GroupElement, str]


@dataclass(frozen=True)
class BranchPoint:
    """A branch value on the base and the class of its lifted loop."""

    label: Label
    psi: ClassKey

    def __str__(self):
        return f"{self.label}:{self.psi}"


@dataclass(frozen=True)
class BranchClass:
    """One nontrivial class together with the branch values carrying it."""

    key: ClassKey
    order: int
    points: tuple[int, ...]  # indices into CoverSpec.branch_points

    @property
    def count(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CharacterInvariants:
    """Per-character branch summary: the t-invariant and the u-row."""

    character: CharLike
    t: int
    u_row: tuple[tuple[ClassKey, int], ...]


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "non-integral" or "degenerate"
    character: CharLike
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[ValidationIssue, ...] = ()

    def raise_for_status(self):
        if self.ok:
            return
        issue = self.issues[0]
        if issue.kind == "non-integral":
            raise NonIntegralInvariant(issue.character, issue.detail)
        raise DegenerateCover(issue.character)


def _class_sort_key(key: ClassKey):
    if isinstance(key, GroupElement):
        return (0, key.exponents)
    return (1, key)


@dataclass(frozen=True)
class CoverSpec:
    """Branch data of a Galois cover over a base of the given genus."""

    base_genus: int
    group: GroupSpec | ClassTable
    branch_points: tuple[BranchPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branch_points", tuple(self.branch_points))
        if self.base_genus < 0:
            raise ValueError("base genus must be nonnegative")
        labels = set()
        for bp in self.branch_points:
            if self.base_genus == 0 and not isinstance(bp.label, Coord):
                raise ValueError(
                    f"genus-0 branch values must be exact coordinates, got {bp.label!r}"
                )
            if bp.label in labels:
                raise ValueError(f"duplicate branch value {bp.label}")
            labels.add(bp.label)
            if self.class_order(bp.psi) == 1:
                raise ValueError(f"branch value {bp.label} has trivial class")

    # -- group-mode dispatch ----------------------------------------------

    @property
    def is_abelian(self) -> bool:
        return isinstance(self.group, GroupSpec)

    def _require_abelian(self):
        if not self.is_abelian:
            raise NotAbelian("operation needs an abelian deck group")
        return self.group

    @property
    def degree(self) -> int:
        return self.group.order if self.is_abelian else self.group.group_order

    def class_order(self, key: ClassKey) -> int:
        if self.is_abelian:
            if not isinstance(key, GroupElement):
                raise TypeError(f"abelian covers index classes by group elements, got {key!r}")
            return self.group.element_order(key)
        return self.group.record(key).order

    def characters(self) -> tuple[CharLike, ...]:
        """All characters in abelian mode; the supplied rows in generic mode."""
        if self.is_abelian:
            return tuple(self.group.characters())
        return self.group.characters

    @property
    def trivial_character(self) -> CharLike:
        if self.is_abelian:
            return self.group.trivial_character
        return GenericCharacter("1", tuple((c.key, 0) for c in self.branch_classes))

    def conjugate_character(self, chi: CharLike) -> CharLike:
        if isinstance(chi, Character):
            self._require_abelian()
            return self.group.conjugate(chi)
        row = tuple((key, (-u) % self.class_order(key)) for key, u in chi.u_values)
        return GenericCharacter(f"~{chi.name}", row)

    def u_value(self, chi: CharLike, key: ClassKey) -> int:
        if isinstance(chi, Character):
            self._require_abelian()
            return self.group.u_value(chi, key)
        try:
            return chi.u_map[key]
        except KeyError:
            raise ValueError(
                f"character {chi} supplies no value on class {key}"
            ) from None

    # -- branch bookkeeping -------------------------------------------------

    @cached_property
    def branch_classes(self) -> tuple[BranchClass, ...]:
        """Distinct branch classes, each with its point indices, sorted."""
        grouped: dict[ClassKey, list[int]] = {}
        for j, bp in enumerate(self.branch_points):
            grouped.setdefault(bp.psi, []).append(j)
        return tuple(
            BranchClass(key, self.class_order(key), tuple(points))
            for key, points in sorted(grouped.items(), key=lambda kv: _class_sort_key(kv[0]))
        )

    def branch_class(self, key: ClassKey) -> BranchClass:
        for cls in self.branch_classes:
            if cls.key == key:
                return cls
        raise KeyError(f"no branch values of class {key}")

    def branch_count(self, key: ClassKey) -> int:
        for cls in self.branch_classes:
            if cls.key == key:
                return cls.count
        return 0

    def point_class(self, j: int) -> ClassKey:
        return self.branch_points[j].psi

    def point_order(self, j: int) -> int:
        return self.class_order(self.branch_points[j].psi)

    # -- invariants -----------------------------------------------------------

    def t_fraction(self, chi: CharLike) -> Fraction:
        return sum(
            (Fraction(cls.count * self.u_value(chi, cls.key), cls.order) for cls in self.branch_classes),
            Fraction(0),
        )

    def t_chi(self, chi: CharLike) -> int:
        """The t-invariant: pole order at the base point of the normalized
        eigenfunction attached to chi.  Raises if the branch data is bad."""
        t = self.t_fraction(chi)
        if t.denominator != 1:
            raise NonIntegralInvariant(chi, f"t = {t}")
        return int(t)

    def validate(self) -> ValidationReport:
        """Necessary conditions on the branch data.

        Checks integrality of every t-invariant and, on a genus-0 base, strict
        positivity at nontrivial characters (failure means the would-be fibered
        product is reducible).  For positive base genus these conditions are
        necessary but not known to be sufficient for existence.
        """
        issues = []
        for chi in self.characters():
            t = self.t_fraction(chi)
            if t.denominator != 1:
                issues.append(ValidationIssue("non-integral", chi, f"t = {t}"))
            elif self.base_genus == 0 and t == 0 and not chi.is_trivial:
                issues.append(ValidationIssue("degenerate", chi))
        return ValidationReport(not issues, tuple(issues))

    def genus(self) -> int:
        """Genus of the covering surface, by Riemann-Hurwitz."""
        n = self.degree
        g = (
            1
            + n * (self.base_genus - 1)
            + sum(
                Fraction(n * cls.count, 2 * cls.order) * (cls.order - 1)
                for cls in self.branch_classes
            )
        )
        if isinstance(g, Fraction):
            if g.denominator != 1:
                raise NonIntegralInvariant(None, f"genus = {g}")
            g = int(g)
        return g

    def character_invariants(self) -> tuple[CharacterInvariants, ...]:
        return tuple(
            CharacterInvariants(
                chi,
                self.t_chi(chi),
                tuple((cls.key, self.u_value(chi, cls.key)) for cls in self.branch_classes),
            )
            for chi in self.characters()
        )

    # -- quotients ---------------------------------------------------------

    def quotient(self, subgroup_generators: Sequence[GroupElement]) -> "CoverSpec":
        """Cover of the same base by the quotient of the deck group.

        The quotient group is re-expressed as a product of cyclic factors in
        ascending-divisibility form; branch values whose class dies in the
        quotient are dropped.
        """
        return self.quotient_projection(subgroup_generators)[0]

    def quotient_projection(self, subgroup_generators: Sequence[GroupElement]):
        """The quotient cover together with the projection map on elements."""
        group = self._require_abelian()
        gens = [group.check_element(g) for g in subgroup_generators]
        rank = group.rank
        if rank == 0:
            return CoverSpec(self.base_genus, GroupSpec(()), ()), lambda x: GroupElement(())
        columns = [
            [m if i == j else 0 for i in range(rank)]
            for j, m in enumerate(group.cyclic_orders)
        ] + [list(g.exponents) for g in gens]
        diag, u = smith_diagonal([list(row) for row in zip(*columns)])
        kept = [i for i, d in enumerate(diag) if d != 1]
        new_group = GroupSpec(tuple(diag[i] for i in kept))

        def project(x: GroupElement) -> GroupElement:
            image = [sum(u[i][k] * x.exponents[k] for k in range(rank)) for i in range(rank)]
            return new_group.element([image[i] for i in kept])

        points = tuple(
            BranchPoint(bp.label, project(bp.psi))
            for bp in self.branch_points
            if new_group.element_order(project(bp.psi)) > 1
        )
        return CoverSpec(self.base_genus, new_group, points), project


def cover_from_class_table(base_genus: int, table: ClassTable) -> CoverSpec:
    """Synthesize a CoverSpec from per-class branch counts.

    Branch values get opaque labels ``<class_id>#<k>`` (integer coordinates
    1, 2, ... on a genus-0 base); the per-class counts recorded in the table
    are consumed here and re-derived from the point list afterwards.
    """
    points = []
    counter = 0
    for rec in table.classes:
        for k in range(rec.branch_count):
            counter += 1
            label = Coord(Fraction(counter)) if base_genus == 0 else f"{rec.class_id}#{k + 1}"
            points.append(BranchPoint(label, rec.class_id))
    return CoverSpec(base_genus, table, tuple(points))
