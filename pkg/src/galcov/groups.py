"""Finite abelian groups, their characters, and generic conjugacy-class data.

Elements and characters of a product of cyclic groups are both encoded as
integer exponent vectors, one residue per cyclic factor.  All pairings reduce
to exact rational arithmetic on those vectors; no floating-point roots of
unity appear anywhere in this module.

Non-abelian groups are never enumerated.  A ClassTable is trusted input
carrying exactly the per-conjugacy-class data the dimension formulas consume:
the element order of each class and, optionally, rows of one-dimensional
character values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping, Sequence


def euler_phi(n: int) -> int:
    """Euler totient of a positive integer, by trial-division factoring."""
    if n < 1:
        raise ValueError(f"euler_phi needs a positive integer, got {n}")
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class GroupElement:
    """Element of a product of cyclic groups, one residue per factor."""

    exponents: tuple[int, ...]

    def __str__(self):
        return "g(" + ",".join(str(a) for a in self.exponents) + ")"


@dataclass(frozen=True)
class Character:
    """Character of a product of cyclic groups; the zero vector is trivial."""

    exponents: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __str__(self):
        return "chi(" + ",".join(str(k) for k in self.exponents) + ")"


@dataclass(frozen=True)
class CharacterOrbit:
    """Galois orbit of a character: all powers coprime to its order.

    Each orbit corresponds to one cyclic quotient of the group, of order
    ``order``; ``field_degree`` is phi(order), the degree of the cyclotomic
    field the orbit's values generate.
    """

    characters: tuple[Character, ...]
    order: int
    field_degree: int

    @property
    def representative(self) -> Character:
        return self.characters[0]


@dataclass(frozen=True)
class GroupSpec:
    """Finite abelian group presented as a product of cyclic factors."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(m) for m in self.cyclic_orders))
        if any(m < 1 for m in self.cyclic_orders):
            raise ValueError(f"cyclic orders must be positive, got {self.cyclic_orders}")

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    # -- construction and validation ------------------------------------

    def element(self, exponents: Sequence[int]) -> GroupElement:
        return GroupElement(self._reduce(exponents, "element"))

    def character(self, exponents: Sequence[int]) -> Character:
        return Character(self._reduce(exponents, "character"))

    def _reduce(self, exponents, what) -> tuple[int, ...]:
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.rank:
            raise ValueError(
                f"{what} exponent vector has length {len(exponents)}, expected {self.rank}"
            )
        return tuple(e % m for e, m in zip(exponents, self.cyclic_orders))

    def check_element(self, x: GroupElement) -> GroupElement:
        if len(x.exponents) != self.rank or any(
            not 0 <= a < m for a, m in zip(x.exponents, self.cyclic_orders)
        ):
            raise ValueError(f"malformed exponent vector {x.exponents} for orders {self.cyclic_orders}")
        return x

    def check_character(self, chi: Character) -> Character:
        if len(chi.exponents) != self.rank or any(
            not 0 <= k < m for k, m in zip(chi.exponents, self.cyclic_orders)
        ):
            raise ValueError(f"malformed exponent vector {chi.exponents} for orders {self.cyclic_orders}")
        return chi

    @property
    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    @property
    def trivial_character(self) -> Character:
        return Character((0,) * self.rank)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order of exponent vectors."""
        for exps in product(*(range(m) for m in self.cyclic_orders)):
            yield GroupElement(exps)

    def characters(self) -> Iterator[Character]:
        """All characters in lexicographic order of exponent vectors."""
        for exps in product(*(range(m) for m in self.cyclic_orders)):
            yield Character(exps)

    # -- element arithmetic ----------------------------------------------

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return GroupElement(
            tuple((a + b) % m for a, b, m in zip(x.exponents, y.exponents, self.cyclic_orders))
        )

    def neg(self, x: GroupElement) -> GroupElement:
        return GroupElement(tuple((-a) % m for a, m in zip(x.exponents, self.cyclic_orders)))

    def scale(self, x: GroupElement, k: int) -> GroupElement:
        return GroupElement(tuple((k * a) % m for a, m in zip(x.exponents, self.cyclic_orders)))

    def element_order(self, x: GroupElement) -> int:
        self.check_element(x)
        return math.lcm(*(m // math.gcd(m, a) for a, m in zip(x.exponents, self.cyclic_orders)))

    def power_index(self, base: GroupElement, target: GroupElement) -> int | None:
        """Exponent k with base^k == target inside the cyclic group <base>, or None."""
        d = self.element_order(base)
        current = self.identity
        for k in range(d):
            if current == target:
                return k
            current = self.add(current, base)
        return None

    # -- character arithmetic --------------------------------------------

    def char_mul(self, a: Character, b: Character) -> Character:
        return Character(
            tuple((x + y) % m for x, y, m in zip(a.exponents, b.exponents, self.cyclic_orders))
        )

    def char_pow(self, chi: Character, k: int) -> Character:
        return Character(tuple((k * x) % m for x, m in zip(chi.exponents, self.cyclic_orders)))

    def conjugate(self, chi: Character) -> Character:
        return Character(tuple((-x) % m for x, m in zip(chi.exponents, self.cyclic_orders)))

    def character_order(self, chi: Character) -> int:
        self.check_character(chi)
        return math.lcm(*(m // math.gcd(m, k) for k, m in zip(chi.exponents, self.cyclic_orders)))

    def pairing(self, chi: Character, x: GroupElement) -> Fraction:
        """Fractional part of the exponent pairing: chi(x) = e(pairing)."""
        s = sum(Fraction(k * a, m) for k, a, m in zip(chi.exponents, x.exponents, self.cyclic_orders))
        return s - math.floor(s)

    def u_value(self, chi: Character, x: GroupElement) -> int:
        """Discrete log of chi(x) to base the primitive o(x)-th root of unity.

        Returns the unique u with 0 <= u < o(x) and chi(x) = zeta_{o(x)}^u.
        """
        self.check_character(chi)
        self.check_element(x)
        u = self.element_order(x) * self.pairing(chi, x)
        if u.denominator != 1:
            raise AssertionError(f"pairing {u} is not integral; broken invariant")
        return int(u)

    def character_of_monomial(self, monomial_exponents: Sequence[int]) -> Character:
        """Character through which the group acts on the monomial w^E.

        The l-th generator multiplies w_l by a primitive m_l-th root of unity,
        so it scales w^E by that root raised to E_l.
        """
        return self.character(monomial_exponents)

    def rational_character_orbits(self) -> tuple[CharacterOrbit, ...]:
        """Partition of the dual group into Galois orbits chi -> chi^a, gcd(a, e) = 1.

        Orbits are sorted by their lexicographically smallest member, as are
        the characters inside each orbit; the trivial orbit comes first.
        """
        orbits = []
        seen: set[Character] = set()
        for chi in self.characters():
            if chi in seen:
                continue
            e = self.character_order(chi)
            members = sorted(
                {self.char_pow(chi, a) for a in range(1, e + 1) if math.gcd(a, e) == 1},
                key=lambda c: c.exponents,
            )
            seen.update(members)
            phi = euler_phi(e)
            if len(members) != phi:
                raise AssertionError(f"orbit of {chi} has size {len(members)}, expected {phi}")
            orbits.append(CharacterOrbit(tuple(members), e, phi))
        orbits.sort(key=lambda orb: orb.representative.exponents)
        return tuple(orbits)


# -- generic (non-abelian) conjugacy-class scaffolding -----------------------


@dataclass(frozen=True)
class ClassRecord:
    """One conjugacy class: an identifier, the order of its elements, and an
    optional count of branch values carrying this class (used only when a
    cover is synthesized from class counts)."""

    class_id: str
    order: int
    branch_count: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"class order must be positive, got {self.order}")
        if self.branch_count < 0:
            raise ValueError("branch count must be nonnegative")
        if self.order == 1 and self.branch_count:
            raise ValueError("the trivial class cannot carry branch data")


@dataclass(frozen=True)
class GenericCharacter:
    """One-dimensional character of a generic group, given by its u-row.

    ``u_values`` maps each nontrivial class id to the discrete log of the
    character's value on that class, base the primitive o(C)-th root of unity.
    """

    name: str
    u_values: tuple[tuple[str, int], ...]

    @property
    def u_map(self) -> dict[str, int]:
        return dict(self.u_values)

    @property
    def is_trivial(self) -> bool:
        return not any(u for _, u in self.u_values)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ClassTable:
    """Trusted conjugacy-class data for a group that is never enumerated."""

    classes: tuple[ClassRecord, ...]
    group_order: int
    characters: tuple[GenericCharacter, ...] = ()

    def __post_init__(self):
        if self.group_order < 1:
            raise ValueError("group order must be positive")
        ids = [c.class_id for c in self.classes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate class ids")
        for rec in self.classes:
            if self.group_order % rec.order:
                raise ValueError(
                    f"class {rec.class_id} has order {rec.order}, "
                    f"not a divisor of the group order {self.group_order}"
                )
        by_id = {c.class_id: c for c in self.classes}
        for chi in self.characters:
            for cid, u in chi.u_values:
                if cid not in by_id:
                    raise ValueError(f"character {chi.name} references unknown class {cid}")
                if not 0 <= u < by_id[cid].order:
                    raise ValueError(
                        f"character {chi.name} has u = {u} outside [0, {by_id[cid].order}) at class {cid}"
                    )

    def record(self, class_id: str) -> ClassRecord:
        for rec in self.classes:
            if rec.class_id == class_id:
                return rec
        raise KeyError(class_id)

    def conjugate(self, chi: GenericCharacter) -> GenericCharacter:
        row = tuple(
            (cid, (-u) % self.record(cid).order) for cid, u in chi.u_values
        )
        return GenericCharacter(f"~{chi.name}", row)

    @classmethod
    def build(
        cls,
        classes: Sequence[tuple[str, int] | tuple[str, int, int]],
        group_order: int,
        u_table: Mapping[str, Mapping[str, int]] | None = None,
    ) -> "ClassTable":
        records = tuple(ClassRecord(*spec) for spec in classes)
        chars = ()
        if u_table:
            chars = tuple(
                GenericCharacter(name, tuple(sorted((cid, int(u)) for cid, u in row.items())))
                for name, row in sorted(u_table.items())
            )
        return cls(records, group_order, chars)


# -- integer Smith normal form (row transform tracked) -----------------------


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]]]:
    """Elementary divisors of an integer matrix, plus the row transform.

    Returns ``(diag, U)`` where U is unimodular and U @ matrix can be brought
    to diag(diag) by column operations alone; diag entries are nonnegative
    with each dividing the next.  Only the row transform is tracked because
    column operations do not change the column span.
    """
    a = [list(int(x) for x in row) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]

    t = 0
    while t < min(nrows, ncols):
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the remaining submatrix for ascending divisibility
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1
    diag = [abs(a[i][i]) for i in range(min(nrows, ncols))]
    return diag, u
