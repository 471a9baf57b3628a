"""Normalized invariant divisors and their function/differential dimensions.

A deck-invariant divisor in normal form is stored by buckets: branch value j
sits in bucket i, 0 <= i < o(C_j), and each of its preimages appears in the
divisor with exponent o(C_j) - 1 - i.  Values absent from the divisor occupy
the top bucket.  The integer p is the common exponent at the fiber over the
normalization point, and on a positive-genus base an extra integral divisor
is carried symbolically (it is never reduced; dimension queries there return
symbolic divisors on the base instead of numbers).

All numeric dimension formulas here require a genus-0 base, where the
normalization is fully explicit:

    r_chi = max(0, p + 1 + sum_C |A_{C,chi}| - t_chi)
    i_chi = max(0, t_{conj chi} - sum_C |A_{C,conj chi}| - p - 1)

with A_{C,chi} the union of buckets below u_{chi,C}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .cover import CharLike, ClassKey, CoverSpec, Label
from .errors import NonInvariantInput, NotAbelian, UnsupportedBaseGenus


@dataclass(frozen=True)
class InvariantDivisor:
    """Normalized deck-invariant divisor on a cover."""

    cover: CoverSpec
    buckets: tuple[int, ...]
    p: int = 0
    base_part: tuple[tuple[Label, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "buckets", tuple(int(i) for i in self.buckets))
        object.__setattr__(self, "base_part", tuple(self.base_part))
        if len(self.buckets) != len(self.cover.branch_points):
            raise ValueError(
                f"{len(self.buckets)} bucket entries for "
                f"{len(self.cover.branch_points)} branch values"
            )
        for j, i in enumerate(self.buckets):
            o = self.cover.point_order(j)
            if not 0 <= i < o:
                raise ValueError(f"bucket {i} out of range [0, {o}) at branch value {j}")
        if self.cover.base_genus == 0 and self.base_part:
            raise ValueError("genus-0 base: extra base divisor must be empty")

    # -- structure ---------------------------------------------------------

    def exponent(self, j: int) -> int:
        """Exponent of every preimage of branch value j."""
        return self.cover.point_order(j) - 1 - self.buckets[j]

    def bucket_sizes(self, key: ClassKey) -> tuple[int, ...]:
        """Cardinalities |B_{C,i}| for the given class."""
        cls = self.cover.branch_class(key)
        sizes = [0] * cls.order
        for j in cls.points:
            sizes[self.buckets[j]] += 1
        return tuple(sizes)

    def degree(self) -> int:
        n = self.cover.degree
        branch = sum(
            n * self.exponent(j) // self.cover.point_order(j)
            for j in range(len(self.buckets))
        )
        base = sum(e for _, e in self.base_part)
        return branch + n * self.p + n * base

    def is_integral(self) -> bool:
        return self.p >= 0 and all(e >= 0 for _, e in self.base_part)

    # -- character data ------------------------------------------------------

    def a_set(self, chi: CharLike, key: ClassKey) -> tuple[int, ...]:
        """Branch indices of class ``key`` lying in buckets below u_{chi,C}."""
        u = self.cover.u_value(chi, key)
        return tuple(j for j in self.cover.branch_class(key).points if self.buckets[j] < u)

    def a_total(self, chi: CharLike) -> int:
        return sum(len(self.a_set(chi, cls.key)) for cls in self.cover.branch_classes)

    def _require_genus0(self):
        if self.cover.base_genus != 0:
            raise UnsupportedBaseGenus(
                "numeric dimensions need a genus-0 base; use reduced_base_divisor"
            )

    def r_chi(self, chi: CharLike) -> int:
        """Dimension of the chi-part of the function space of 1/divisor."""
        self._require_genus0()
        return max(0, self.p + 1 + self.a_total(chi) - self.cover.t_chi(chi))

    def basis_description(self, chi: CharLike) -> "BasisDescription":
        """The chi-part as h_chi times polynomials over the linear factors
        picked out by the A-sets."""
        self._require_genus0()
        d = self.p + self.a_total(chi) - self.cover.t_chi(chi)
        denominator = tuple(
            self.cover.branch_points[j].label
            for cls in self.cover.branch_classes
            for j in self.a_set(chi, cls.key)
        )
        return BasisDescription(max(-1, d), denominator, chi)

    def r_total(self) -> int:
        self._require_genus0()
        if not self.cover.is_abelian:
            raise NotAbelian("total dimension sums over the full dual group")
        return sum(self.r_chi(chi) for chi in self.cover.characters())

    def i_chi(self, chi: CharLike) -> int:
        """Dimension of the chi-part of differentials bounded below by the divisor."""
        self._require_genus0()
        conj = self.cover.conjugate_character(chi)
        return max(0, self.cover.t_chi(conj) - self.a_total(conj) - self.p - 1)

    def i_total(self) -> int:
        self._require_genus0()
        if not self.cover.is_abelian:
            raise NotAbelian("total dimension sums over the full dual group")
        return sum(self.i_chi(chi) for chi in self.cover.characters())

    def reduced_base_divisor(self, chi: CharLike, kind: str = "function") -> "SymbolicDivisor":
        """Divisor on the base computing the chi-dimension, for any base genus.

        kind="function": the divisor Xi with r(1/Xi) = r_chi(1/divisor);
        kind="differential": the divisor Xi with i(Xi) = i_chi(divisor).
        On a positive-genus base the unknown normalizing divisor attached to
        chi enters as the opaque degree-zero symbol Y[chi] (the integral
        divisor times the matching inverse power of the base point).
        """
        t = self.cover.t_chi(chi)
        if kind == "function":
            points = [
                (self.cover.branch_points[j].label, 1)
                for cls in self.cover.branch_classes
                for j in self.a_set(chi, cls.key)
            ]
            points.extend(self.base_part)
            symbols = [] if self.cover.base_genus == 0 else [(f"Y[{chi}]", 1)]
            return SymbolicDivisor(self.p - t, tuple(points), tuple(symbols), "r_of_inverse")
        if kind == "differential":
            conj = self.cover.conjugate_character(chi)
            points = []
            for cls in self.cover.branch_classes:
                if self.cover.u_value(chi, cls.key) == 0:
                    continue  # class inside ker(chi): no contribution
                in_a = set(self.a_set(conj, cls.key))
                points.extend(
                    (self.cover.branch_points[j].label, -1)
                    for j in cls.points
                    if j not in in_a
                )
            points.extend(self.base_part)
            symbols = [] if self.cover.base_genus == 0 else [(f"Y[{chi}]", -1)]
            return SymbolicDivisor(self.p + t, tuple(points), tuple(symbols), "i_of")
        raise ValueError(f"kind must be 'function' or 'differential', got {kind!r}")


@dataclass(frozen=True)
class BasisDescription:
    """Basis data for a chi-part on a genus-0 base: the space is the span of
    h_chi * z^k / prod(z - lambda), lambda over ``denominator``, 0 <= k <=
    ``degree_bound`` (empty when the bound is -1)."""

    degree_bound: int
    denominator: tuple[Label, ...]
    character: CharLike

    @property
    def dimension(self) -> int:
        return self.degree_bound + 1

    def __str__(self):
        denom = "".join(f"(z-{lab})" for lab in self.denominator) or "1"
        return f"h[{self.character}] * P<=({self.degree_bound})(z) / {denom}"


@dataclass(frozen=True)
class SymbolicDivisor:
    """Formal divisor on the base: a power of the normalization point, known
    points with exponents, and opaque degree-zero symbols (positive base
    genus only)."""

    nu_exponent: int
    points: tuple[tuple[Label, int], ...]
    symbols: tuple[tuple[str, int], ...]
    dimension_kind: str

    def degree(self) -> int:
        # symbols are degree-zero packages, so they never contribute
        return self.nu_exponent + sum(e for _, e in self.points)

    def __str__(self):
        parts = [f"nu^{self.nu_exponent}"] if self.nu_exponent else []
        parts.extend(f"({lab})^{e}" if e != 1 else f"({lab})" for lab, e in self.points)
        parts.extend(f"{name}^{e}" if e != 1 else name for name, e in self.symbols)
        return " * ".join(parts) if parts else "1"


@dataclass(frozen=True)
class HChiDivisor:
    """Divisor of the normalized eigenfunction h_chi on a genus-0 base:
    exponent u_{chi,C} at every preimage of a branch value, pole of order
    t_chi at each of the n points over infinity."""

    cover: CoverSpec
    character: CharLike
    branch_exponents: tuple[int, ...]
    infinity_exponent: int

    def degree(self) -> int:
        n = self.cover.degree
        return (
            sum(
                n * e // self.cover.point_order(j)
                for j, e in enumerate(self.branch_exponents)
            )
            + n * self.infinity_exponent
        )


def h_chi_divisor(cover: CoverSpec, chi: CharLike) -> HChiDivisor:
    if cover.base_genus != 0:
        raise UnsupportedBaseGenus("the eigenfunction divisor is explicit only over the line")
    exps = tuple(cover.u_value(chi, cover.point_class(j)) for j in range(len(cover.branch_points)))
    div = HChiDivisor(cover, chi, exps, -cover.t_chi(chi))
    if div.degree() != 0:
        raise AssertionError(f"eigenfunction divisor has degree {div.degree()}, expected 0")
    return div


def trivial_divisor(cover: CoverSpec, p: int = 0) -> InvariantDivisor:
    """All branch values in the top bucket: the divisor of the p-th power of
    the fiber over the normalization point."""
    return InvariantDivisor(
        cover, tuple(cover.point_order(j) - 1 for j in range(len(cover.branch_points))), p
    )


@dataclass(frozen=True)
class Normalization:
    divisor: InvariantDivisor
    shifts: tuple[tuple[Label, int], ...]


def _constant_fiber_value(values, expected_len, where) -> int:
    if isinstance(values, int):
        return values
    seq = list(values)
    if expected_len is not None and len(seq) != expected_len:
        raise NonInvariantInput(f"{where}: expected {expected_len} fiber exponents, got {len(seq)}")
    if not seq:
        raise NonInvariantInput(f"{where}: empty fiber")
    if any(v != seq[0] for v in seq):
        raise NonInvariantInput(f"{where}: exponents differ along the fiber: {seq}")
    return int(seq[0])


def normalize(
    cover: CoverSpec,
    branch_exponents: Sequence[Union[int, Sequence[int]]],
    nu_exponents: Union[int, Sequence[int]] = 0,
) -> Normalization:
    """Reduce a raw invariant divisor over the line to its normal form.

    Input exponents are per branch value (a bare int) or per fiber point (a
    sequence, which must be constant: invariance).  Each branch exponent e is
    reduced to e mod o(C) by dividing out (z - lambda)^floor(e / o(C)), whose
    poles land on the infinity fiber; the shift record lists the power of
    each linear factor used.
    """
    if cover.base_genus != 0:
        raise UnsupportedBaseGenus("normalization is only explicit over the line")
    if len(branch_exponents) != len(cover.branch_points):
        raise NonInvariantInput(
            f"expected {len(cover.branch_points)} branch exponents, got {len(branch_exponents)}"
        )
    n = cover.degree
    p = _constant_fiber_value(nu_exponents, n, "fiber over infinity")
    buckets = []
    shifts = []
    for j, raw in enumerate(branch_exponents):
        o = cover.point_order(j)
        e = _constant_fiber_value(raw, n // o, f"fiber over {cover.branch_points[j].label}")
        fold, residue = divmod(e, o)
        buckets.append(o - 1 - residue)
        if fold:
            shifts.append((cover.branch_points[j].label, fold))
        p += fold
    return Normalization(InvariantDivisor(cover, tuple(buckets), p), tuple(shifts))
