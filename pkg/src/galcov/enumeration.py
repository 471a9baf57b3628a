"""Enumeration of the two distinguished families of invariant divisors on
abelian covers of the line.

The integral family consists of the non-special integral divisors of degree
equal to the genus (p = 0, and for every nontrivial character the buckets
below u_{chi,sigma} hold exactly t_chi - 1 values in total).  The second
family consists of the divisors of degree genus - 1 with no nonzero section
(p = -1 and the analogous sums equal t_chi for every character).

Both constraints depend only on the bucket cardinalities, so enumeration
first solves the integer cardinality system and then expands every solution
into concrete bucket assignments.  A brute-force filter over the full
assignment space doubles as the reference implementation.
"""

from __future__ import annotations

import math
from itertools import combinations, product
from typing import Iterator

from .cover import CoverSpec
from .divisors import InvariantDivisor
from .errors import NotAbelian, SearchSpaceTooLarge, UnsupportedBaseGenus

DEFAULT_CAP = 10**7


def _require_abelian_line(cover: CoverSpec):
    if cover.base_genus != 0:
        raise UnsupportedBaseGenus("enumeration works over a genus-0 base")
    if not cover.is_abelian:
        raise NotAbelian("enumeration needs an abelian deck group")
    cover.validate().raise_for_status()


def _constraints(cover: CoverSpec, family: str):
    """Per-character targets for the bucket-cardinality sums.

    Returns (targets, weights) where, for constraint k, weights[k][c] is the
    number of low buckets of class c that count (namely u_{chi,sigma}), and
    the required equality is sum_c sum_{i < weights[k][c]} |B_{c,i}| ==
    targets[k].
    """
    classes = cover.branch_classes
    targets = []
    weights = []
    for chi in cover.characters():
        t = cover.t_chi(chi)
        if chi.is_trivial:
            if family == "gm1":
                targets.append(0)  # empty sum: automatically satisfied
                weights.append([0] * len(classes))
            continue
        targets.append(t - 1 if family == "integral" else t)
        weights.append([cover.u_value(chi, cls.key) for cls in classes])
    return targets, weights


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of the given length summing to total,
    in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _cardinality_solutions(cover: CoverSpec, family: str) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Solve the cardinality system class by class with interval pruning."""
    classes = cover.branch_classes
    targets, weights = _constraints(cover, family)
    # max further contribution to constraint k from classes c..end
    max_tail = [[0] * len(targets) for _ in range(len(classes) + 1)]
    for c in range(len(classes) - 1, -1, -1):
        for k in range(len(targets)):
            gain = classes[c].count if weights[k][c] > 0 else 0
            max_tail[c][k] = max_tail[c + 1][k] + gain

    def extend(c: int, partial: list[int], chosen: list[tuple[int, ...]]):
        if c == len(classes):
            if all(partial[k] == targets[k] for k in range(len(targets))):
                yield tuple(chosen)
            return
        cls = classes[c]
        for sizes in _compositions(cls.count, cls.order):
            new_partial = list(partial)
            ok = True
            for k in range(len(targets)):
                new_partial[k] += sum(sizes[: weights[k][c]])
                if new_partial[k] > targets[k] or new_partial[k] + max_tail[c + 1][k] < targets[k]:
                    ok = False
                    break
            if ok:
                chosen.append(sizes)
                yield from extend(c + 1, new_partial, chosen)
                chosen.pop()

    yield from extend(0, [0] * len(targets), [])


def _expand(cover: CoverSpec, solution) -> Iterator[tuple[int, ...]]:
    """Concrete bucket tuples realizing the given per-class cardinalities."""
    classes = cover.branch_classes

    def assignments(points: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        remaining_sizes = sizes[1:]
        for chosen in combinations(points, sizes[0]):
            rest = tuple(j for j in points if j not in chosen)
            for tail in assignments(rest, remaining_sizes):
                yield tuple((j, 0) for j in chosen) + tuple((j, i + 1) for j, i in tail)

    per_class = [list(assignments(cls.points, sizes)) for cls, sizes in zip(classes, solution)]
    for combo in product(*per_class):
        buckets = [0] * len(cover.branch_points)
        for part in combo:
            for j, i in part:
                buckets[j] = i
        yield tuple(buckets)


def _iter_family(cover: CoverSpec, family: str) -> Iterator[InvariantDivisor]:
    p = 0 if family == "integral" else -1
    for solution in _cardinality_solutions(cover, family):
        for buckets in _expand(cover, solution):
            yield InvariantDivisor(cover, buckets, p)


def iter_nonspecial_integral(cover: CoverSpec) -> Iterator[InvariantDivisor]:
    """Stream the non-special integral divisors of degree equal to the genus."""
    _require_abelian_line(cover)
    return _iter_family(cover, "integral")


def iter_degree_gm1(cover: CoverSpec) -> Iterator[InvariantDivisor]:
    """Stream the degree genus-1 divisors with p = -1 and no nonzero section."""
    _require_abelian_line(cover)
    return _iter_family(cover, "gm1")


def enumerate_nonspecial_integral(cover: CoverSpec) -> list[InvariantDivisor]:
    return sorted(iter_nonspecial_integral(cover), key=lambda d: d.buckets)


def enumerate_degree_gm1(cover: CoverSpec) -> list[InvariantDivisor]:
    return sorted(iter_degree_gm1(cover), key=lambda d: d.buckets)


def count_by_cardinality(cover: CoverSpec, family: str) -> int:
    """Number of divisors in the family, as a sum of products of multinomial
    coefficients over the cardinality solutions; no divisor is materialized.
    """
    if family not in ("integral", "gm1"):
        raise ValueError(f"unknown family {family!r}")
    _require_abelian_line(cover)
    classes = cover.branch_classes
    total = 0
    for solution in _cardinality_solutions(cover, family):
        ways = 1
        for cls, sizes in zip(classes, solution):
            remaining = cls.count
            for s in sizes:
                ways *= math.comb(remaining, s)
                remaining -= s
        total += ways
    return total


def search_space_size(cover: CoverSpec) -> int:
    return math.prod(cover.point_order(j) for j in range(len(cover.branch_points)))


def brute_force_filter(
    cover: CoverSpec,
    p: int,
    degree_target: int,
    r_target: int,
    cap: int = DEFAULT_CAP,
) -> list[InvariantDivisor]:
    """Reference enumeration: scan every bucket assignment and keep those with
    the requested degree and total section dimension."""
    _require_abelian_line(cover)
    size = search_space_size(cover)
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)
    orders = [cover.point_order(j) for j in range(len(cover.branch_points))]
    hits = []
    for buckets in product(*(range(o) for o in orders)):
        div = InvariantDivisor(cover, buckets, p)
        if div.degree() == degree_target and div.r_total() == r_target:
            hits.append(div)
    return hits
