#!/usr/bin/env python3
"""Randomized verification sweep: draw validated abelian covers of the line
and random normalized invariant divisors on them, and confirm the exact
Riemann-Roch identity r - i = deg + 1 - genus on every draw.

Usage: python scripts/random_riemann_roch.py [count] [seed]
"""

import random
import sys
from collections import Counter
from fractions import Fraction

from galcov import BranchPoint, Coord, CoverSpec, GroupSpec, InvariantDivisor


def random_cover(rng, max_order=36, max_points=8):
    while True:
        orders, prod = [], 1
        for _ in range(rng.randint(1, 3)):
            m = rng.choice([2, 2, 2, 3, 3, 4, 5, 6])
            if prod * m > max_order:
                break
            orders.append(m)
            prod *= m
        if not orders:
            continue
        group = GroupSpec(tuple(orders))
        classes = [
            group.element([rng.randrange(m) for m in orders])
            for _ in range(rng.randint(1, max_points - 1))
        ]
        total = group.identity
        for x in classes:
            total = group.add(total, x)
        classes.append(group.neg(total))
        classes = [x for x in classes if group.element_order(x) > 1]
        if not classes:
            continue
        cover = CoverSpec(
            0,
            group,
            tuple(
                BranchPoint(Coord(Fraction(j + 1)), x) for j, x in enumerate(classes)
            ),
        )
        if cover.validate().ok:
            return cover


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    rng = random.Random(seed)
    by_genus = Counter()
    for k in range(count):
        cover = random_cover(rng)
        buckets = tuple(
            rng.randrange(cover.point_order(j)) for j in range(len(cover.branch_points))
        )
        div = InvariantDivisor(cover, buckets, rng.randint(-3, 3))
        lhs = div.r_total() - div.i_total()
        rhs = div.degree() + 1 - cover.genus()
        if lhs != rhs:
            print(f"FAIL at draw {k}: r - i = {lhs}, deg + 1 - g = {rhs}")
            print(f"  cover: {cover}")
            print(f"  divisor: buckets {div.buckets}, p = {div.p}")
            return 1
        by_genus[cover.genus()] += 1
    print(f"verified the Riemann-Roch identity on {count} random divisors (seed {seed})")
    print("covers by genus:", dict(sorted(by_genus.items())))
    return 0


if __name__ == "__main__":
    sys.exit(main())
