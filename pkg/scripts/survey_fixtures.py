#!/usr/bin/env python3
"""Survey the bundled example covers: genus, character invariants, counts of
the two distinguished divisor families, and Jacobian decomposition dimensions.

Usage: python scripts/survey_fixtures.py
"""

from fractions import Fraction

from galcov import (
    Coord,
    build_cover,
    count_by_cardinality,
    decompose,
    equation_system,
    total_dim_omega,
)


def pt(x):
    return Coord(Fraction(x))


FIXTURES = {
    "hyperelliptic, 6 branch points": equation_system(
        [(2, [(pt(i), 1) for i in range(1, 7)])]
    ),
    "cyclic 3:1, 3 branch points": equation_system(
        [(3, [(pt(i), 1) for i in range(1, 4)])]
    ),
    "cyclic 4:1, orders (4,4,2)": equation_system(
        [(4, [(pt(1), 1), (pt(2), 1), (pt(3), 2)])]
    ),
    "cyclic 6:1, orders (6,3,2)": equation_system(
        [(6, [(pt(1), 1), (pt(2), 2), (pt(3), 3)])]
    ),
    "Klein four-group": equation_system(
        [
            (2, [(pt(1), 1), (pt(2), 1)]),
            (2, [(pt(3), 1), (pt(4), 1)]),
        ]
    ),
}


def main():
    for name, eqs in FIXTURES.items():
        cover = build_cover(eqs)
        cover.validate().raise_for_status()
        print(f"== {name}")
        print(f"   group {cover.group.cyclic_orders}, genus {cover.genus()}")
        ts = {str(chi): cover.t_chi(chi) for chi in cover.characters()}
        print(f"   t-invariants: {ts}")
        print(
            "   non-special integral divisors:",
            count_by_cardinality(cover, "integral"),
            "| degree g-1 without sections:",
            count_by_cardinality(cover, "gm1"),
        )
        print(
            "   holomorphic differentials:",
            total_dim_omega(cover, 1, 0),
            "| quadratic differentials:",
            total_dim_omega(cover, 2, 0) if cover.genus() >= 1 else "-",
        )
        report = decompose(cover)
        pieces = ", ".join(
            f"|Q|={p.quotient_order}: dim {p.dim} (g_Y={p.quotient_genus})"
            for p in report.quotients
        )
        print(f"   Jacobian pieces: {pieces}")
        print()


if __name__ == "__main__":
    main()
