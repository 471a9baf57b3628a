import pytest
from hypothesis import given, settings

from galcov import (
    BranchPoint,
    CoverSpec,
    GroupSpec,
    IrrepClassData,
    RationalIrrepData,
    analytic_multiplicity,
    cyclic_quotient_dims,
    decompose,
    dim_A_W,
    dim_B_W,
    primitive_prym_dims,
    rational_multiplicity,
)
from galcov.errors import NonIntegralDimension, NotAbelian, NTableMismatch

from covergen import covers, cyclic_cover, fixture_covers, hyperelliptic, klein_cover, pt


def orbit_data(cover):
    return [
        (orbit, RationalIrrepData.from_character_orbit(cover, orbit))
        for orbit in cover.group.rational_character_orbits()
    ]


def genus2_base_cover():
    g = GroupSpec((2,))
    return CoverSpec(2, g, (BranchPoint("a", g.element([1])), BranchPoint("b", g.element([1]))))


class TestAnalyticMultiplicity:
    def test_trivial_character_gives_base_genus(self):
        assert analytic_multiplicity(hyperelliptic(6), hyperelliptic(6).trivial_character) == 0
        cover = genus2_base_cover()
        assert analytic_multiplicity(cover, cover.trivial_character) == 2

    def test_hyperelliptic_nontrivial(self):
        cover = hyperelliptic(6)
        chi = cover.group.character([1])
        assert analytic_multiplicity(cover, chi) == 2 == cover.base_genus + cover.t_chi(chi) - 1

    def test_klein_diagonal_character(self):
        cover = klein_cover()
        assert analytic_multiplicity(cover, cover.group.character([1, 1])) == 1

    def test_characters_sum_to_genus(self):
        for cover in fixture_covers():
            assert (
                sum(analytic_multiplicity(cover, chi) for chi in cover.characters())
                == cover.genus()
            )


class TestRationalMultiplicity:
    def test_trivial_character(self):
        assert rational_multiplicity(genus2_base_cover(), GroupSpec((2,)).trivial_character) == 4

    def test_hyperelliptic_nontrivial(self):
        cover = hyperelliptic(6)
        assert rational_multiplicity(cover, cover.group.character([1])) == 4

    def test_z3_conjugate_pair(self):
        cover = cyclic_cover(3, [1, 1, 1])
        chi1, chi2 = cover.group.character([1]), cover.group.character([2])
        assert rational_multiplicity(cover, chi1) == 1
        assert analytic_multiplicity(cover, chi1) + analytic_multiplicity(cover, chi2) == 1

    def test_complexification_identity(self):
        for cover in fixture_covers():
            for chi in cover.characters():
                conj = cover.conjugate_character(chi)
                assert rational_multiplicity(cover, chi) == analytic_multiplicity(
                    cover, chi
                ) + analytic_multiplicity(cover, conj)

    @settings(max_examples=30, deadline=None)
    @given(covers(max_order=24, max_points=6))
    def test_complexification_identity_random(self, cover):
        for chi in cover.characters():
            conj = cover.conjugate_character(chi)
            assert rational_multiplicity(cover, chi) == analytic_multiplicity(
                cover, chi
            ) + analytic_multiplicity(cover, conj)


class TestIsotypicalDimensions:
    def test_trivial_orbit_gives_base_genus(self):
        for cover in (hyperelliptic(6), genus2_base_cover()):
            orbit, data = orbit_data(cover)[0]
            assert orbit.order == 1
            assert dim_A_W(cover, data) == cover.base_genus

    def test_hyperelliptic_nontrivial_orbit_is_whole_jacobian(self):
        cover = hyperelliptic(6)
        _, data = orbit_data(cover)[1]
        assert dim_A_W(cover, data) == 2 == cover.genus()
        assert dim_B_W(cover, data) == 2

    def test_klein_orbit_dims(self):
        cover = klein_cover()
        dims = [dim_A_W(cover, data) for _, data in orbit_data(cover)[1:]]
        assert dims == [0, 0, 1]

    def test_sum_is_genus_on_fixtures(self):
        for cover in fixture_covers():
            assert sum(dim_A_W(cover, data) for _, data in orbit_data(cover)) == cover.genus()

    @settings(max_examples=30, deadline=None)
    @given(covers(max_order=24, max_points=6))
    def test_sum_is_genus_random(self, cover):
        assert sum(dim_A_W(cover, data) for _, data in orbit_data(cover)) == cover.genus()

    def test_positive_for_base_genus_two(self):
        g3 = GroupSpec((3,))
        klein = GroupSpec((2, 2))
        high_base_covers = [
            genus2_base_cover(),
            CoverSpec(2, g3, tuple(BranchPoint(f"x{i}", g3.element([1])) for i in range(3))),
            CoverSpec(3, klein, ()),
        ]
        for cover in high_base_covers:
            assert cover.validate().ok
            for _, data in orbit_data(cover):
                assert dim_A_W(cover, data) > 0

    def test_half_integer_rejected(self):
        cover = hyperelliptic(6)
        key = cover.branch_classes[0].key
        bad = RationalIrrepData(1, 1, 1, ((key, 1),), trivial=False)
        # N_{C,0} = 1 on the only class, nontrivial flag: 1*1*(-1) + 6/2*(1-1) = -1
        with pytest.raises(NonIntegralDimension):
            # odd branch count makes the half sum fractional
            g = GroupSpec((2,))
            odd = CoverSpec(
                1, g, tuple(BranchPoint(f"x{i}", g.element([1])) for i in range(3))
            )
            dim_A_W(odd, RationalIrrepData(1, 1, 1, ((odd.branch_classes[0].key, 0),)))

    def test_missing_class_rejected(self):
        cover = hyperelliptic(6)
        with pytest.raises(NTableMismatch):
            dim_A_W(cover, RationalIrrepData(1, 1, 1, ()))

    def test_schur_index_must_divide(self):
        with pytest.raises(ValueError):
            RationalIrrepData(3, 1, 2, ())


class TestCyclicQuotients:
    def test_trivial_quotient(self):
        pieces = cyclic_quotient_dims(genus2_base_cover())
        assert pieces[0].quotient_order == 1
        assert pieces[0].dim == 2

    def test_hyperelliptic_full_quotient(self):
        pieces = cyclic_quotient_dims(hyperelliptic(6))
        assert [(p.quotient_order, p.dim) for p in pieces] == [(1, 0), (2, 2)]

    def test_klein_quotients(self):
        pieces = cyclic_quotient_dims(klein_cover())
        assert [p.dim for p in pieces] == [0, 0, 0, 1]

    def test_matches_dim_B_W(self):
        for cover in fixture_covers():
            by_rep = {
                orbit.representative: dim_B_W(cover, data) for orbit, data in orbit_data(cover)
            }
            for piece in cyclic_quotient_dims(cover):
                assert piece.dim == by_rep[piece.orbit.representative]

    def test_generic_mode_rejected(self):
        from galcov import ClassTable, cover_from_class_table

        table = ClassTable.build([("c", 2, 2)], 2)
        with pytest.raises(NotAbelian):
            cyclic_quotient_dims(cover_from_class_table(1, table))


class TestPrimitivePrym:
    def test_hyperelliptic(self):
        pieces = primitive_prym_dims(hyperelliptic(6))
        full = pieces[1]
        assert full.quotient_genus == 2
        assert full.dim == full.dim_from_quotient == 2
        assert full.nontrivial

    def test_klein_pieces(self):
        pieces = primitive_prym_dims(klein_cover())
        assert [(p.quotient_genus, p.dim) for p in pieces[1:]] == [(0, 0), (0, 0), (1, 1)]
        assert [p.dim_from_quotient for p in pieces] == [p.dim for p in pieces]

    def test_two_forms_agree_on_fixtures(self):
        for cover in fixture_covers():
            for piece in primitive_prym_dims(cover):
                assert piece.dim == piece.dim_from_quotient

    @settings(max_examples=25, deadline=None)
    @given(covers(max_order=24, max_points=6))
    def test_two_forms_agree_random(self, cover):
        for piece in primitive_prym_dims(cover):
            assert piece.dim == piece.dim_from_quotient

    def test_unramified_genus1_flags(self):
        # double cover of a torus: quotient piece has g_Y = g_S = 1, flagged trivial
        cover = CoverSpec(1, GroupSpec((2,)), ())
        pieces = primitive_prym_dims(cover)
        assert [(p.quotient_order, p.quotient_genus, p.dim) for p in pieces] == [
            (1, 1, 1),
            (2, 1, 0),
        ]
        assert pieces[0].nontrivial
        assert not pieces[1].nontrivial

    def test_noncyclic_group_has_no_full_orbit(self):
        for cover in fixture_covers():
            group = cover.group
            if len(group.cyclic_orders) < 2 or group.order == 1:
                continue
            cyclic = any(orbit.order == group.order for orbit in group.rational_character_orbits())
            # the group is cyclic iff some character is faithful
            import math

            expected = (
                math.lcm(*group.cyclic_orders) == group.order if group.cyclic_orders else True
            )
            assert cyclic == expected


class TestDecompose:
    def test_report_consistency(self):
        for cover in fixture_covers():
            report = decompose(cover)
            assert sum(s.dim_A for s in report.orbits) == report.genus
            assert len(report.analytic) == cover.degree
            assert len(report.quotients) == len(report.orbits)

    def test_klein_report(self):
        report = decompose(klein_cover())
        assert [s.dim_A for s in report.orbits] == [0, 0, 0, 1]
        assert report.genus == 1

    def test_generic_mode_rejected(self):
        from galcov import ClassTable, cover_from_class_table

        table = ClassTable.build([("c", 2, 2)], 2)
        with pytest.raises(NotAbelian):
            decompose(cover_from_class_table(1, table))
