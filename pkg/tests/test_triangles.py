"""Triangle factory: normal forms, barycentric translates, limits, family."""

from fractions import Fraction

import pytest

from markov_ehrhart.errors import InvalidCompanion
from markov_ehrhart.exact import QuadElem
from markov_ehrhart.geometry import Triangle, integral_barycentre
from markov_ehrhart.markov import MarkovTriple, lagrange_number, tree
from markov_ehrhart.triangles import (
    LimitSpec,
    StandardPositionSpec,
    default_companion_lift,
    denominator,
    find_root_triple,
    limit_line_coeffs,
    limit_triangle,
    open_problem_triangle,
    sequence_triangle,
    standard_triangle,
    to_barycentric,
)

TRIPLE = MarkovTriple(2, 5, 29)


class TestStandardTriangle:
    def test_normal_form_vertices(self):
        tri = standard_triangle(StandardPositionSpec(TRIPLE, 1, 5))
        assert tri.vertex(1) == (0, 0)
        assert tri.vertex(2) == (Fraction(29, 10), 0)
        assert tri.vertex(3) == (Fraction(45, 58), Fraction(10, 29))

    def test_default_companion_lift(self):
        assert default_companion_lift(TRIPLE, 1) == 1
        assert default_companion_lift(MarkovTriple(1, 5, 2), 1) == 1  # residue 0 lifts to 1
        assert default_companion_lift(TRIPLE, 3) == 22
        tri = standard_triangle(StandardPositionSpec(TRIPLE))
        assert tri.vertex(3) == (Fraction(5, 58), Fraction(10, 29))

    def test_rejects_non_companion_lift(self):
        with pytest.raises(InvalidCompanion):
            standard_triangle(StandardPositionSpec(TRIPLE, 1, 2))
        # any lift congruent mod p1 is accepted
        standard_triangle(StandardPositionSpec(TRIPLE, 1, -1))
        standard_triangle(StandardPositionSpec(TRIPLE, 1, 7))

    def test_distinguished_index(self):
        tri = standard_triangle(StandardPositionSpec(TRIPLE, 2))
        assert tri.vertex(2) == (0, 0)
        assert tri.vertex(1) == (Fraction(29, 10), 0)  # p3 / (p2 * p1) on the axis
        assert tri.vertex(3)[1] == Fraction(10, 29)
        with pytest.raises(ValueError):
            standard_triangle(StandardPositionSpec(TRIPLE, 4))

    def test_axis_swap(self):
        tri = standard_triangle(StandardPositionSpec(TRIPLE, 1, 5, on_axis=3))
        assert tri.vertex(3) == (Fraction(5, 58), 0)
        assert tri.vertex(2)[1] == Fraction(58, 5)
        with pytest.raises(ValueError):
            standard_triangle(StandardPositionSpec(TRIPLE, 1, 5, on_axis=1))

    def test_unit_simplex(self):
        tri = standard_triangle(StandardPositionSpec(MarkovTriple(1, 1, 1)))
        assert tri.vertex(1) == (0, 0)
        assert tri.vertex(2) == (1, 0)
        assert tri.vertex(3) == (0, 1)


class TestDenominator:
    def test_normal_form_denominators(self):
        for node in tree(5):
            t = node.triple
            tri = standard_triangle(StandardPositionSpec(t))
            assert denominator(tri) == t.p1 * t.p2 * t.p3

    def test_small_example(self):
        tri = Triangle(
            {
                1: (Fraction(1, 2), Fraction(1, 3)),
                2: (Fraction(1, 3), Fraction(1, 2)),
                3: (Fraction(1, 8), Fraction(1, 8)),
            }
        )
        assert denominator(tri) == 24


class TestBarycentric:
    def test_barycentre_moves_to_origin(self):
        tri = to_barycentric(standard_triangle(StandardPositionSpec(TRIPLE, 1, 5)))
        assert integral_barycentre(tri) == (0, 0)
        # translation vector is minus the barycentre (5/6, 1/3)
        assert tri.vertex(1) == (Fraction(-5, 6), Fraction(-1, 3))

    def test_unit_simplex_barycentric(self):
        tri = to_barycentric(standard_triangle(StandardPositionSpec(MarkovTriple(1, 1, 1))))
        assert tri.vertex(1) == (Fraction(-1, 3), Fraction(-1, 3))
        assert tri.vertex(2) == (Fraction(2, 3), Fraction(-1, 3))
        assert tri.vertex(3) == (Fraction(-1, 3), Fraction(2, 3))


class TestRoots:
    @pytest.mark.parametrize(
        "a,expected",
        [(1, (1, 1, 1)), (2, (2, 1, 1)), (5, (2, 5, 1)), (13, (13, 5, 1)), (29, (2, 5, 29)), (34, (13, 34, 1))],
    )
    def test_find_root_triple(self, a, expected):
        assert find_root_triple(a).as_tuple() == expected

    @pytest.mark.parametrize("a", [3, 4, 7, 30])
    def test_rejects_non_markov(self, a):
        with pytest.raises(ValueError):
            find_root_triple(a)


class TestSequence:
    def test_first_branch_triangles(self):
        assert sequence_triangle(LimitSpec(1), 0) == Triangle(
            {1: (0, 0), 2: (1, 0), 3: (0, 1)}
        )
        assert sequence_triangle(LimitSpec(1), 1) == Triangle(
            {1: (0, 0), 2: (2, 0), 3: (0, Fraction(1, 2))}
        )
        assert sequence_triangle(LimitSpec(1), 2) == Triangle(
            {1: (0, 0), 2: (Fraction(5, 2), 0), 3: (0, Fraction(2, 5))}
        )
        assert sequence_triangle(LimitSpec(1), 3) == Triangle(
            {1: (0, 0), 2: (Fraction(13, 5), 0), 3: (0, Fraction(5, 13))}
        )

    def test_apex_direction_is_constant(self):
        # the two edge directions at the origin never change along the branch
        a, q = 2, 1
        for n in range(1, 5):
            tri = sequence_triangle(LimitSpec(a, q), n)
            assert tri.vertex(1) == (0, 0)
            assert tri.vertex(2)[1] == 0
            apex = tri.vertex(3)
            # apex is a positive multiple of (a*q - 1, a^2)
            assert apex[0] * (a * a) == apex[1] * (a * q - 1)

    def test_barycentric_translation(self):
        plain = sequence_triangle(LimitSpec(2, 1), 3)
        shifted = sequence_triangle(LimitSpec(2, 1, barycentric=True), 3)
        delta = (Fraction(-1, 6), Fraction(-1, 3))  # (-q/(3a), -1/3)
        assert shifted == plain.translate(delta)

    def test_rejects_negative_step(self):
        with pytest.raises(ValueError):
            sequence_triangle(LimitSpec(1), -1)


class TestLimit:
    def test_golden_limit_vertices(self):
        tri = limit_triangle(LimitSpec(1))
        lam = lagrange_number(1)  # (3 + sqrt 5)/2, the squared golden ratio
        assert tri.vertex(1) == (QuadElem(0, 0, 5), QuadElem(0, 0, 5))
        assert tri.vertex(2) == (lam, QuadElem(0, 0, 5))
        assert tri.vertex(3) == (QuadElem(0, 0, 5), lam.conjugate())
        assert not tri.is_rational()

    def test_limit_is_near_the_branch(self):
        # vertices of the n-th branch triangle approach the limit vertices
        a = 2
        lam = lagrange_number(a)
        for n in (4, 8):
            rational = sequence_triangle(LimitSpec(a), n)
            gap = lam - rational.vertex(2)[0]
            assert gap.sign() > 0  # the axis vertex increases towards lambda
            assert (gap - Fraction(1, 10 ** n)).sign() < 0

    def test_barycentric_limit(self):
        plain = limit_triangle(LimitSpec(2))
        shifted = limit_triangle(LimitSpec(2, barycentric=True))
        d = plain.vertex(2)[0].d
        delta = (QuadElem(Fraction(-1, 6), 0, d), QuadElem(Fraction(-1, 3), 0, d))
        assert shifted == plain.translate(delta)

    def test_line_through_limit_edge_contains_scaled_companion_point(self):
        for a in (1, 2, 5, 13):
            spec = LimitSpec(a)
            coeff_a, coeff_b, coeff_c = limit_line_coeffs(spec)
            tri = limit_triangle(spec)
            for label in (2, 3):
                x, y = tri.vertex(label)
                assert coeff_a * x + coeff_b * y == coeff_c


class TestOpenProblemFamily:
    def test_vertices(self):
        tri = open_problem_triangle(1, 1, 2, 5)
        assert tri.vertex(1) == (0, 0)
        assert tri.vertex(2) == (Fraction(5, 2), 0)
        assert tri.vertex(3) == (0, Fraction(2, 5))

    @pytest.mark.parametrize(
        "a,b,c", [(1, 1, 1), (2, 1, 1), (5, 1, 2), (2, 5, 29), (5, 2, 29), (13, 5, 1)]
    )
    def test_markov_members_are_dilated_normal_forms(self, a, b, c):
        triple = MarkovTriple(a, b, c)
        q = (3 * c * pow(b, -1, a)) % a if a > 1 else 1
        if q == 0:
            q = 1
        family = open_problem_triangle(a, q, b, c)
        dilated = standard_triangle(
            StandardPositionSpec(triple, 1, q, on_axis=2)
        ).scale(a)
        assert family == dilated

    def test_input_validation(self):
        with pytest.raises(ValueError):
            open_problem_triangle(2, 4, 1, 1)  # gcd(a, q) > 1
        with pytest.raises(ValueError):
            open_problem_triangle(1, 1, 0, 5)
