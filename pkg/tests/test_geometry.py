"""Integral affine geometry: primitive vectors, shears, triangles, mutation."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from markov_ehrhart.errors import (
    DegenerateTriangle,
    IrrationalDirection,
    NonUnimodular,
    NotATriangle,
)
from markov_ehrhart.exact import QuadElem, quad_sign
from markov_ehrhart.geometry import (
    IntMat2,
    Triangle,
    affine_distance,
    affine_length,
    angle_determinant,
    apply_unimodular,
    clip_polygon,
    det2,
    geometric_mutation,
    half_shear,
    hausdorff_distance_sq_upper,
    integral_barycentre,
    integral_bisector,
    line_intersection,
    primitive_vector,
    shear_matrix,
    vadd,
    vsub,
)
from markov_ehrhart.markov import MarkovTriple
from markov_ehrhart.triangles import StandardPositionSpec, standard_triangle

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
points = st.tuples(fractions, fractions)


def primitive_vectors(max_abs=5):
    return (
        st.tuples(
            st.integers(-max_abs, max_abs), st.integers(-max_abs, max_abs)
        )
        .filter(lambda v: v != (0, 0))
        .map(lambda v: (v[0] // math.gcd(*v), v[1] // math.gcd(*v)))
    )


triangle_strategy = (
    st.tuples(points, points, points)
    .filter(lambda t: det2(vsub(t[1], t[0]), vsub(t[2], t[0])) != 0)
    .map(lambda t: Triangle({1: t[0], 2: t[1], 3: t[2]}))
)


FIG_TRIANGLE = standard_triangle(StandardPositionSpec(MarkovTriple(2, 5, 29), 1, 5))


class TestPrimitiveVector:
    @settings(max_examples=80, deadline=None)
    @given(points, points)
    def test_decomposition(self, p, q):
        if p == q:
            with pytest.raises(ValueError):
                primitive_vector(p, q)
            return
        v, r = primitive_vector(p, q)
        assert isinstance(v[0], int) and isinstance(v[1], int)
        assert math.gcd(v[0], v[1]) == 1
        assert quad_sign(r) > 0
        assert vsub(q, p) == (r * v[0], r * v[1])

    def test_irrational_direction(self):
        p = (QuadElem(0, 0, 5), QuadElem(0, 0, 5))
        q = (QuadElem(1, 0, 5), QuadElem(0, 1, 5))
        with pytest.raises(IrrationalDirection):
            primitive_vector(p, q)

    def test_axis_aligned_irrational_is_fine(self):
        p = (QuadElem(0, 0, 5), QuadElem(0, 0, 5))
        q = (QuadElem(0, 1, 5), QuadElem(0, 0, 5))  # (sqrt 5, 0)
        v, r = primitive_vector(p, q)
        assert v == (1, 0) and r == QuadElem(0, 1, 5)

    def test_edge_lengths_of_normal_form(self):
        v1, v2, v3 = (FIG_TRIANGLE.vertex(i) for i in (1, 2, 3))
        assert affine_length(v1, v2) == Fraction(29, 10)
        assert affine_length(v1, v3) == Fraction(5, 58)
        assert affine_length(v2, v3) == Fraction(2, 145)

    def test_angle_determinants_of_normal_form(self):
        v1, v2, v3 = (FIG_TRIANGLE.vertex(i) for i in (1, 2, 3))
        assert angle_determinant(v1, v2, v3) == 4
        assert angle_determinant(v2, v1, v3) == 25
        assert angle_determinant(v3, v1, v2) == 841


class TestShears:
    @settings(max_examples=80, deadline=None)
    @given(primitive_vectors())
    def test_matrix_fixes_axis_and_is_unimodular(self, v):
        m = shear_matrix(v)
        assert m.det() == 1
        assert m.apply(v) == v

    @settings(max_examples=80, deadline=None)
    @given(primitive_vectors(), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
    def test_matrix_formula(self, v, u):
        # the full shear sends u to u + det(v, u) * v
        assert shear_matrix(v).apply(u) == vadd(u, (det2(v, u) * v[0], det2(v, u) * v[1]))

    @settings(max_examples=80, deadline=None)
    @given(primitive_vectors(), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
    def test_half_shear_piecewise(self, v, u):
        image = half_shear(v, u)
        if det2(u, v) >= 0:
            assert image == shear_matrix(v).apply(u)
        else:
            assert image == u
        # integer points stay integer either way
        assert isinstance(image[0], int) and isinstance(image[1], int)

    @settings(max_examples=60, deadline=None)
    @given(primitive_vectors(3))
    def test_half_shear_injective_on_lattice_box(self, v):
        box = [(x, y) for x in range(-6, 7) for y in range(-6, 7)]
        images = {half_shear(v, u) for u in box}
        assert len(images) == len(box)


class TestTriangle:
    def test_rejects_collinear(self):
        with pytest.raises(DegenerateTriangle):
            Triangle({1: (0, 0), 2: (1, 1), 3: (3, 3)})

    def test_accessors(self):
        tri = Triangle({2: (1, 0), 1: (0, 0), 3: (0, 1)})
        assert tri.labels == (1, 2, 3)
        assert tri.vertex(2) == (1, 0)
        assert tri.opposite_labels(2) == (1, 3)
        assert tri.area() == Fraction(1, 2)
        assert tri.is_rational()

    def test_translate_scale(self):
        tri = Triangle({1: (0, 0), 2: (1, 0), 3: (0, 1)})
        moved = tri.translate((Fraction(1, 2), -1))
        assert moved.vertex(1) == (Fraction(1, 2), -1)
        assert moved.area() == tri.area()
        assert tri.scale(3).area() == 9 * tri.area()

    def test_json_round_trip_rational(self):
        data = FIG_TRIANGLE.to_json_dict()
        assert data["3"] == ["45/58", "10/29"]
        assert Triangle.from_json_dict(data) == FIG_TRIANGLE

    def test_json_round_trip_quadratic(self):
        z = QuadElem(0, 0, 5)
        tri = Triangle(
            {1: (z, z), 2: (QuadElem(Fraction(3, 2), Fraction(1, 2), 5), z), 3: (z, 1 + z)}
        )
        assert Triangle.from_json_dict(tri.to_json_dict()) == tri

    def test_irrational_triangle_flagged(self):
        z = QuadElem(0, 0, 5)
        tri = Triangle({1: (z, z), 2: (QuadElem(0, 1, 5), z), 3: (z, 1 + z)})
        assert not tri.is_rational()


class TestBisectorsAndBarycentre:
    def test_bisectors_of_normal_form(self):
        assert integral_bisector(FIG_TRIANGLE, 1) == ((0, 0), (5, 2))
        point, direction = integral_bisector(FIG_TRIANGLE, 2)
        assert point == (Fraction(29, 10), 0) and direction == (-31, 5)
        point, direction = integral_bisector(FIG_TRIANGLE, 3)
        assert point == (Fraction(45, 58), Fraction(10, 29)) and direction == (5, -1)

    def test_barycentre_of_normal_form(self):
        assert integral_barycentre(FIG_TRIANGLE) == (Fraction(5, 6), Fraction(1, 3))

    def test_barycentre_equidistant_from_edges(self):
        beta = integral_barycentre(FIG_TRIANGLE)
        for label in (1, 2, 3):
            la, lb = FIG_TRIANGLE.opposite_labels(label)
            a, b = FIG_TRIANGLE.vertex(la), FIG_TRIANGLE.vertex(lb)
            v, _ = primitive_vector(a, b)
            assert affine_distance(beta, a, v) == Fraction(1, 3)

    def test_line_intersection(self):
        assert line_intersection((0, 0), (1, 1), (2, 0), (0, 1)) == (2, 2)
        with pytest.raises(ValueError):
            line_intersection((0, 0), (1, 1), (1, 0), (2, 2))


UNIT_SIMPLEX = Triangle({1: (Fraction(0), Fraction(0)), 2: (Fraction(1), Fraction(0)), 3: (Fraction(0), Fraction(1))})


class TestMutation:
    def test_unit_simplex_images(self):
        assert geometric_mutation(UNIT_SIMPLEX, 2) == Triangle(
            {1: (0, 0), 2: (0, Fraction(1, 2)), 3: (2, 0)}
        )
        assert geometric_mutation(UNIT_SIMPLEX, 1) == Triangle(
            {1: (Fraction(1, 2), Fraction(1, 2)), 2: (0, -1), 3: (0, 1)}
        )

    def test_preserves_area_and_barycentre(self):
        tri = FIG_TRIANGLE
        beta = integral_barycentre(tri)
        for label in (1, 2, 3):
            image = geometric_mutation(tri, label)
            assert image.area() == tri.area()
            assert integral_barycentre(image) == beta

    def test_tracks_triple_mutation(self):
        # mutating the triangle at vertex i realizes the triple mutation at i
        triple = MarkovTriple(2, 5, 29)
        tri = standard_triangle(StandardPositionSpec(triple, 1, 5))
        for label in (1, 2, 3):
            image = geometric_mutation(tri, label)
            expected = triple.mutate(label)
            verts = {i: image.vertex(i) for i in (1, 2, 3)}
            for i in (1, 2, 3):
                j, k = image.opposite_labels(i)
                assert angle_determinant(verts[i], verts[j], verts[k]) == expected.entry(i) ** 2
                assert affine_length(verts[j], verts[k]) == Fraction(
                    expected.entry(i), expected.entry(j) * expected.entry(k)
                )


class TestUnimodular:
    def test_rejects_non_unimodular(self):
        with pytest.raises(NonUnimodular):
            apply_unimodular(IntMat2(2, 0, 0, 1), (0, 0), UNIT_SIMPLEX)

    def test_congruence_preserves_structure(self):
        mat = IntMat2(2, 1, 1, 1)
        image = apply_unimodular(mat, (3, -2), FIG_TRIANGLE)
        assert image.area() == FIG_TRIANGLE.area()
        for label in (1, 2, 3):
            j, k = FIG_TRIANGLE.opposite_labels(label)
            assert affine_length(image.vertex(j), image.vertex(k)) == affine_length(
                FIG_TRIANGLE.vertex(j), FIG_TRIANGLE.vertex(k)
            )

    def test_non_congruence_allows_scaling(self):
        scaled = apply_unimodular(IntMat2(2, 0, 0, 2), (0, 0), UNIT_SIMPLEX, congruence=False)
        assert scaled.area() == 4 * UNIT_SIMPLEX.area()


class TestHausdorffAndClip:
    def test_zero_for_identical(self):
        assert hausdorff_distance_sq_upper(UNIT_SIMPLEX, UNIT_SIMPLEX) == 0

    def test_translate_distance(self):
        moved = UNIT_SIMPLEX.translate((Fraction(3), Fraction(0)))
        # attained at (0, 0) against the nearest moved vertex (3, 0)
        assert hausdorff_distance_sq_upper(UNIT_SIMPLEX, moved) == 9

    def test_clip_keeps_half_plane(self):
        square = [(0, 0), (2, 0), (2, 2), (0, 2)]
        clipped = clip_polygon(square, lambda p: 1 - p[0])
        assert clipped == [(0, 0), (1, 0), (1, 2), (0, 2)]
        assert clip_polygon(square, lambda p: p[0] + 1) == square
        assert len(clip_polygon(square, lambda p: -p[0] - 1)) == 0


@settings(max_examples=40, deadline=None)
@given(triangle_strategy)
def test_mutation_respects_labels(tri):
    # where defined, mutation keeps the label set and fixes one vertex
    for label in tri.labels:
        try:
            image = geometric_mutation(tri, label)
        except NotATriangle:
            continue
        assert image.labels == tri.labels
        fixed = set(tri.vertices()) & set(image.vertices())
        assert len(fixed) >= 1
