"""Planar integral affine geometry over an exact scalar field.

Points and vectors are pairs of scalars (Fraction or QuadElem).  Triangles
carry a label per vertex so Markov labels survive mutations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateTriangle,
    IrrationalDirection,
    NonUnimodular,
    NotATriangle,
)
from .exact import (
    QuadElem,
    exact_div,
    format_scalar,
    is_rational,
    parse_scalar,
    quad_sign,
)

Point = tuple  # (x, y) scalar pair; vectors use the same representation


def vadd(p, q):
    return (p[0] + q[0], p[1] + q[1])


def vsub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def vscale(k, p):
    return (k * p[0], k * p[1])


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot2(u, v):
    return u[0] * v[0] + u[1] * v[1]


def _rational_ratio(num, den):
    """num/den as a Fraction, or None if the quotient is irrational."""
    q = exact_div(num, den)
    if isinstance(q, QuadElem):
        if q.irr != 0:
            return None
        return q.rat
    return Fraction(q)


def primitive_vector(p, q):
    """Integer vector v with coprime entries and scalar r > 0, q - p = r*v.

    Raises IrrationalDirection when q - p is not proportional to an integer
    vector (possible only for quadratic coordinates).
    """
    dx, dy = vsub(q, p)
    sx, sy = quad_sign(dx), quad_sign(dy)
    if sx == 0 and sy == 0:
        raise ValueError("primitive_vector requires p != q")
    if sx == 0:
        return (0, sy), abs(dy)
    if sy == 0:
        return (sx, 0), abs(dx)
    slope = _rational_ratio(dy, dx)
    if slope is None:
        raise IrrationalDirection(f"direction ({dx}, {dy}) is irrational")
    v = (slope.denominator, slope.numerator)
    r = exact_div(dx, v[0])
    if quad_sign(r) < 0:
        v = (-v[0], -v[1])
        r = -r
    return v, r


def affine_length(p, q):
    return primitive_vector(p, q)[1]


def angle_determinant(vertex, other1, other2) -> int:
    """|det| of the primitive vectors along the two edges at ``vertex``."""
    v1, _ = primitive_vector(vertex, other1)
    v2, _ = primitive_vector(vertex, other2)
    return abs(det2(v1, v2))


def shear_matrix(v) -> "IntMat2":
    """Matrix of the full shear u -> u + det(v, u) * v."""
    v1, v2 = v
    return IntMat2(1 - v1 * v2, v1 * v1, -v2 * v2, 1 + v1 * v2)


def half_shear(v, u):
    """Apply the shear u -> u + det(v, u)*v on H_v+ = {det(u, v) >= 0}."""
    if quad_sign(det2(u, v)) >= 0:
        return vadd(u, vscale(det2(v, u), v))
    return u


@dataclass(frozen=True)
class IntMat2:
    """2x2 integer matrix (row-major a, b / c, d)."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, p):
        return (self.a * p[0] + self.b * p[1], self.c * p[0] + self.d * p[1])

    @staticmethod
    def identity() -> "IntMat2":
        return IntMat2(1, 0, 0, 1)


class Triangle:
    """Three labeled non-collinear vertices over an exact scalar field."""

    __slots__ = ("_verts",)

    def __init__(self, vertices: dict):
        if len(vertices) != 3:
            raise ValueError("a triangle needs exactly three labeled vertices")
        verts = {label: (p[0], p[1]) for label, p in vertices.items()}
        a, b, c = (verts[label] for label in sorted(verts))
        if quad_sign(det2(vsub(b, a), vsub(c, a))) == 0:
            raise DegenerateTriangle(f"collinear vertices {verts}")
        object.__setattr__(self, "_verts", verts)

    def __setattr__(self, name, value):
        raise AttributeError("Triangle is immutable")

    @property
    def labels(self):
        return tuple(sorted(self._verts))

    def vertex(self, label):
        return self._verts[label]

    def items(self):
        return [(label, self._verts[label]) for label in self.labels]

    def vertices(self):
        return [self._verts[label] for label in self.labels]

    def opposite_labels(self, label):
        return tuple(l for l in self.labels if l != label)

    def translate(self, v) -> "Triangle":
        return Triangle({l: vadd(p, v) for l, p in self._verts.items()})

    def scale(self, k) -> "Triangle":
        return Triangle({l: vscale(k, p) for l, p in self._verts.items()})

    def area(self):
        a, b, c = self.vertices()
        d = det2(vsub(b, a), vsub(c, a))
        if quad_sign(d) < 0:
            d = -d
        return d / 2

    def is_rational(self) -> bool:
        return all(is_rational(x) for p in self.vertices() for x in p)

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.items() == other.items()

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        inner = ", ".join(
            f"{label}: ({format_scalar(p[0])}, {format_scalar(p[1])})"
            for label, p in self.items()
        )
        return f"Triangle({inner})"

    def to_json_dict(self) -> dict:
        return {
            str(label): [format_scalar(p[0]), format_scalar(p[1])]
            for label, p in self.items()
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Triangle":
        verts = {}
        for label, (xs, ys) in data.items():
            key = int(label) if label.isdigit() else label
            verts[key] = (parse_scalar(xs), parse_scalar(ys))
        return Triangle(verts)


def line_intersection(p1, d1, p2, d2):
    """Intersection of the lines p1 + s*d1 and p2 + t*d2."""
    den = det2(d1, d2)
    if quad_sign(den) == 0:
        raise ValueError("parallel lines do not intersect")
    s = exact_div(det2(vsub(p2, p1), d2), den)
    return vadd(p1, vscale(s, d1))


def integral_bisector(tri: Triangle, label):
    """(vertex, primitive direction of v12 + v13), pointing into the triangle."""
    p = tri.vertex(label)
    la, lb = tri.opposite_labels(label)
    v1, _ = primitive_vector(p, tri.vertex(la))
    v2, _ = primitive_vector(p, tri.vertex(lb))
    w = vadd(v1, v2)
    g = math.gcd(w[0], w[1])
    return p, (w[0] // g, w[1] // g)


def integral_barycentre(tri: Triangle):
    """Common intersection point of the three integral bisectors."""
    l1, l2, l3 = tri.labels
    p1, w1 = integral_bisector(tri, l1)
    p2, w2 = integral_bisector(tri, l2)
    beta = line_intersection(p1, w1, p2, w2)
    p3, w3 = integral_bisector(tri, l3)
    if quad_sign(det2(vsub(beta, p3), w3)) != 0:
        raise AssertionError("integral bisectors do not meet at a single point")
    return beta


def affine_distance(p, line_point, v):
    """|det(p - line_point, v)| for a primitive direction v."""
    d = det2(vsub(p, line_point), v)
    if quad_sign(d) < 0:
        d = -d
    return d


def _strictly_between(x, a, b) -> bool:
    """x strictly inside the segment [a, b], all three collinear."""
    u = vsub(b, a)
    i = 0 if quad_sign(u[0]) != 0 else 1
    s = exact_div(x[i] - a[i], u[i])
    return quad_sign(s) > 0 and quad_sign(s - 1) < 0


def geometric_mutation(tri: Triangle, label) -> Triangle:
    """Mutate at the labeled vertex: half-shear along the integral bisector.

    The mutated vertex is replaced by the intersection of the bisector with
    the opposite edge (and keeps its label); one of the other two vertices is
    sheared outward.  Exactly one side choice yields a triangle; a
    quadrilateral image raises NotATriangle.
    """
    p, w = integral_bisector(tri, label)
    la, lb = tri.opposite_labels(label)
    a, b = tri.vertex(la), tri.vertex(lb)
    new_vertex = line_intersection(p, w, a, vsub(b, a))
    if not _strictly_between(new_vertex, a, b):
        raise NotATriangle("bisector does not cross the opposite edge interior")
    shear = shear_matrix(w)
    for moved_label, fixed_label in ((la, lb), (lb, la)):
        moved = tri.vertex(moved_label)
        fixed = tri.vertex(fixed_label)
        image = vadd(p, shear.apply(vsub(moved, p)))
        # the image is a triangle iff the old vertex lands inside the new edge
        if quad_sign(det2(vsub(p, fixed), vsub(image, fixed))) == 0 and _strictly_between(
            p, fixed, image
        ):
            return Triangle({fixed_label: fixed, label: new_vertex, moved_label: image})
    raise NotATriangle("both half-shear images are quadrilaterals")


def apply_unimodular(mat: IntMat2, translation, tri: Triangle, congruence: bool = True) -> Triangle:
    """Vertex-wise x -> M x + t; |det M| = 1 enforced for congruence use."""
    if congruence and abs(mat.det()) != 1:
        raise NonUnimodular(f"|det| = {abs(mat.det())} != 1")
    return Triangle({l: vadd(mat.apply(p), translation) for l, p in tri.items()})


# -- exact distances (Hausdorff diagnostic) --------------------------------


def _dist2(p, q):
    u = vsub(p, q)
    return dot2(u, u)


def _point_segment_dist2(p, a, b):
    ab = vsub(b, a)
    t = exact_div(dot2(vsub(p, a), ab), dot2(ab, ab))
    if quad_sign(t) <= 0:
        return _dist2(p, a)
    if quad_sign(t - 1) >= 0:
        return _dist2(p, b)
    foot = vadd(a, vscale(t, ab))
    return _dist2(p, foot)


def _point_triangle_dist2(p, tri: Triangle):
    a, b, c = tri.vertices()
    orient = quad_sign(det2(vsub(b, a), vsub(c, a)))
    inside = True
    for u, v in ((a, b), (b, c), (c, a)):
        s = quad_sign(det2(vsub(v, u), vsub(p, u)))
        if s != 0 and s != orient:
            inside = False
            break
    if inside:
        return 0 * p[0]
    best = None
    for u, v in ((a, b), (b, c), (c, a)):
        d2 = _point_segment_dist2(p, u, v)
        if best is None or quad_sign(d2 - best) < 0:
            best = d2
    return best


def hausdorff_distance_sq_upper(t1: Triangle, t2: Triangle):
    """Max over all vertices of the squared distance to the other triangle.

    For convex sets the Hausdorff distance is attained at a vertex, so this
    is exact, not just an upper bound; the name records the mechanism.
    """
    best = None
    for src, dst in ((t1, t2), (t2, t1)):
        for p in src.vertices():
            d2 = _point_triangle_dist2(p, dst)
            if best is None or quad_sign(d2 - best) > 0:
                best = d2
    return best


def clip_polygon(points, f):
    """Clip a convex polygon to {f >= 0} for an exact affine functional f."""
    out = []
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        fp, fq = quad_sign(f(p)), quad_sign(f(q))
        if fp >= 0:
            out.append(p)
        if fp * fq < 0:
            # strict sign change: intersect [p, q] with {f = 0}
            t = exact_div(f(p), f(p) - f(q))
            out.append(vadd(p, vscale(t, vsub(q, p))))
    dedup = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup
