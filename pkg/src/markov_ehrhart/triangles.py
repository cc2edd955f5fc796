"""Factory for the distinguished triangles.

Standard p1-position normal forms, barycentric translates, the rational
branch sequences and their irrational limits, and the open-problem family.
Vertex labels are always 1, 2, 3 and refer to positions in the defining
triple; they survive translation, scaling and mutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidCompanion
from .exact import QuadElem, rational_part
from .geometry import Triangle, integral_barycentre, vscale, vsub
from .markov import MarkovTriple, branch_walk, lagrange_number, tree


@dataclass(frozen=True)
class StandardPositionSpec:
    triple: MarkovTriple
    distinguished_index: int = 1
    companion_lift: Optional[int] = None  # default: least positive residue
    on_axis: Optional[int] = None  # label on the x-axis; default: first non-distinguished


@dataclass(frozen=True)
class LimitSpec:
    a: int
    q: Optional[int] = None  # companion lift; default: least positive residue
    side: str = "c"
    barycentric: bool = False


def default_companion_lift(triple: MarkovTriple, index: int) -> int:
    """Least positive lift of q+ for the ordered roles (p_i; p_j, p_k),
    with j < k the two labels other than ``index``."""
    j, k = (l for l in (1, 2, 3) if l != index)
    p1 = triple.entry(index)
    q = (3 * triple.entry(k) * pow(triple.entry(j), -1, p1)) % p1
    return q if q > 0 else 1


def standard_triangle(spec: StandardPositionSpec) -> Triangle:
    """Normal-form triangle: distinguished vertex at the origin, one vertex
    on the positive x-axis at (P3/(P1*P2), 0), apex ((P1*q - 1)*P2/(P1*P3),
    P1*P2/P3) for roles (P1, P2, P3) = (distinguished, on-axis, apex)."""
    t = spec.triple
    i = spec.distinguished_index
    if i not in (1, 2, 3):
        raise ValueError(f"distinguished_index must be 1, 2 or 3, got {i}")
    j, k = (l for l in (1, 2, 3) if l != i)
    q = spec.companion_lift
    if q is None:
        q = default_companion_lift(t, i)
    p1 = t.entry(i)
    # validate the lift against q+ for the ordered roles (p_i; p_j, p_k)
    q_plus = (3 * t.entry(k) * pow(t.entry(j), -1, p1)) % p1
    if (q - q_plus) % p1 != 0:
        raise InvalidCompanion(
            f"q={q} is not congruent to {q_plus} mod {p1} for {t} at index {i}"
        )
    axis = spec.on_axis if spec.on_axis is not None else j
    if axis == j:
        p2, p3, qq = t.entry(j), t.entry(k), q
        axis_label, apex_label = j, k
    elif axis == k:
        # swapping which vertex sits on the axis negates the companion lift
        p2, p3, qq = t.entry(k), t.entry(j), -q
        axis_label, apex_label = k, j
    else:
        raise ValueError(f"on_axis must be one of {j}, {k}, got {axis}")
    verts = {
        i: (Fraction(0), Fraction(0)),
        axis_label: (Fraction(p3, p1 * p2), Fraction(0)),
        apex_label: (
            Fraction((p1 * qq - 1) * p2, p1 * p3),
            Fraction(p1 * p2, p3),
        ),
    }
    return Triangle(verts)


def to_barycentric(tri: Triangle) -> Triangle:
    """Translate so the integral barycentre is at the origin."""
    beta = integral_barycentre(tri)
    return tri.translate(vscale(-1, beta))


def find_root_triple(a: int) -> MarkovTriple:
    """The tree triple whose largest entry is ``a`` (branch root)."""
    gens = 2
    while True:
        nodes = tree(gens)
        for node in nodes:
            if max(node.triple.as_tuple()) == a:
                return node.triple
        if all(max(n.triple.as_tuple()) > a for n in nodes if n.generation == gens):
            raise ValueError(f"{a} is not a Markov number")
        gens += 1


def _resolve_limit_spec(spec: LimitSpec):
    root = find_root_triple(spec.a)
    a = spec.a
    q = spec.q
    if q is None:
        vals = [v for v in root.as_tuple() if v != a] or [1, 1]
        b0, c0 = (vals[0], vals[1]) if spec.side == "c" else (vals[1], vals[0])
        q = (3 * c0 * pow(b0, -1, a)) % a
        if q == 0:
            q = 1
    if math.gcd(q, a) != 1:
        raise InvalidCompanion(f"gcd(q={q}, a={a}) must be 1")
    return root, a, q


def sequence_triangle(spec: LimitSpec, n: int) -> Triangle:
    """The n-th rational triangle along the branch: standard a-position for
    (a, b_n, c_n) with the b_n-vertex on the x-axis.

    Labels: 1 -> a, 2 -> b_n, 3 -> c_n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    root, a, q = _resolve_limit_spec(spec)
    walk = branch_walk(root, spec.side, n)
    # branch_walk returns (a, leading, lagging); here b_n lags, c_n leads
    c_n, b_n = walk[n].p2, walk[n].p3
    tri = standard_triangle(
        StandardPositionSpec(MarkovTriple(a, b_n, c_n), 1, q, on_axis=2)
    )
    if spec.barycentric:
        tri = tri.translate((Fraction(-q, 3 * a), Fraction(-1, 3)))
    return tri


def limit_triangle(spec: LimitSpec) -> Triangle:
    """Irrational limit of the branch sequence, over d = 9a^2 - 4.

    Vertices: a-vertex (0,0); b-vertex lambda(a)*(1,0); c-vertex
    (1/(a^2*lambda(a)))*(a*q - 1, a^2).
    """
    _, a, q = _resolve_limit_spec(spec)
    lam = lagrange_number(a)
    d = lam.d
    lam_conj = lam.conjugate()  # equals 1/(a^2 * lambda(a))
    zero = QuadElem(0, 0, d)
    verts = {
        1: (zero, zero),
        2: (lam, zero),
        3: (lam_conj * (a * q - 1), lam_conj * (a * a)),
    }
    tri = Triangle(verts)
    if spec.barycentric:
        tri = tri.translate(
            (QuadElem(Fraction(-q, 3 * a), 0, d), QuadElem(Fraction(-1, 3), 0, d))
        )
    return tri


def limit_line_coeffs(spec: LimitSpec):
    """(A, B, C) with A*x + B*y = C the line through the b- and c-vertices
    of the (non-barycentric) limit triangle."""
    tri = limit_triangle(LimitSpec(spec.a, spec.q, spec.side, barycentric=False))
    b, c = tri.vertex(2), tri.vertex(3)
    u = vsub(c, b)
    coeff_a = -u[1]
    coeff_b = u[0]
    coeff_c = coeff_a * b[0] + coeff_b * b[1]
    return coeff_a, coeff_b, coeff_c


def open_problem_triangle(a: int, q: int, b: int, c: int) -> Triangle:
    """(0,0), (c/b)*(1,0), (b/c)*(a*q - 1, a^2)."""
    if math.gcd(a, q) != 1:
        raise ValueError(f"gcd(a={a}, q={q}) must be 1")
    if b < 1 or c < 1:
        raise ValueError("b and c must be positive")
    return Triangle(
        {
            1: (Fraction(0), Fraction(0)),
            2: (Fraction(c, b), Fraction(0)),
            3: (Fraction(b * (a * q - 1), c), Fraction(b * a * a, c)),
        }
    )


def denominator(tri: Triangle) -> int:
    """lcm of the coordinate denominators of a rational triangle."""
    den = 1
    for p in tri.vertices():
        for coord in p:
            den = math.lcm(den, rational_part(coord).denominator)
    return den
