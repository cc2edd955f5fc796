"""Independent brute-force lattice-point oracles.

These deliberately share no code with the package's counters: membership is
decided per point with orientation sign tests over the full bounding box.
``count_points_exact`` works for any exact scalar kind (Fraction or QuadElem)
and is the ground truth for small inputs; ``count_points_fast`` is a
vectorized integer version used where the exact loop would be too slow.
"""

import math
from fractions import Fraction

import numpy as np

from markov_ehrhart.exact import quad_sign


def _orient(a, b, p):
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])


def count_points_exact(verts, t):
    """#(t * polygon) over Z^2 by exhaustive membership tests."""
    if t == 0:
        return 1
    pts = [(x * t, y * t) for x, y in verts]
    a, b, c = pts
    orientation = quad_sign(_orient(a, b, c))
    assert orientation != 0, "degenerate triangle"
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    count = 0
    for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            point = (x, y)
            if all(
                orientation * quad_sign(_orient(u, v, point)) >= 0
                for u, v in ((a, b), (b, c), (c, a))
            ):
                count += 1
    return count


def count_points_fast(verts, t):
    """Same membership test, vectorized over the scaled integer lattice."""
    if t == 0:
        return 1
    den = 1
    for x, y in verts:
        den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    iv = [(int(Fraction(x) * den) * t, int(Fraction(y) * den) * t) for x, y in verts]
    (ax, ay), (bx, by), (cx, cy) = iv
    orientation = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    assert orientation != 0, "degenerate triangle"
    sgn = 1 if orientation > 0 else -1
    xs = [p[0] for p in iv]
    ys = [p[1] for p in iv]
    x_lo, x_hi = -((-min(xs)) // den), max(xs) // den
    y_lo, y_hi = -((-min(ys)) // den), max(ys) // den
    if x_hi < x_lo or y_hi < y_lo:
        return 0
    grid_x, grid_y = np.meshgrid(
        np.arange(x_lo, x_hi + 1, dtype=np.int64) * den,
        np.arange(y_lo, y_hi + 1, dtype=np.int64) * den,
        indexing="ij",
    )
    inside = np.ones(grid_x.shape, dtype=bool)
    for (ux, uy), (vx, vy) in ((iv[0], iv[1]), (iv[1], iv[2]), (iv[2], iv[0])):
        inside &= sgn * ((vx - ux) * (grid_y - uy) - (vy - uy) * (grid_x - ux)) >= 0
    return int(inside.sum())
