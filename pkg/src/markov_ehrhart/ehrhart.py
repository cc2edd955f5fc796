"""Exact lattice-point counting and Ehrhart period certification.

Counting is a column scan: for each integer x in the dilate's x-range the
exact y-interval cut by the edges is computed and its integer count added.
Rational polygons run on a pure-integer fast path (coordinates scaled by the
common denominator); quadratic-field polygons use QuadElem arithmetic with
exact floors.  Period certificates sample t = 0 .. 3*den - 1, which pins
every residue-class polynomial because the true period divides den.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import BudgetExceeded, InconsistentFit, InsufficientSamples
from .exact import format_scalar, is_rational, rational_part
from .geometry import Triangle, clip_polygon, det2, shear_matrix
from .markov import MarkovTriple
from .triangles import denominator, open_problem_triangle


def _ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


class _RationalCounter:
    """Column-scan counter for a convex polygon with Fraction vertices."""

    def __init__(self, verts):
        den = 1
        for x, y in verts:
            den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
        self.den = den
        self.iv = [(int(x * den), int(y * den)) for x, y in verts]

    def count(self, t: int) -> int:
        if t < 0:
            raise ValueError("t must be >= 0")
        if t == 0:
            return 1
        den = self.den
        pts = self.iv
        n = len(pts)
        xs = [t * x for x, _ in pts]
        x_lo = _ceil_div(min(xs), den)
        x_hi = max(xs) // den
        edges = []
        for i in range(n):
            (ax, ay), (bx, by) = pts[i], pts[(i + 1) % n]
            tax, tbx = t * ax, t * bx
            if tax <= tbx:
                lo, hi = tax, tbx
            else:
                lo, hi = tbx, tax
            edges.append((tax, t * ay, tbx, t * by, lo, hi, bx - ax, by - ay))
        total = 0
        for x in range(x_lo, x_hi + 1):
            dx = den * x
            lo_n = lo_d = hi_n = hi_d = None
            for tax, tay, tbx, tby, lo, hi, ex, ey in edges:
                if lo <= dx <= hi:
                    if tax == tbx:
                        cands = ((tay, den), (tby, den))
                    else:
                        num = tay * ex + (dx - tax) * ey
                        d = den * ex
                        if d < 0:
                            num, d = -num, -d
                        cands = ((num, d),)
                    for num, d in cands:
                        if lo_n is None:
                            lo_n = hi_n = num
                            lo_d = hi_d = d
                        else:
                            if num * lo_d < lo_n * d:
                                lo_n, lo_d = num, d
                            if num * hi_d > hi_n * d:
                                hi_n, hi_d = num, d
            if lo_n is not None:
                c = hi_n // hi_d - _ceil_div(lo_n, lo_d) + 1
                if c > 0:
                    total += c
        return total


class _QuadCounter:
    """Column-scan counter for a convex polygon with QuadElem vertices."""

    def __init__(self, verts):
        # plain-int coordinates would make `/` fall back to float below
        self.verts = [
            tuple(Fraction(c) if isinstance(c, int) else c for c in p) for p in verts
        ]

    def count(self, t: int) -> int:
        if t < 0:
            raise ValueError("t must be >= 0")
        if t == 0:
            return 1
        pts = [(t * x, t * y) for x, y in self.verts]
        n = len(pts)
        xs = [p[0] for p in pts]
        x_lo = math.ceil(min(xs))
        x_hi = math.floor(max(xs))
        total = 0
        for x in range(x_lo, x_hi + 1):
            ylo = yhi = None
            for i in range(n):
                (ax, ay), (bx, by) = pts[i], pts[(i + 1) % n]
                lo, hi = (ax, bx) if ax <= bx else (bx, ax)
                if lo <= x <= hi:
                    if ax == bx:
                        cands = (ay, by)
                    else:
                        cands = (ay + (x - ax) * (by - ay) / (bx - ax),)
                    for y in cands:
                        if ylo is None:
                            ylo = yhi = y
                        else:
                            if y < ylo:
                                ylo = y
                            if y > yhi:
                                yhi = y
            if ylo is not None:
                c = math.floor(yhi) - math.ceil(ylo) + 1
                if c > 0:
                    total += c
        return total


def _make_counter(verts):
    if all(is_rational(x) for p in verts for x in p):
        return _RationalCounter([(rational_part(x), rational_part(y)) for x, y in verts])
    return _QuadCounter(verts)


def count_lattice_points(tri: Triangle, t: int) -> int:
    """#(t * tri) intersected with Z^2, boundary included."""
    return _make_counter(tri.vertices()).count(t)


def count_polygon_lattice_points(verts, t: int) -> int:
    """Same column scan for an arbitrary convex polygon (vertex list)."""
    return _make_counter(verts).count(t)


@dataclass(frozen=True)
class CountTable:
    description: str
    samples: Tuple[Tuple[int, int], ...]  # (t, L(t)), t strictly increasing

    def counts(self) -> List[int]:
        return [c for _, c in self.samples]

    def to_csv(self) -> str:
        lines = ["t,count"]
        lines.extend(f"{t},{c}" for t, c in self.samples)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "description": self.description,
            "samples": [[t, c] for t, c in self.samples],
        }


def count_table(tri: Triangle, t_max: int) -> CountTable:
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    counter = _make_counter(tri.vertices())
    samples = tuple((t, counter.count(t)) for t in range(t_max + 1))
    return CountTable(repr(tri), samples)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period T and one (c2, c1, c0) coefficient triple per residue class."""

    period: int
    coefficients: Tuple[Tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.coefficients) != self.period:
            raise ValueError("need exactly one coefficient triple per class")

    def evaluate(self, t: int) -> Fraction:
        c2, c1, c0 = self.coefficients[t % self.period]
        return c2 * t * t + c1 * t + c0

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "classes": [
                {
                    "residue": r,
                    "coefficients": [format_scalar(c) for c in self.coefficients[r]],
                }
                for r in range(self.period)
            ],
        }


def _interpolate_quadratic(pts) -> Tuple[Fraction, Fraction, Fraction]:
    """Monomial coefficients of the degree-<=2 polynomial through 3 points."""
    (x0, y0), (x1, y1), (x2, y2) = pts
    d01 = Fraction(y1 - y0, x1 - x0)
    d12 = Fraction(y2 - y1, x2 - x1)
    c2 = (d12 - d01) / (x2 - x0)
    # Newton form y0 + d01*(x - x0) + c2*(x - x0)*(x - x1), expanded
    c1 = d01 - c2 * (x0 + x1)
    c0 = y0 - d01 * x0 + c2 * x0 * x1
    return (c2, c1, c0)


def fit_quasipolynomial(table: CountTable, period: int) -> QuasiPolynomial:
    """Fit degree-<=2 class polynomials through the first three samples of
    each residue class and verify every remaining sample exactly.

    Raises InsufficientSamples if some class has fewer than three samples,
    InconsistentFit (with the first violated sample) if verification fails.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    classes = [[] for _ in range(period)]
    for t, c in table.samples:
        classes[t % period].append((t, c))
    if any(len(cl) < 3 for cl in classes):
        raise InsufficientSamples(
            f"period {period} needs 3 samples per class over {len(table.samples)} samples"
        )
    coeffs = [_interpolate_quadratic(cl[:3]) for cl in classes]
    qp = QuasiPolynomial(period, tuple(coeffs))
    for t, c in table.samples:
        expected = qp.evaluate(t)
        if expected != c:
            raise InconsistentFit(t, expected, c)
    return qp


def _divisors(n: int) -> List[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def certify_minimal_period(
    tri: Triangle, den_cap: int = 2000
) -> Tuple[int, QuasiPolynomial]:
    """Minimal Ehrhart period of a rational triangle, with its fit.

    Samples t = 0 .. 3*den - 1 (three per residue class mod den); since the
    true period divides den this pins every class polynomial, so the first
    divisor of den whose coarser fit verifies is a proof of minimality.
    """
    den = denominator(tri)
    if den > den_cap:
        raise BudgetExceeded(f"denominator {den} exceeds cap {den_cap}")
    table = count_table(tri, 3 * den - 1)
    for period in _divisors(den):
        try:
            return period, fit_quasipolynomial(table, period)
        except InconsistentFit:
            continue
    raise AssertionError("a period dividing den must fit; counting is broken")


def verify_period_on_range(tri: Triangle, period: int, t_max: int) -> dict:
    """Range-limited period check (the honest option for irrational input).

    Fits classes mod ``period`` on t = 0..t_max and reports exact
    consistency.  The report is labeled verified-on-range, never proved.
    """
    if t_max < 3 * period:
        raise InsufficientSamples(f"t_max={t_max} < 3*period={3 * period}")
    table = count_table(tri, t_max)
    report = {
        "period": period,
        "t_max": t_max,
        "status": f"verified for t <= {t_max} (range check, not a certificate)",
    }
    try:
        qp = fit_quasipolynomial(table, period)
    except InconsistentFit as exc:
        report["passed"] = False
        report["first_divergence"] = {
            "t": exc.t,
            "expected": format_scalar(exc.expected),
            "actual": exc.actual,
        }
        return report
    report["passed"] = True
    report["first_divergence"] = None
    report["quasipolynomial"] = qp.to_json_dict()
    return report


def ehrhart_equivalent(t1: Triangle, t2: Triangle, t_max: int) -> dict:
    """Exact comparison of the two count tables up to t_max."""
    c1 = _make_counter(t1.vertices())
    c2 = _make_counter(t2.vertices())
    for t in range(t_max + 1):
        a, b = c1.count(t), c2.count(t)
        if a != b:
            return {
                "passed": False,
                "t_max": t_max,
                "first_divergence": {"t": t, "count_a": a, "count_b": b},
            }
    return {"passed": True, "t_max": t_max, "first_divergence": None}


def count_halfshear_image(tri: Triangle, v, t: int) -> int:
    """Lattice points of t * (half-shear image of tri) for primitive v.

    The triangle is split by the shear axis (the line through the origin
    along v); the H+ piece is sheared, both pieces are counted, and lattice
    points on the shared axis segment are counted once.
    """
    if t == 0:
        return 1
    verts = tri.vertices()
    side = lambda p: det2(p, v)
    plus = clip_polygon(verts, side)
    minus = clip_polygon(verts, lambda p: -side(p))
    if len(minus) < 3:
        sheared = [shear_matrix(v).apply(p) for p in verts]
        return count_polygon_lattice_points(sheared, t)
    if len(plus) < 3:
        return count_polygon_lattice_points(verts, t)
    sheared = [shear_matrix(v).apply(p) for p in plus]
    total = count_polygon_lattice_points(sheared, t) + count_polygon_lattice_points(
        minus, t
    )
    # lattice points on the axis segment are exactly integer multiples of v
    params = []
    for p in plus:
        if side(p) == 0:
            i = 0 if v[0] != 0 else 1
            params.append(Fraction(rational_part(p[i]), v[i]))
    if params:
        lo, hi = min(params), max(params)
        overlap = math.floor(t * hi) - math.ceil(t * lo) + 1
        total -= max(0, overlap)
    return total


def is_markov_scan_hit(a: int, q: int, b: int, c: int) -> Tuple[bool, bool]:
    """(is (a,b,c) a Markov triple, does q match its companion class)."""
    try:
        MarkovTriple(a, b, c)
    except ValueError:
        return False, False
    if math.gcd(b, a) != 1:
        return True, False
    return True, (q - 3 * c * pow(b, -1, a)) % a == 0


def scan_open_problem(
    a: int,
    q: int,
    b_range,
    c_range,
    t_budget: int,
    den_cap: int = 2000,
) -> List[dict]:
    """Pseudo-integrality scan over the open-problem family.

    Pairs with gcd(b, c) > 1 are skipped: they rescale to a smaller coprime
    pair with the same triangle shape.  For each coprime pair the counts are
    streamed against the quadratic through t = 0, 1, 2; the first mismatch
    refutes pseudo-integrality (soundly, with evidence), while a full pass
    through 3*den samples certifies period 1.  ``t_budget`` caps the number
    of samples spent per pair; pairs whose certificate would need more are
    reported as inconclusive.
    """
    if math.gcd(a, q) != 1:
        raise ValueError(f"gcd(a={a}, q={q}) must be 1")
    b_values = list(b_range)
    c_values = list(c_range)
    results = []
    for b in b_values:
        for c in c_values:
            if math.gcd(b, c) != 1:
                continue
            tri = open_problem_triangle(a, q, b, c)
            den = denominator(tri)
            record = {"a": a, "q": q, "b": b, "c": c, "denominator": den}
            is_markov, companion_ok = is_markov_scan_hit(a, q, b, c)
            record["markov_triple"] = is_markov
            record["companion_matches"] = companion_ok
            needed = 3 * den
            counter = _make_counter(tri.vertices())
            limit = min(needed, t_budget)
            if limit < 3:
                record["pseudo_integral"] = None
                record["verdict"] = "inconclusive: budget below three samples"
                results.append(record)
                continue
            first = [(t, counter.count(t)) for t in range(3)]
            poly = _interpolate_quadratic(first)
            qp = QuasiPolynomial(1, (poly,))
            violation = None
            for t in range(3, limit):
                actual = counter.count(t)
                expected = qp.evaluate(t)
                if expected != actual:
                    violation = (t, expected, actual)
                    break
            if violation is not None:
                t, expected, actual = violation
                record["pseudo_integral"] = False
                record["verdict"] = (
                    f"not pseudo-integral: t={t} expected {expected} got {actual}"
                )
            elif limit < needed:
                record["pseudo_integral"] = None
                record["verdict"] = (
                    f"inconclusive: consistent for t < {limit}, certificate needs {needed}"
                )
            else:
                record["pseudo_integral"] = True
                record["verdict"] = "pseudo-integral: period 1 certified"
                record["quasipolynomial"] = qp.to_json_dict()
            results.append(record)
    return results
