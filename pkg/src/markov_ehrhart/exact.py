"""Exact scalar arithmetic: arbitrary-precision rationals and Q(sqrt(d)).

Rational values are plain ``fractions.Fraction`` instances (always reduced,
positive denominator).  ``QuadElem`` represents rat + irr*sqrt(d) for a fixed
non-square d > 0 with exact Fraction parts.  All comparisons and floors are
exact; no floating point is used anywhere on a decision path.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import MismatchedDiscriminant

Rational = Fraction
Scalar = Union[int, Fraction, "QuadElem"]

# scale for the integer-square-root bracketing used by quad_floor
_SQRT_SHIFT = 128


def _check_discriminant(d: int) -> None:
    if not isinstance(d, int) or d <= 0:
        raise ValueError(f"discriminant must be a positive integer, got {d!r}")
    r = math.isqrt(d)
    if r * r == d:
        raise ValueError(f"discriminant must not be a perfect square, got {d}")


class QuadElem:
    """Element rat + irr*sqrt(d) of the real quadratic field Q(sqrt(d))."""

    __slots__ = ("rat", "irr", "d")

    def __init__(self, rat, irr=0, d: int = None):
        if d is None:
            raise ValueError("QuadElem requires an explicit discriminant d")
        _check_discriminant(d)
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "irr", Fraction(irr))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    # -- coercion ---------------------------------------------------------

    def _lift(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise MismatchedDiscriminant(
                    f"cannot mix sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.d)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.rat + o.rat, self.irr + o.irr, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.rat - o.rat, self.irr - o.irr, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(o.rat - self.rat, o.irr - self.irr, self.d)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(
            self.rat * o.rat + self.irr * o.irr * self.d,
            self.rat * o.irr + self.irr * o.rat,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.rat, -self.irr, self.d)

    def norm(self) -> Fraction:
        """Field norm rat**2 - irr**2 * d (a rational)."""
        return self.rat * self.rat - self.irr * self.irr * self.d

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero QuadElem")
        return QuadElem(self.rat / n, -self.irr / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadElem(-self.rat, -self.irr, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- ordering ---------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of rat + irr*sqrt(d), via case split and squaring."""
        r, i = self.rat, self.irr
        if i == 0:
            return (r > 0) - (r < 0)
        if r == 0:
            return 1 if i > 0 else -1
        if r > 0 and i > 0:
            return 1
        if r < 0 and i < 0:
            return -1
        # mixed signs: compare r**2 against i**2 * d
        lhs = r * r
        rhs = i * i * self.d
        # lhs == rhs is impossible for non-square d with i != 0
        if r > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def _cmp(self, other) -> int:
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        if isinstance(other, QuadElem):
            if other.d != self.d:
                # equal iff both are equal rationals
                return self.irr == 0 and other.irr == 0 and self.rat == other.rat
            return self.rat == other.rat and self.irr == other.irr
        return NotImplemented

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.d))

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __bool__(self):
        return self.rat != 0 or self.irr != 0

    # -- floor ------------------------------------------------------------

    def __floor__(self) -> int:
        if self.irr == 0:
            return math.floor(self.rat)
        # bracket sqrt(d) by s/2**k <= sqrt(d) < (s+1)/2**k, then correct
        s = math.isqrt(self.d << (2 * _SQRT_SHIFT))
        approx = self.rat + self.irr * Fraction(s, 1 << _SQRT_SHIFT)
        n = math.floor(approx)
        while (self - (n + 1)).sign() >= 0:
            n += 1
        while (self - n).sign() < 0:
            n -= 1
        return n

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        # diagnostics only; never used on a decision path
        return float(self.rat) + float(self.irr) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadElem({self.rat!r}, {self.irr!r}, d={self.d})"

    def __str__(self):
        return format_scalar(self)


def quad_sign(x) -> int:
    """Sign of a scalar: -1, 0 or +1."""
    if isinstance(x, QuadElem):
        return x.sign()
    return (x > 0) - (x < 0)


sign_scalar = quad_sign


def quad_floor(x) -> int:
    """Greatest integer n with n <= x, exact for all scalar kinds."""
    return math.floor(x)


def floor_scalar(x) -> int:
    return math.floor(x)


def ceil_scalar(x) -> int:
    return math.ceil(x)


def exact_div(num, den):
    """num / den staying exact; int / int would silently produce a float."""
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


def as_quad(x, d: int) -> QuadElem:
    """Lift a scalar into Q(sqrt(d))."""
    if isinstance(x, QuadElem):
        if x.d != d:
            if x.irr == 0:
                return QuadElem(x.rat, 0, d)
            raise MismatchedDiscriminant(f"cannot lift sqrt({x.d}) into sqrt({d})")
        return x
    return QuadElem(x, 0, d)


def rational_part(x) -> Fraction:
    """The value of x as a Fraction; ValueError if x is irrational."""
    if isinstance(x, QuadElem):
        if x.irr != 0:
            raise ValueError(f"{x} is irrational")
        return x.rat
    return Fraction(x)


def is_rational(x) -> bool:
    return not isinstance(x, QuadElem) or x.irr == 0

# -- parsing / printing ---------------------------------------------------

_FRACTION_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")
_QUAD_RE = re.compile(
    r"^\s*(-?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\((\d+)\)\s*$"
)


def format_scalar(x) -> str:
    """Lossless decimal-string form: "p/q" or "p/q + r/s*sqrt(d)"."""
    if isinstance(x, QuadElem):
        rat = format_scalar(x.rat)
        op = "-" if x.irr < 0 else "+"
        irr = format_scalar(abs(x.irr))
        return f"{rat} {op} {irr}*sqrt({x.d})"
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_scalar(s: str, d: int = None):
    """Parse "p/q" to a Fraction or "p/q +/- r/s*sqrt(d)" to a QuadElem.

    If d is given, a quadratic string must carry the same discriminant and a
    plain fraction is lifted into Q(sqrt(d)).
    """
    m = _QUAD_RE.match(s)
    if m:
        rat = Fraction(m.group(1))
        irr = Fraction(m.group(3))
        if m.group(2) == "-":
            irr = -irr
        sd = int(m.group(4))
        if d is not None and sd != d:
            raise MismatchedDiscriminant(f"expected sqrt({d}), got sqrt({sd})")
        return QuadElem(rat, irr, sd)
    m = _FRACTION_RE.match(s)
    if m:
        f = Fraction(int(m.group(1)), int(m.group(2) or 1))
        return QuadElem(f, 0, d) if d is not None else f
    raise ValueError(f"cannot parse scalar {s!r}")
