"""
Exact numbers of the form x + y*sqrt(r) with rational x, y, r.

Region boundaries such as 34 - 12*sqrt(5) or (c - 16 + 6*sqrt(c - 5))/4 are
irrational, so classifying a rational (b, c) against them is done here by
exact sign computations instead of floating comparisons.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from ssnn_roots.utils import mpf_from_fraction, rational_to_str, working_context


def _sign(value):
    return (value > 0) - (value < 0)


def rational_sqrt(value):
    """
    Exact square root of a nonnegative Fraction, or None when it is irrational.
    """
    value = Fraction(value)
    if value < 0:
        return None
    top, bottom = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if top * top == value.numerator and bottom * bottom == value.denominator:
        return Fraction(top, bottom)
    return None


@dataclass(frozen=True)
class QuadraticSurd:
    """
    x + y * sqrt(r), r >= 0.

    Arithmetic between two surds needs a common radicand (or one side rational).
    """
    x: Fraction
    y: Fraction = Fraction(0)
    r: Fraction = Fraction(0)

    def __post_init__(self):
        x, y, r = Fraction(self.x), Fraction(self.y), Fraction(self.r)
        if r < 0:
            raise ValueError("negative radicand {}".format(r))
        root = rational_sqrt(r)
        if root is not None:
            x, y, r = x + y * root, Fraction(0), Fraction(0)
        if y == 0:
            r = Fraction(0)
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)
        object.__setattr__(self, 'r', r)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, QuadraticSurd):
            return value
        return cls(Fraction(value))

    @property
    def is_rational(self):
        return self.y == 0

    def _common_radicand(self, other):
        if self.is_rational:
            return other.r
        if other.is_rational or other.r == self.r:
            return self.r
        raise ValueError("surds with radicands {} and {} do not mix".format(self.r, other.r))

    def __add__(self, other):
        other = QuadraticSurd.coerce(other)
        return QuadraticSurd(self.x + other.x, self.y + other.y, self._common_radicand(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.x, -self.y, self.r)

    def __sub__(self, other):
        return self + (-QuadraticSurd.coerce(other))

    def __rsub__(self, other):
        return QuadraticSurd.coerce(other) - self

    def __mul__(self, other):
        other = QuadraticSurd.coerce(other)
        r = self._common_radicand(other)
        return QuadraticSurd(self.x * other.x + self.y * other.y * r, self.x * other.y + self.y * other.x, r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Fraction(other)
        return QuadraticSurd(self.x / other, self.y / other, self.r)

    def sign(self):
        """
        Exact sign of x + y*sqrt(r).
        """
        sx, sy = _sign(self.x), _sign(self.y)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x^2 with y^2 * r
        return sx * _sign(self.x * self.x - self.y * self.y * self.r)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __eq__(self, other):
        try:
            return (self - other).sign() == 0
        except (ValueError, TypeError):
            return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y, self.r))

    def to_mpf(self, ctx):
        value = mpf_from_fraction(ctx, self.x)
        if self.y:
            value += mpf_from_fraction(ctx, self.y) * ctx.sqrt(mpf_from_fraction(ctx, self.r))
        return value

    def __float__(self):
        return float(self.to_mpf(working_context(113)))

    def __str__(self):
        if self.is_rational:
            return rational_to_str(self.x)
        radical = "sqrt({})".format(rational_to_str(self.r))
        term = radical if abs(self.y) == 1 else "{}*{}".format(rational_to_str(abs(self.y)), radical)
        if self.x == 0:
            return ("-" if self.y < 0 else "") + term
        return "{} {} {}".format(rational_to_str(self.x), "-" if self.y < 0 else "+", term)


@dataclass(frozen=True)
class ExactQuadraticRoots:
    """
    The pair center +- coefficient * sqrt(radicand).

    A negative radicand means the pair is center +- coefficient*sqrt(-radicand)*i.
    """
    center: Fraction
    coefficient: Fraction
    radicand: Fraction

    @property
    def discriminant_sign(self):
        return _sign(self.radicand)

    @property
    def is_real(self):
        return self.radicand >= 0

    @property
    def is_double(self):
        return self.radicand == 0

    def offset(self):
        """
        coefficient * sqrt(|radicand|) as an exact surd.
        """
        return QuadraticSurd(0, self.coefficient, abs(self.radicand))

    def as_rationals(self):
        """
        Both roots as Fractions (smaller first) when they are rational, else None.
        """
        root = rational_sqrt(self.radicand)
        if root is None:
            return None
        half = abs(self.coefficient) * root
        return (self.center - half, self.center + half)

    def real_members(self):
        """
        Both roots as exact surds (smaller first); only for a real pair.
        """
        if not self.is_real:
            raise ValueError("complex pair has no real members")
        offset = self.offset()
        if offset.y < 0:
            offset = -offset
        return (self.center - offset, self.center + offset)

    def numeric(self, ctx):
        """
        The two roots as mpc numbers of `ctx`, the lower (or negative imaginary) one first.
        """
        center = mpf_from_fraction(ctx, self.center)
        magnitude = abs(mpf_from_fraction(ctx, self.coefficient)) * ctx.sqrt(abs(mpf_from_fraction(ctx, self.radicand)))
        if self.is_real:
            return (ctx.mpc(center - magnitude), ctx.mpc(center + magnitude))
        return (ctx.mpc(center, -magnitude), ctx.mpc(center, magnitude))

    def __str__(self):
        rationals = self.as_rationals()
        if rationals is not None:
            if rationals[0] == rationals[1]:
                return "{} (double)".format(rational_to_str(rationals[0]))
            return "{}, {}".format(*map(rational_to_str, rationals))
        coefficient = "" if abs(self.coefficient) == 1 else "{}*".format(rational_to_str(abs(self.coefficient)))
        radical = "sqrt({})".format(rational_to_str(abs(self.radicand)))
        suffix = "" if self.is_real else "*i"
        return "{} +- {}{}{}".format(rational_to_str(self.center), coefficient, radical, suffix)
