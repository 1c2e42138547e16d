"""
Strip and disk verdicts for solved root sets, and the exact analysis of
symmetric delta-vectors (1, b, c, b, 1) and (1, b, c, c, b, 1).

For d = 4, 5 the polynomial d! f(n - 1/2) is n^e G(n^2) with a quadratic
G(X) = a2 X^2 + a1 X + a0 (e = 0 or 1). When G has complex roots X = r e^(i theta),
the roots of f have real parts -1/2 +- sqrt((r + r cos theta)/2).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ssnn_roots.exceptions import Inconclusive, UnsupportedDimension
from ssnn_roots.poly_core import RationalPolynomial, from_delta, half_shift, parity_reduce, validate_delta
from ssnn_roots.radicals import QuadraticSurd
from ssnn_roots.roots import SolverConfig, classify_roots, find_roots
from ssnn_roots.utils import mpf_from_fraction, parse_rational, plugin_setting, working_context
from ssnn_roots.verdicts import (
    DIM45,
    HALF_STRIP,
    NORM_DISK,
    REAL_STRIP,
    STRIP_KINDS,
    BoundCheck,
    strip_bounds,
)

LOG = logging.getLogger(__name__)

REAL_REGIME = "real_regime"
FIRST_COMPLEX_REGIME = "first_complex_regime"
SECOND_COMPLEX_REGIME = "second_complex_regime"
INADMISSIBLE = "inadmissible"

ANALYSIS_PRECISION = 256

# Squares of the real-part bounds |Re(alpha) + 1/2| < B in the complex regimes.
BOUND_SQUARED = {
    4: QuadraticSurd(Fraction(1, 4), Fraction(1, 2), 5),
    5: QuadraticSurd(Fraction(8, 7)),
}


def norm_radius(d):
    """ d(2d - 1)/2: 14 for d = 4 and 45/2 for d = 5. """
    return Fraction(d * (2 * d - 1), 2)


def _max_precision():
    return plugin_setting('MAX_PRECISION_BITS', 1024)


def _refine(rs):
    """
    Re-solve at twice the precision, or None when that is not possible.
    """
    bits = rs.precision * 2
    if bits > _max_precision():
        return None
    refined = find_roots(rs.polynomial, SolverConfig.from_settings(backend=rs.backend, precision_bits=bits))
    if refined.precision <= rs.precision:
        return None
    LOG.info("Bound undecided at %s bits for %s, re-solved at %s bits", rs.precision, rs.polynomial, bits)
    return refined


def _on_bound(p, root, bounds):
    """ The root is an exact rational boundary point. """
    return abs(root.im) <= root.error_radius and any(
        abs(float(root.re) - float(bound)) <= root.error_radius and p.evaluate(bound) == 0 for bound in bounds
    )


def _vertical_strip(rs, d, kind, lower, upper, real_only):
    ctx = working_context(rs.precision)
    lo, hi = mpf_from_fraction(ctx, lower), mpf_from_fraction(ctx, upper)
    margins, violators, straddling = [], [], []
    for root in rs.roots:
        if real_only and not root.is_real_certified:
            continue
        margin = min(ctx.mpf(root.re) - lo, hi - ctx.mpf(root.re))
        margins.append(float(margin))
        if margin < -root.error_radius:
            violators.append(root)
        elif margin < root.error_radius and not _on_bound(rs.polynomial, root, (lower, upper)):
            straddling.append(root)

    if straddling:
        refined = _refine(rs)
        if refined is None:
            raise Inconclusive("{} root(s) of {} straddle [{}, {}] at {} bits".format(
                len(straddling), rs.polynomial, lower, upper, rs.precision), roots=straddling)
        if real_only:
            refined = classify_roots(refined)
        return _vertical_strip(refined, d, kind, lower, upper, real_only)

    return BoundCheck(
        kind=kind,
        degree=d,
        passed=not violators,
        lower=lower,
        upper=upper,
        margins=tuple(margins),
        violators=tuple(violators),
        details={'precision': rs.precision},
    )


def strip_check(rs, d=None, kind=HALF_STRIP):
    """
    Check lower <= Re(alpha) <= upper for every root.

    A root violates the strip only when it is outside by more than its error
    radius. Roots whose disks straddle a bound trigger a re-solve at doubled
    precision, and Inconclusive once the maximum precision is reached.
    """
    if kind not in STRIP_KINDS:
        raise ValueError("unknown strip kind {!r}".format(kind))
    d = d or rs.degree
    lower, upper = strip_bounds(d, kind)
    return _vertical_strip(rs, d, kind, lower, upper, real_only=False)


def real_strip_check(rs, d=None):
    """
    The floor strip applied to the certified real roots only.
    """
    d = d or rs.degree
    lower, upper = strip_bounds(d, REAL_STRIP)
    return _vertical_strip(classify_roots(rs), d, REAL_STRIP, lower, upper, real_only=True)


def norm_check(rs, d=None):
    """
    Check |alpha + 1/2| <= d(2d - 1)/2 for every root.
    """
    d = d or rs.degree
    radius = norm_radius(d)
    margins, violators = [], []
    for root in rs.roots:
        margin = float(radius) - abs(root.value + 0.5)
        margins.append(margin)
        if margin < -root.error_radius:
            violators.append(root)
    notes = () if d in (4, 5) else ("extrapolated",)
    return BoundCheck(
        kind=NORM_DISK,
        degree=d,
        passed=not violators,
        radius=radius,
        margins=tuple(margins),
        violators=tuple(violators),
        notes=notes,
    )


def complex_regime_thresholds(d):
    """
    (low, high) for c: G can have complex roots only when c > low, and the
    admissible b-interval starts at 0 exactly when c <= high.
    """
    if d == 4:
        return QuadraticSurd(34, -12, 5), QuadraticSurd(34, 12, 5)
    if d == 5:
        return QuadraticSurd(89, -60, 2), QuadraticSurd(89, 60, 2)
    raise UnsupportedDimension("complex regimes are only worked out for d = 4, 5, not {}".format(d))


@dataclass(frozen=True)
class BInterval:
    """
    lower < b < upper (or 0 <= b < upper when lower_closed) with surd endpoints.
    """
    lower: QuadraticSurd
    upper: QuadraticSurd
    lower_closed: bool

    def contains(self, b):
        b = Fraction(b)
        above = self.lower <= b if self.lower_closed else self.lower < b
        return above and b < self.upper

    def __str__(self):
        return "{} {} b < {}".format(self.lower, "<=" if self.lower_closed else "<", self.upper)


def admissible_b_interval(d, c):
    """
    The b >= 0 where G(X) has complex roots, for fixed c; None when empty.
    """
    c = Fraction(c)
    if d == 4:
        radicand, center, half = c - 5, (c - 16) / 4, Fraction(3, 2)
    elif d == 5:
        radicand, center, half = 3 * c - 5, (3 * c - 67) / 27, Fraction(20, 27)
    else:
        raise UnsupportedDimension("no b-interval for d = {}".format(d))
    if radicand <= 0:
        return None
    upper = QuadraticSurd(center, half, radicand)
    if upper.sign() <= 0:
        return None
    lower = QuadraticSurd(center, -half, radicand)
    if lower.sign() < 0:
        return BInterval(lower=QuadraticSurd(0), upper=upper, lower_closed=True)
    return BInterval(lower=lower, upper=upper, lower_closed=False)


@dataclass(frozen=True)
class QuarticAnalysis:
    """
    Exact quadratic G(X) for (b, c) and, in the complex regimes, the real-part bound.

    G_coeffs is (a0, a1, a2), constant term first. r, r_cos_theta,
    real_part_magnitude, bound and margin are mpf values at 256 bits (None in
    the real regime).
    """
    b: Fraction
    c: Fraction
    d: int
    G_coeffs: tuple
    discriminant: Fraction
    region: str
    passed: bool
    b_interval: Optional[BInterval] = None
    r: object = None
    r_cos_theta: object = None
    real_part_magnitude: object = None
    bound: object = None
    margin: object = None
    interval_agrees: bool = True

    @property
    def G(self):
        return RationalPolynomial(self.G_coeffs)


def quartic_delta(b, c, d):
    if d == 4:
        return validate_delta((1, b, c, b, 1))
    if d == 5:
        return validate_delta((1, b, c, c, b, 1))
    raise UnsupportedDimension("quartic analysis covers d = 4, 5, not {}".format(d))


def quartic_analysis(b, c, d):
    """
    Classify (b, c) and decide the real-part bound exactly.

    Negative b or c is inadmissible; otherwise the sign of the discriminant
    of G picks the real regime or one of the two complex regimes.

    The bound |Re(alpha) + 1/2| <= B is equivalent to r <= 2B^2 - r cos theta,
    which is compared exactly as surds; the float margin is informational.
    """
    b, c = Fraction(b), Fraction(c)
    if d not in (4, 5):
        raise UnsupportedDimension("quartic analysis covers d = 4, 5, not {}".format(d))
    if b < 0 or c < 0:
        return QuarticAnalysis(b=b, c=c, d=d, G_coeffs=(), discriminant=Fraction(0), region=INADMISSIBLE,
                               passed=False)

    G = parity_reduce(half_shift(from_delta(quartic_delta(b, c, d)))).G
    a0, a1, a2 = G[0], G[1], G[2]
    discriminant = a1 * a1 - 4 * a2 * a0
    interval = admissible_b_interval(d, c)
    in_interval = interval is not None and interval.contains(b)
    common = {
        'b': b,
        'c': c,
        'd': d,
        'G_coeffs': (a0, a1, a2),
        'discriminant': discriminant,
        'b_interval': interval,
        'interval_agrees': (discriminant < 0) == in_interval,
    }
    if not common['interval_agrees']:
        LOG.warning("Discriminant sign and b-interval disagree for d=%s b=%s c=%s", d, b, c)

    if discriminant >= 0:
        return QuarticAnalysis(region=REAL_REGIME, passed=True, **common)

    _, high = complex_regime_thresholds(d)
    region = FIRST_COMPLEX_REGIME if c <= high else SECOND_COMPLEX_REGIME

    modulus_squared = a0 / a2
    r_cos_theta = -a1 / (2 * a2)
    slack = 2 * BOUND_SQUARED[d] - r_cos_theta
    passed = slack.sign() >= 0 and QuadraticSurd(modulus_squared) <= slack * slack

    ctx = working_context(ANALYSIS_PRECISION)
    r = ctx.sqrt(mpf_from_fraction(ctx, modulus_squared))
    rc = mpf_from_fraction(ctx, r_cos_theta)
    magnitude = ctx.sqrt((r + rc) / 2)
    bound = ctx.sqrt(BOUND_SQUARED[d].to_mpf(ctx))
    return QuarticAnalysis(
        region=region,
        passed=passed,
        r=r,
        r_cos_theta=rc,
        real_part_magnitude=magnitude,
        bound=bound,
        margin=bound - magnitude,
        **common
    )


def dim45_containment(rs):
    """
    For d = 4, 5: real roots lie in [-2, 1]; non-real roots satisfy
    |alpha + 1/2| <= d(2d - 1)/2 and |Re(alpha) + 1/2| <= B.
    """
    d = rs.degree
    if d not in (4, 5):
        raise UnsupportedDimension("containment is stated for d = 4, 5, not {}".format(d))
    rs = classify_roots(rs)
    # margins in mpf: (0, 41) in degree 5 has roots exactly on the real-part bound
    ctx = working_context(ANALYSIS_PRECISION)
    radius = mpf_from_fraction(ctx, norm_radius(d))
    bound = ctx.sqrt(BOUND_SQUARED[d].to_mpf(ctx))
    half = ctx.mpf(1) / 2
    margins, violators = [], []
    for root in rs.roots:
        re = ctx.mpf(root.re)
        if root.is_real_certified:
            margin = min(re + 2, 1 - re)
        else:
            shifted = ctx.mpc(re + half, root.im)
            margin = min(radius - abs(shifted), bound - abs(re + half))
        margins.append(float(margin))
        if margin < -root.error_radius:
            violators.append(root)
    return BoundCheck(
        kind=DIM45,
        degree=d,
        passed=not violators,
        lower=Fraction(-2),
        upper=Fraction(1),
        radius=norm_radius(d),
        margins=tuple(margins),
        violators=tuple(violators),
        details={'real_part_bound': float(bound)},
    )


def sample_admissible(d, rng, c_max=400, denominator=1000):
    """
    A rational (b, c) with G(X) in a complex regime, drawn with `rng` (random.Random).
    """
    low, _ = complex_regime_thresholds(d)
    while True:
        c = Fraction(rng.uniform(float(low), c_max)).limit_denominator(denominator)
        interval = admissible_b_interval(d, c)
        if interval is None:
            continue
        b = Fraction(rng.uniform(float(interval.lower), float(interval.upper))).limit_denominator(denominator)
        if b >= 0 and interval.contains(b):
            return b, c


def _grid_axis(lower, upper, step):
    value = lower
    while value <= upper:
        if value >= 0:
            yield value
        value += step


def admissible_grid(d, b_range, c_range, step):
    """
    Grid points (b, c), c-major, at which G(X) is in a complex regime.

    Rows whose admissible b-interval is empty are skipped whole.
    """
    step = parse_rational(step)
    if step <= 0:
        raise ValueError("grid step must be positive, got {}".format(step))
    b_lower, b_upper = (parse_rational(value) for value in b_range)
    c_lower, c_upper = (parse_rational(value) for value in c_range)
    for c in _grid_axis(c_lower, c_upper, step):
        interval = admissible_b_interval(d, c)
        if interval is None:
            continue
        for b in _grid_axis(b_lower, b_upper, step):
            if interval.contains(b):
                yield b, c
