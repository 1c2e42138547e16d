"""
SSNN polynomials of any degree with a prescribed real root.

For even d = 2k the family is
    f0 = C(n+k+1, d) + a C(n+k, d) + C(n+k-1, d),
and for odd d = 2k + 1
    f1 = C(n+k+2, d) + a C(n+k+1, d) + a C(n+k, d) + C(n+k-1, d).
Apart from the integer roots -k+2, ..., k-1 (and -1/2 when d is odd) the
roots are -1/2 +- h(a), which sweeps [0, k - 1/2) as a grows from its threshold.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ssnn_roots.exceptions import ParameterBelowThreshold, TargetOutOfRange
from ssnn_roots.poly_core import (
    DeltaVector,
    RationalPolynomial,
    binomial,
    delta_from_polynomial,
    from_delta,
    validate_delta,
)
from ssnn_roots.radicals import ExactQuadraticRoots, QuadraticSurd
from ssnn_roots.utils import fraction_from_mpf, mpf_from_fraction, parse_rational, rational_to_str, working_context

LOG = logging.getLogger(__name__)

EVEN = "even"
ODD = "odd"


def half_degree(d):
    """ k = d/2 for even d, (d-1)/2 for odd d. """
    if d < 2:
        raise ValueError("realization needs d >= 2, got {}".format(d))
    return d // 2


def threshold(d):
    """ Smallest a for which the reduced quadratic has real roots. """
    k = half_degree(d)
    if d % 2 == 0:
        return Fraction(2 * (2 * k + 1), 2 * k - 1)
    return Fraction(12 * k * k + 12 * k - 1, (2 * k - 1) ** 2)


def _family(d, a):
    k = half_degree(d)
    if d % 2 == 0:
        return binomial(k + 1, d) + binomial(k, d) * a + binomial(k - 1, d)
    return binomial(k + 2, d) + binomial(k + 1, d) * a + binomial(k, d) * a + binomial(k - 1, d)


def _offset_radicand(d, a):
    """ (2 h(a))^2. """
    k = half_degree(d)
    if d % 2 == 0:
        return (2 * k - 1) * ((2 * k - 1) * a - 2 * (2 * k + 1)) / (a + 2)
    return ((2 * k - 1) ** 2 * a - (12 * k * k + 12 * k - 1)) / (a + 1)


def linear_factors(d):
    """
    prod_{j=-k+2}^{k-1} (n + j), times (2n + 1) for odd d.
    """
    k = half_degree(d)
    product = RationalPolynomial.constant(1)
    for j in range(-k + 2, k):
        product = product * RationalPolynomial.linear(j, 1)
    if d % 2:
        product = product * RationalPolynomial.linear(1, 2)
    return product


@dataclass(frozen=True)
class RealizationPlan:
    """
    A member of the realizing family with its reduced quadratic, constant term first.
    """
    d: int
    k: int
    parity: str
    a: Fraction
    delta: DeltaVector
    reduced_quadratic: tuple
    realized_offset: QuadraticSurd

    @property
    def g(self):
        return RationalPolynomial(self.reduced_quadratic)

    @property
    def realized_roots(self):
        return ExactQuadraticRoots(Fraction(-1, 2), Fraction(1, 2), _offset_radicand(self.d, self.a))


def construct(d, a):
    """
    The family member for parameter a.

    The delta-vector is read back from the binomial sum rather than placed
    by index. Raises ParameterBelowThreshold when the quadratic would have a
    complex pair.
    """
    a = parse_rational(a)
    k = half_degree(d)
    if a < threshold(d):
        raise ParameterBelowThreshold("a = {} is below the threshold {} for d = {}".format(
            rational_to_str(a), rational_to_str(threshold(d)), d))

    delta = validate_delta(delta_from_polynomial(_family(d, a)))
    if d % 2 == 0:
        reduced = (a * k * (1 - k) + 2 * k * k, a + 2, a + 2)
    else:
        reduced = (a * k * (1 - k) + 3 * k * (k + 1), a + 1, a + 1)
    plan = RealizationPlan(
        d=d,
        k=k,
        parity=EVEN if d % 2 == 0 else ODD,
        a=a,
        delta=delta,
        reduced_quadratic=reduced,
        realized_offset=QuadraticSurd(0, Fraction(1, 2), _offset_radicand(d, a)),
    )
    LOG.debug("Constructed d=%s a=%s delta=%s", d, a, delta)
    return plan


def realized_roots_exact(plan):
    return plan.realized_roots


def h_value(d, a):
    """ h(a) as a float. """
    return float(QuadraticSurd(0, Fraction(1, 2), _offset_radicand(d, parse_rational(a))))


def verify_factorization(plan):
    """
    d! f == reduced quadratic * linear factors, by exact division.
    """
    full = from_delta(plan.delta) * math.factorial(plan.d)
    quotient, remainder = divmod(full, linear_factors(plan.d))
    return remainder.is_zero and quotient == plan.g


@dataclass(frozen=True)
class ParameterSolution:
    """
    Either a parameter a for construct() or, at an end of the interval, the
    boundary polynomial named in `boundary` with its delta-vector.
    """
    target: object
    a: Optional[Fraction]
    boundary: Optional[str]
    delta: DeltaVector
    approximate: bool = False


def boundary_delta(d):
    """ C(n+k, d) for even d, C(n+k+1, d) + C(n+k, d) for odd d. """
    k = half_degree(d)
    entries = [0] * (d + 1)
    entries[k] = 1
    if d % 2:
        entries[k + 1] = 1
    return validate_delta(entries)


def _invert(d, t):
    k = half_degree(d)
    denominator = (2 * k - 1) ** 2 - 4 * t * t
    if d % 2 == 0:
        return (8 * t * t + 2 * (4 * k * k - 1)) / denominator
    return (4 * t * t + 12 * k * k + 12 * k - 1) / denominator


def solve_parameter(d, target):
    """
    Parameter realizing `target` as a root, for targets in [-k, k-1].

    Rational targets are solved exactly. A float target goes through 128-bit
    arithmetic and the solution is flagged approximate. Raises TargetOutOfRange.
    """
    k = half_degree(d)
    approximate = isinstance(target, float)
    exact_target = Fraction(target) if approximate else parse_rational(target)
    if not -k <= exact_target <= k - 1:
        raise TargetOutOfRange("{} is outside [{}, {}] for d = {}".format(target, -k, k - 1, d))

    if exact_target in (-k, k - 1):
        name = "C(n+{k},{d})".format(k=k, d=d) if d % 2 == 0 else "C(n+{k1},{d})+C(n+{k},{d})".format(
            k1=k + 1, k=k, d=d)
        return ParameterSolution(target=target, a=None, boundary=name, delta=boundary_delta(d))

    t = abs(exact_target + Fraction(1, 2))
    if approximate:
        ctx = working_context(128)
        a = fraction_from_mpf(_invert(d, mpf_from_fraction(ctx, t)))
    else:
        a = _invert(d, t)
    a = max(a, threshold(d))
    return ParameterSolution(target=target, a=a, boundary=None, delta=construct(d, a).delta, approximate=approximate)
