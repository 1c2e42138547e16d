"""
Exact real-root counting with Sturm sequences over the rationals.

Counts are taken on half-open intervals (lo, hi]; with a squarefree chain
V(lo) - V(hi) is the number of distinct real roots there, even when lo or
hi is itself a root.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ssnn_roots.exceptions import DegenerateInput, EndpointIsRoot, NotSymmetric
from ssnn_roots.poly_core import RationalPolynomial, derivative, from_delta, gcd
from ssnn_roots.utils import plugin_setting, rational_to_str
from ssnn_roots.verdicts import REAL_STRIP, BoundCheck, strip_bounds

LOG = logging.getLogger(__name__)

DEFAULT_NUDGE = Fraction(1, 2 ** 40)
DEFAULT_NUDGE_RETRIES = 8


@dataclass(frozen=True)
class SturmChain:
    """
    Sturm sequence of the squarefree part of `source`.

    Every member is scaled to coprime integer coefficients by a positive
    factor, so sign patterns are those of the classical chain.
    """
    polynomials: Tuple[RationalPolynomial, ...]
    source: RationalPolynomial
    had_multiple_roots: bool

    @property
    def base(self):
        return self.polynomials[0]

    def variations(self, x):
        """ Sign changes of the chain at x, zeros skipped. """
        signs = [value > 0 for value in (q.evaluate(x) for q in self.polynomials) if value != 0]
        return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def sturm_sequence(p):
    if p.degree < 1:
        raise DegenerateInput("a constant polynomial has no Sturm sequence")
    common = gcd(p, derivative(p))
    base = (p // common if common.degree > 0 else p).primitive()
    chain = [base, derivative(base).primitive()]
    while chain[-1].degree > 0:
        remainder = chain[-2] % chain[-1]
        if remainder.is_zero:
            break
        chain.append((-remainder).primitive())
    return SturmChain(polynomials=tuple(chain), source=p, had_multiple_roots=common.degree > 0)


def count_real_roots(chain, lo, hi):
    """
    Number of distinct real roots in (lo, hi].
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval ({}, {}]".format(rational_to_str(lo), rational_to_str(hi)))
    return chain.variations(lo) - chain.variations(hi)


def cauchy_bound(p):
    """ 1 + max |a_i / a_d|: every root has modulus below it. """
    if p.degree < 1:
        raise DegenerateInput("a constant polynomial has no roots to bound")
    return 1 + max(abs(c / p.leading) for c in p.coefficients[:-1])


def count_in_bracket(chain, lo, hi, nudge=None, retries=None):
    """
    Distinct real roots in [lo, hi], widening any endpoint that is a root.

    Returns (count, lo, hi) with the bracket actually used. Raises
    EndpointIsRoot when an endpoint is still a root after every nudge.
    """
    nudge = Fraction(nudge if nudge is not None else plugin_setting('ENDPOINT_NUDGE', DEFAULT_NUDGE))
    retries = retries if retries is not None else plugin_setting('NUDGE_RETRIES', DEFAULT_NUDGE_RETRIES)
    lo, hi = Fraction(lo), Fraction(hi)
    for _ in range(retries + 1):
        lo_is_root = chain.base.evaluate(lo) == 0
        hi_is_root = chain.base.evaluate(hi) == 0
        if not (lo_is_root or hi_is_root):
            return count_real_roots(chain, lo, hi), lo, hi
        if lo_is_root:
            lo -= nudge
        if hi_is_root:
            hi += nudge
    raise EndpointIsRoot("bracket [{}, {}] still ends on a root after {} nudges".format(
        rational_to_str(lo), rational_to_str(hi), retries))


def isolate_real_roots(p):
    """
    Disjoint intervals (lo, hi], sorted, each holding exactly one distinct real root.
    """
    chain = sturm_sequence(p)
    bound = cauchy_bound(chain.base) + 1
    pending = [(-bound, bound, count_real_roots(chain, -bound, bound))]
    isolated = []
    while pending:
        lo, hi, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            isolated.append((lo, hi))
            continue
        middle = (lo + hi) / 2
        pending.append((lo, middle, count_real_roots(chain, lo, middle)))
        pending.append((middle, hi, count_real_roots(chain, middle, hi)))
    return sorted(isolated)


def _outside_intervals(chain, intervals, lower, upper):
    """
    Pieces of isolating intervals that hold a root outside [lower, upper].
    """
    outside = []
    for lo, hi in intervals:
        if lo < lower:
            cut = min(hi, lower)
            on_bound = cut == lower and chain.base.evaluate(lower) == 0
            if count_real_roots(chain, lo, cut) and not on_bound:
                outside.append((lo, cut))
        if hi > upper:
            start = max(lo, upper)
            if count_real_roots(chain, start, hi):
                outside.append((start, hi))
    return tuple(outside)


def certify_real_strip(v):
    """
    Exact check that every real root of a symmetric delta polynomial lies in
    the floor strip -floor(d/2) <= x <= floor(d/2) - 1.
    """
    if not v.symmetric:
        raise NotSymmetric("the real-root strip is only certified for symmetric delta-vectors")
    p = from_delta(v)
    d = v.degree
    lower, upper = strip_bounds(d, REAL_STRIP)
    chain = sturm_sequence(p)
    bound = max(cauchy_bound(p) + 1, abs(lower) + 1, abs(upper) + 1)

    below = count_real_roots(chain, -bound, lower) - (1 if p.evaluate(lower) == 0 else 0)
    above = count_real_roots(chain, upper, bound)
    total = count_real_roots(chain, -bound, bound)

    violators = ()
    if below or above:
        violators = _outside_intervals(chain, isolate_real_roots(p), lower, upper)
        LOG.warning("Real roots of %s outside [%s, %s]: %s below, %s above", v, lower, upper, below, above)

    return BoundCheck(
        kind=REAL_STRIP,
        degree=d,
        passed=not violators,
        lower=lower,
        upper=upper,
        violators=violators,
        details={
            'below': below,
            'above': above,
            'total': total,
            'boundary_roots': tuple(x for x in (lower, upper) if p.evaluate(x) == 0),
            'multiple_roots': chain.had_multiple_roots,
        },
    )
