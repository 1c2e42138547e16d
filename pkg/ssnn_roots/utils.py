"""
Util function definitions.
"""
import datetime
from fractions import Fraction

import mpmath
from pytz import UTC


def working_context(bits):
    """
    Return a private mpmath context running at `bits` of precision.

    Each solve gets its own context so precision changes never leak
    between concurrent callers.
    """
    ctx = mpmath.MPContext()
    ctx.prec = int(bits)
    return ctx


def parse_rational(value):
    """
    Read "p/q", "p", an int or a Fraction into a Fraction.

    Floats are refused: they would silently turn 0.1 into a dyadic rational.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        return Fraction(text)
    raise ValueError("cannot read {!r} as an exact rational".format(value))


def rational_to_str(value):
    """
    "p/q" text for a rational, plain "p" for integers.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def fraction_from_mpf(value):
    """
    Exact rational value of a finite mpf.
    """
    if not mpmath.isfinite(value):
        raise ValueError("non-finite value {}".format(value))
    sign, mantissa, exponent, _ = value._mpf_  # pylint: disable=protected-access
    if sign:
        mantissa = -mantissa
    if exponent >= 0:
        return Fraction(int(mantissa) << int(exponent))
    return Fraction(int(mantissa), 1 << int(-exponent))


def mpf_from_fraction(ctx, value):
    """
    Round a Fraction to the precision of `ctx`.
    """
    value = Fraction(value)
    return ctx.mpf(value.numerator) / value.denominator


def decimal_digits(bits):
    """
    Number of decimal digits worth printing at `bits` of precision.
    """
    return max(15, int(bits * 0.30103))


def mp_to_str(value, bits):
    """
    Decimal text of an mpf at the digits the run precision supports.
    """
    return mpmath.nstr(value, decimal_digits(bits), min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def utc_now():
    """
    Timezone aware current time, used to stamp reports.
    """
    return datetime.datetime.now(UTC)


def plugin_setting(name, default):
    """
    Value of SSNN_ROOTS_<name> from Django settings, or `default` when the
    library is used without configured settings.
    """
    from django.conf import settings  # pylint: disable=import-outside-toplevel
    if not settings.configured:
        return default
    return getattr(settings, 'SSNN_ROOTS_{}'.format(name), default)
