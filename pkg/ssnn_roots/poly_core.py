"""
Exact polynomials built from delta-vectors.

A delta-vector (delta_0, ..., delta_d) stands for the polynomial
sum_j delta_j * C(n + d - j, d). Everything here is exact rational
arithmetic on power-basis coefficients (constant term first); floating
point only appears in evaluate_complex.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import sympy

from ssnn_roots.exceptions import AllZero, IndexOutOfRange, InvalidDelta, NegativeEntry, NotSymmetric, ParityViolation
from ssnn_roots.utils import mpf_from_fraction, parse_rational, rational_to_str, working_context

_X = sympy.Symbol('n')


@dataclass(frozen=True)
class DeltaVector:
    """
    Nonnegative rationals (delta_0, ..., delta_d), not all zero, d >= 1.

    Build it through validate_delta; the constructor does not check.
    """
    entries: Tuple[Fraction, ...]

    @property
    def degree(self):
        return len(self.entries) - 1

    @property
    def symmetric(self):
        d = self.degree
        return all(self.entries[i] == self.entries[d - i] for i in range(d // 2 + 1))

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "({})".format(",".join(rational_to_str(entry) for entry in self.entries))


@dataclass(frozen=True)
class RationalPolynomial:
    """
    Power-basis polynomial with Fraction coefficients, constant term first.

    Trailing zero coefficients are dropped on construction, so the leading
    coefficient is always nonzero. The zero polynomial has no coefficients
    and degree -1; it only shows up as a remainder.
    """
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = [Fraction(value) for value in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, degree, value=1):
        return cls((0,) * degree + (value,))

    @classmethod
    def linear(cls, constant, slope):
        """ slope * n + constant """
        return cls((constant, slope))

    @classmethod
    def from_sympy(cls, poly):
        """
        Convert a univariate sympy Poly over QQ.
        """
        coefficients = [Fraction(int(c.p), int(c.q)) for c in map(sympy.Rational, reversed(poly.all_coeffs()))]
        return cls(tuple(coefficients))

    def to_sympy(self):
        if self.is_zero:
            return sympy.Poly(0, _X, domain=sympy.QQ)
        coefficients = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coefficients)]
        return sympy.Poly(coefficients, _X, domain=sympy.QQ)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def leading(self):
        return self.coefficients[-1]

    def __getitem__(self, power):
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = Fraction(other)
            return RationalPolynomial(tuple(c * other for c in self.coefficients))
        if self.is_zero or other.is_zero:
            return RationalPolynomial(())
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if left == 0:
                continue
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return RationalPolynomial(tuple(product))

    __rmul__ = __mul__

    def __divmod__(self, other):
        """
        Exact long division: self = quotient * other + remainder.
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        shift = len(remainder) - len(other.coefficients)
        if shift < 0:
            return RationalPolynomial(()), self
        quotient = [Fraction(0)] * (shift + 1)
        lead = other.leading
        for position in range(shift, -1, -1):
            factor = remainder[position + other.degree] / lead
            quotient[position] = factor
            if factor:
                for i, c in enumerate(other.coefficients):
                    remainder[position + i] -= factor * c
        return RationalPolynomial(tuple(quotient)), RationalPolynomial(tuple(remainder[:other.degree]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def evaluate(self, x):
        """ Exact Horner evaluation at a rational point. """
        x = Fraction(x)
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def compose_linear(self, slope, constant):
        """ self(slope * n + constant), exactly. """
        inner = RationalPolynomial.linear(constant, slope)
        result = RationalPolynomial(())
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def monic(self):
        return self * (1 / self.leading)

    def integer_coefficients(self):
        """
        Integer coefficients of a positive multiple of self, with no common factor.
        """
        scale = 1
        for c in self.coefficients:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        integers = [int(c * scale) for c in self.coefficients]
        content = 0
        for value in integers:
            content = math.gcd(content, value)
        return [value // content for value in integers] if content else integers

    def primitive(self):
        """ Positive multiple with coprime integer coefficients; signs are preserved. """
        return RationalPolynomial(tuple(self.integer_coefficients()))

    def __str__(self):
        return format_polynomial(self)


def _coerce(value):
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial.constant(value)


def format_polynomial(p, variable='n'):
    """
    Human readable text, highest power first.
    """
    if p.is_zero:
        return "0"
    terms = []
    for power in range(p.degree, -1, -1):
        c = p[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if power == 0:
            body = rational_to_str(magnitude)
        else:
            monomial = variable if power == 1 else "{}^{}".format(variable, power)
            body = monomial if magnitude == 1 else "{}*{}".format(rational_to_str(magnitude), monomial)
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += " {} {}".format(sign, body)
    return text


def validate_delta(entries):
    """
    Check and freeze a delta-vector.

    Raises NegativeEntry, AllZero, or InvalidDelta for fewer than two entries.
    """
    try:
        values = tuple(parse_rational(entry) for entry in entries)
    except (TypeError, ValueError, ZeroDivisionError) as error:
        raise InvalidDelta("delta entries must be exact rationals: {}".format(error))
    if len(values) < 2:
        raise InvalidDelta("a delta-vector needs at least two entries (degree >= 1)")
    negative = [index for index, value in enumerate(values) if value < 0]
    if negative:
        raise NegativeEntry("delta_{} is negative".format(negative[0]))
    if not any(values):
        raise AllZero("all delta entries are zero")
    return DeltaVector(values)


def binomial(shift, d):
    """
    C(n + shift, d) as a polynomial in n: the product of d linear factors over d!.
    """
    result = RationalPolynomial.constant(1)
    for i in range(d):
        result = result * RationalPolynomial.linear(shift - i, 1)
    return result * Fraction(1, math.factorial(d))


def from_delta(v):
    """
    Power-basis expansion of sum_j delta_j C(n + d - j, d).
    """
    d = v.degree
    result = RationalPolynomial(())
    for j, delta in enumerate(v.entries):
        if delta:
            result = result + binomial(d - j, d) * delta
    return result


def delta_from_polynomial(p):
    """
    Coordinates of p in the shifted binomial basis C(n + d - j, d).

    Reads the coefficients of (1 - t)^(d+1) * sum_n p(n) t^n up to t^d from
    the values p(0), ..., p(d). Entries may be negative when p is not an
    SSNN polynomial.
    """
    d = p.degree
    values = [p.evaluate(m) for m in range(d + 1)]
    return tuple(
        sum((-1) ** i * math.comb(d + 1, i) * values[j - i] for i in range(j + 1))
        for j in range(d + 1)
    )


def _falling_product(top, d):
    """ prod_{j=0}^{d-1} (n + top - j) """
    result = RationalPolynomial.constant(1)
    for j in range(d):
        result = result * RationalPolynomial.linear(top - j, 1)
    return result


def symmetric_basis(d, i):
    """
    N_i(n) = prod_j (n + d - i - j) + prod_j (n + i - j), with the middle
    index of an even degree using the single product.
    """
    if d < 1 or not 0 <= i <= d // 2:
        raise IndexOutOfRange("symmetric basis index {} outside 0..{} for degree {}".format(i, d // 2, d))
    if d % 2 == 0 and i == d // 2:
        return _falling_product(Fraction(d, 2), d)
    return _falling_product(d - i, d) + _falling_product(i, d)


def from_symmetric_basis(v):
    """
    sum_{i <= d/2} delta_i N_i(n) / d! for a symmetric delta-vector.
    """
    if not v.symmetric:
        raise NotSymmetric("the symmetric basis only spans symmetric delta-vectors")
    d = v.degree
    result = RationalPolynomial(())
    for i in range(d // 2 + 1):
        if v[i]:
            result = result + symmetric_basis(d, i) * v[i]
    return result * Fraction(1, math.factorial(d))


def evaluate_exact(p, x):
    return p.evaluate(x)


def evaluate_complex(p, z, precision=128):
    """
    Horner evaluation with the coefficients rounded to `precision` bits.
    """
    ctx = working_context(precision)
    z = ctx.mpc(z)
    total = ctx.mpc(0)
    for c in reversed(p.coefficients):
        total = total * z + mpf_from_fraction(ctx, c)
    return total


def derivative(p):
    return RationalPolynomial(tuple(power * c for power, c in enumerate(p.coefficients) if power))


def half_shift(p):
    """
    d! * p(n - 1/2): moves the symmetry line Re(z) = -1/2 to the imaginary axis.
    """
    return p.compose_linear(1, Fraction(-1, 2)) * math.factorial(p.degree)


def reflect(p):
    """ (-1)^d * p(-n - 1) """
    return p.compose_linear(-1, -1) * (-1) ** p.degree


def check_functional_equation(p):
    return reflect(p) == p


@dataclass(frozen=True)
class ParityReduction:
    """
    g(n) = factor(n) * G(n^2), where factor is 1 (even parity) or n (odd parity).
    """
    G: RationalPolynomial
    parity: str
    factor: RationalPolynomial


def parity_reduce(g):
    """
    Write an even or odd polynomial as factor * G(n^2).

    Raises ParityViolation when g mixes even and odd powers.
    """
    parity = "even" if g.degree % 2 == 0 else "odd"
    offset = 0 if parity == "even" else 1
    stray = [power for power, c in enumerate(g.coefficients) if c and power % 2 != offset]
    if stray:
        raise ParityViolation("degree {} polynomial has a nonzero n^{} term".format(g.degree, stray[0]))
    G = RationalPolynomial(g.coefficients[offset::2])
    factor = RationalPolynomial.constant(1) if parity == "even" else RationalPolynomial.monomial(1)
    return ParityReduction(G=G, parity=parity, factor=factor)


def gcd(p, q):
    """ Monic greatest common divisor over QQ. """
    return RationalPolynomial.from_sympy(p.to_sympy().gcd(q.to_sympy())).monic()


def squarefree_decomposition(p):
    """
    [(factor, multiplicity), ...] with squarefree, pairwise coprime factors
    whose product (with multiplicities) is p up to a constant.
    """
    _, factors = p.to_sympy().sqf_list()
    return [(RationalPolynomial.from_sympy(factor), multiplicity) for factor, multiplicity in factors]


def ehrhart_obstructions(v):
    """
    Reasons v cannot be the delta-vector of a lattice polytope of dimension d.

    Only the cheap necessary conditions: delta_0 = 1, integral entries and
    delta_1 >= delta_d.
    """
    reasons = []
    if v[0] != 1:
        reasons.append("delta_0 = {} (must be 1)".format(rational_to_str(v[0])))
    if any(entry.denominator != 1 for entry in v):
        reasons.append("non-integral entry")
    if v[1] < v[v.degree]:
        reasons.append("delta_1 < delta_{} ({} < {})".format(
            v.degree, rational_to_str(v[1]), rational_to_str(v[v.degree])))
    return reasons
