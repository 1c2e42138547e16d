"""
Numerical roots of delta polynomials with per-root error radii.

The polynomial is split into squarefree factors first, every factor is
handed to the configured backend, and the approximations are then paired
into conjugates and given rigorous inclusion radii.
"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import import_module
from typing import Tuple

from ssnn_roots.certify import cauchy_bound, count_in_bracket, count_real_roots, sturm_sequence
from ssnn_roots.exceptions import AmbiguousClassification, DegenerateInput, InvalidConfiguration, NoConvergence
from ssnn_roots.poly_core import RationalPolynomial, squarefree_decomposition
from ssnn_roots.radicals import ExactQuadraticRoots
from ssnn_roots.utils import fraction_from_mpf, mpf_from_fraction, plugin_setting, working_context

LOG = logging.getLogger(__name__)

DEFAULT_BACKEND = "ssnn_roots.backends.aberth_mp_v1"


@dataclass(frozen=True)
class SolverConfig:
    """
    Knobs of one solve. Build it with from_settings() to pick up the
    SSNN_ROOTS_* settings.
    """
    precision_bits: int = 128
    max_iterations: int = 200
    convergence_factor: Fraction = Fraction(1, 2)
    backend: str = DEFAULT_BACKEND

    def __post_init__(self):
        object.__setattr__(self, 'convergence_factor', Fraction(self.convergence_factor))
        if int(self.precision_bits) < 53:
            raise InvalidConfiguration("precision_bits must be at least 53, got {}".format(self.precision_bits))
        if int(self.max_iterations) < 1:
            raise InvalidConfiguration("max_iterations must be positive, got {}".format(self.max_iterations))
        if not 0 < self.convergence_factor <= 1:
            raise InvalidConfiguration("convergence_factor must lie in (0, 1], got {}".format(
                self.convergence_factor))

    @classmethod
    def from_settings(cls, **overrides):
        values = {
            'precision_bits': plugin_setting('PRECISION_BITS', cls.precision_bits),
            'max_iterations': plugin_setting('MAX_ITERATIONS', cls.max_iterations),
            'convergence_factor': plugin_setting('CONVERGENCE_FACTOR', cls.convergence_factor),
            'backend': plugin_setting('SOLVER_BACKEND', cls.backend),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def with_precision(self, bits):
        return replace(self, precision_bits=int(bits))


@dataclass(frozen=True)
class ComplexRoot:
    """
    One approximated root. The true root lies within error_radius of (re, im).
    """
    re: object
    im: object
    residual: float
    error_radius: float
    is_real_certified: bool = False
    multiplicity: int = 1

    @property
    def value(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return "{:.12g}{:+.12g}i".format(float(self.re), float(self.im))


@dataclass(frozen=True)
class RootSet:
    """
    Every root of `polynomial` counted with multiplicity, sorted by (re, im).
    """
    roots: Tuple[ComplexRoot, ...]
    degree: int
    precision: int
    polynomial: RationalPolynomial
    backend: str = DEFAULT_BACKEND
    iterations: int = 0

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def real_roots(self):
        return [root for root in self.roots if root.is_real_certified]

    def nonreal_roots(self):
        return [root for root in self.roots if not root.is_real_certified]

    def nearest(self, z):
        z = complex(z)
        return min(self.roots, key=lambda root: abs(root.value - z))

    def _closed_under(self, image):
        for root in self.roots:
            partner = self.nearest(image(root.value))
            if abs(partner.value - image(root.value)) > root.error_radius + partner.error_radius + 1e-12:
                return False
        return True

    def is_conjugate_closed(self):
        return self._closed_under(lambda z: z.conjugate())

    def is_reflection_closed(self):
        """ z -> -1 - conj(z), the symmetry of a symmetric delta-vector. """
        return self._closed_under(lambda z: -1 - z.conjugate())


def get_solver_backend(cfg):
    return import_module(cfg.backend)


def _horner(ctx, coefficients, z):
    total = ctx.mpc(0)
    for c in reversed(coefficients):
        total = total * z + c
    return total


def residual(p, z, precision=128):
    """
    |p(z)| / (1 + sum |a_k| |z|^k): a scale-free size of p at z.
    """
    ctx = working_context(precision)
    z = ctx.mpc(z)
    coefficients = [mpf_from_fraction(ctx, c) for c in p.coefficients]
    scale = 1 + sum(abs(c) * abs(z) ** k for k, c in enumerate(coefficients))
    return float(abs(_horner(ctx, coefficients, z)) / scale)


def _pair_conjugates(ctx, approximations, real_count):
    """
    Snap the `real_count` approximations nearest the real axis to it and
    replace the others by exact conjugate pairs.
    """
    ordered = sorted(approximations, key=lambda z: abs(z.imag))
    reals = [ctx.mpc(z.real, 0) for z in ordered[:real_count]]
    upper = [z if z.imag > 0 else ctx.conj(z) for z in ordered[real_count:]]
    if len(upper) % 2:
        raise AmbiguousClassification("odd number of non-real approximations for a real polynomial")
    paired = []
    # each conjugate pair shows up twice in the upper half plane; average the two copies
    while upper:
        first = upper.pop()
        partner = min(range(len(upper)), key=lambda index: abs(upper[index] - first))
        mean = (first + upper.pop(partner)) / 2
        paired.extend([mean, ctx.conj(mean)])
    return reals + paired


def _inclusion_radii(ctx, coefficients, approximations):
    """
    Weierstrass inclusion radii n*|W_k|, plus the rounding error of the
    evaluation carried through the same correction.
    """
    degree = len(approximations)
    lead = coefficients[-1]
    unit = ctx.ldexp(1, -ctx.prec)
    radii = []
    for k, z in enumerate(approximations):
        denominator = lead
        for j, other in enumerate(approximations):
            if j != k:
                denominator *= z - other
        if denominator == 0:
            radii.append(ctx.inf)
            continue
        value = _horner(ctx, coefficients, z)
        rounding = 2 * (degree + 1) * unit * sum(abs(c) * abs(z) ** i for i, c in enumerate(coefficients))
        radii.append(degree * (abs(value) + rounding) / abs(denominator))
    return radii


def _merge_clusters(roots, separation):
    """
    Roots closer than `separation` share one radius covering the whole cluster.
    """
    roots = list(roots)
    for root in list(roots):
        cluster = [j for j, other in enumerate(roots) if abs(other.value - root.value) < separation]
        if len(cluster) < 2:
            continue
        spread = max(abs(roots[j].value - roots[l].value) for j in cluster for l in cluster)
        radius = max(max(roots[j].error_radius for j in cluster), spread)
        for j in cluster:
            if roots[j].error_radius < radius:
                roots[j] = replace(roots[j], error_radius=radius)
    return roots


def _solve_at(p, cfg, backend):
    """ One solve of every squarefree factor at cfg.precision_bits; (RootSet, converged). """
    precision = getattr(backend, 'EFFECTIVE_PRECISION', None) or cfg.precision_bits
    precision = min(precision, cfg.precision_bits)
    ctx = working_context(precision)

    roots = []
    iterations = 0
    converged = True
    for factor, multiplicity in squarefree_decomposition(p):
        if factor.degree < 1:
            continue
        integers = factor.integer_coefficients()
        result = backend.solve(integers, cfg)
        iterations = max(iterations, result.iterations)
        converged = converged and result.converged

        chain = sturm_sequence(factor)
        bound = cauchy_bound(factor) + 1
        real_count = count_real_roots(chain, -bound, bound)
        approximations = _pair_conjugates(ctx, [ctx.mpc(z) for z in result.roots], real_count)
        coefficients = [ctx.mpf(c) for c in integers]
        radii = _inclusion_radii(ctx, coefficients, approximations)
        for z, radius in zip(approximations, radii):
            root = ComplexRoot(
                re=z.real,
                im=z.imag,
                residual=residual(p, z, precision),
                error_radius=float(radius),
                multiplicity=multiplicity,
            )
            roots.extend([root] * multiplicity)

    separation = float(ctx.ldexp(1, -precision // 4))
    roots = _merge_clusters(roots, separation)
    roots.sort(key=lambda root: (root.re, root.im))
    root_set = RootSet(
        roots=tuple(roots),
        degree=p.degree,
        precision=precision,
        polynomial=p,
        backend=cfg.backend,
        iterations=iterations,
    )
    return root_set, converged


def find_roots(p, cfg=None):
    """
    All complex roots of p with multiplicity.

    A solve that does not converge is repeated at doubled precision up to
    SSNN_ROOTS_MAX_PRECISION_BITS. Raises DegenerateInput for a constant p and
    NoConvergence (with the partial RootSet attached) when that still fails.
    """
    if p.degree < 1:
        raise DegenerateInput("polynomial {} has no roots".format(p))
    cfg = cfg or SolverConfig.from_settings()
    backend = get_solver_backend(cfg)
    while True:
        root_set, converged = _solve_at(p, cfg, backend)
        if converged:
            break
        bits = cfg.precision_bits * 2
        if getattr(backend, 'EFFECTIVE_PRECISION', None) or bits > plugin_setting('MAX_PRECISION_BITS', 1024):
            raise NoConvergence("{} did not converge for {} in {} iterations".format(
                cfg.backend, p, cfg.max_iterations), partial=root_set)
        LOG.info("No convergence for degree %s at %s bits, retrying at %s bits", p.degree, cfg.precision_bits, bits)
        cfg = cfg.with_precision(bits)
    LOG.debug("Solved degree %s with %s in %s iterations at %s bits",
              p.degree, cfg.backend, root_set.iterations, root_set.precision)
    return root_set


def quadratic_roots_exact(a2, a1, a0):
    """
    Roots of a2 x^2 + a1 x + a0 as center +- 1/2 sqrt(radicand).
    """
    a2, a1, a0 = Fraction(a2), Fraction(a1), Fraction(a0)
    if a2 == 0:
        raise DegenerateInput("leading coefficient of a quadratic is zero")
    return ExactQuadraticRoots(
        center=-a1 / (2 * a2),
        coefficient=Fraction(1, 2),
        radicand=(a1 * a1 - 4 * a2 * a0) / (a2 * a2),
    )


def _candidate_groups(roots):
    """
    Indexes of real candidates grouped by overlapping intervals [re - r, re + r].
    """
    candidates = sorted(
        (index for index, root in enumerate(roots) if abs(root.im) <= root.error_radius),
        key=lambda index: roots[index].re,
    )
    groups = []
    for index in candidates:
        root = roots[index]
        lo = fraction_from_mpf(root.re) - Fraction(root.error_radius)
        if groups and lo <= groups[-1][2]:
            group, start, end = groups[-1]
            groups[-1] = (group + [index], start, max(end, fraction_from_mpf(root.re) + Fraction(root.error_radius)))
        else:
            groups.append(([index], lo, fraction_from_mpf(root.re) + Fraction(root.error_radius)))
    return groups


def classify_roots(rs, p=None):
    """
    Certify which roots are real with exact Sturm counts.

    A certified root gets im = 0 and is_real_certified. Raises
    AmbiguousClassification when an interval cannot be decided or the
    certified count disagrees with the exact number of distinct real roots.
    """
    p = p or rs.polynomial
    chain = sturm_sequence(p)
    bound = cauchy_bound(chain.base) + 1
    total_real = count_real_roots(chain, -bound, bound)
    roots = list(rs.roots)

    certified = 0
    for group, lo, hi in _candidate_groups(roots):
        if lo == hi:
            hi += Fraction(1, 2 ** rs.precision)
        count, _, _ = count_in_bracket(chain, lo, hi)
        distinct = len({(roots[index].re, roots[index].im) for index in group})
        if count == 0:
            continue
        if count != distinct:
            raise AmbiguousClassification("{} real roots in [{}, {}] for {} candidates".format(
                count, float(lo), float(hi), distinct))
        for index in group:
            roots[index] = replace(roots[index], im=roots[index].im * 0, is_real_certified=True)
        certified += count

    if certified != total_real:
        raise AmbiguousClassification("certified {} real roots, Sturm counts {}".format(certified, total_real))
    return replace(rs, roots=tuple(sorted(roots, key=lambda root: (root.re, root.im))))


def solve_and_classify(p, cfg=None):
    return classify_roots(find_roots(p, cfg))


def max_root_distance(first, second):
    """
    Largest distance from a root of `first` to its nearest unused root of `second`.
    """
    if len(first) != len(second):
        raise ValueError("root sets of different sizes")
    unused = [root.value for root in second]
    worst = 0.0
    for root in first:
        nearest = min(range(len(unused)), key=lambda index: abs(unused[index] - root.value))
        worst = max(worst, abs(unused.pop(nearest) - root.value))
    return worst


def cross_check(first, second, tol=1e-9):
    """
    True when the two root sets agree root by root to within `tol`.
    """
    return max_root_distance(first, second) <= tol
