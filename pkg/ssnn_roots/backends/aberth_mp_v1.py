#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Backend running the Ehrlich-Aberth simultaneous iteration in mpmath.

Updates are applied in place (Gauss-Seidel order) and a final Newton step
polishes every approximation.
"""
import logging

from ssnn_roots.backends import SolveResult
from ssnn_roots.utils import working_context

LOG = logging.getLogger(__name__)

EFFECTIVE_PRECISION = None

# Roots of delta polynomials are symmetric about Re(z) = -1/2.
START_CENTER = -0.5

MAX_RADIUS_STEPS = 200


def _horner(coefficients, z):
    """ p(z) and p'(z) together. """
    value = coefficients[-1]
    slope = 0
    for c in reversed(coefficients[:-1]):
        slope = slope * z + value
        value = value * z + c
    return value, slope


def _shift(ctx, coefficients, center):
    """ Coefficients of p(w + center). """
    shifted = [ctx.mpf(c) for c in coefficients]
    degree = len(shifted) - 1
    for i in range(degree):
        for j in range(degree - 1, i - 1, -1):
            shifted[j] += center * shifted[j + 1]
    return shifted


def fujiwara_bound(ctx, magnitudes):
    """
    2 max |a_k / a_n|^(1/(n-k)), within a factor 2 of the Cauchy radius.
    """
    degree = len(magnitudes) - 1
    lead = magnitudes[-1]
    return 2 * max(ctx.root(m / lead, degree - k) for k, m in enumerate(magnitudes[:-1]) if m)


def cauchy_radius(ctx, coefficients):
    """
    Positive root of |a_n| x^n - sum_{k<n} |a_k| x^k, a radius containing every root.
    """
    magnitudes = [abs(c) for c in coefficients]
    degree = len(magnitudes) - 1
    lead = magnitudes[-1]
    if not any(magnitudes[:-1]):
        return ctx.mpf(1)
    x = fujiwara_bound(ctx, magnitudes)
    # The Cauchy polynomial is convex and increasing above its root, so Newton
    # from above decreases monotonically to it.
    for _ in range(MAX_RADIUS_STEPS):
        value = lead * x ** degree - sum(m * x ** k for k, m in enumerate(magnitudes[:-1]))
        slope = degree * lead * x ** (degree - 1) - sum(
            k * m * x ** (k - 1) for k, m in enumerate(magnitudes[:-1]) if k
        )
        step = value / slope
        x -= step
        if abs(step) < x * ctx.ldexp(1, -30):
            break
    return x * ctx.mpf('1.01')


def initial_approximations(ctx, coefficients):
    """
    Points on the Cauchy circle around -1/2, rotated by an irrational angle
    so that no start lies on the real axis.
    """
    degree = len(coefficients) - 1
    center = ctx.mpf(START_CENTER)
    radius = cauchy_radius(ctx, _shift(ctx, coefficients, center))
    offset = ctx.sqrt(2)
    return [center + radius * ctx.expj(2 * ctx.pi * k / degree + offset) for k in range(degree)]


def solve(coefficients, cfg):
    """
    Approximate every root of the squarefree polynomial with integer `coefficients`.
    """
    ctx = working_context(cfg.precision_bits)
    scale = max(abs(c) for c in coefficients)
    a = [ctx.mpf(c) / scale for c in coefficients]
    degree = len(a) - 1

    if degree == 1:
        return SolveResult([ctx.mpc(-a[0] / a[1])], 0, True)

    z = initial_approximations(ctx, a)
    threshold = ctx.ldexp(1, -int(cfg.precision_bits * cfg.convergence_factor))
    converged = False
    iteration = 0
    for iteration in range(1, cfg.max_iterations + 1):
        worst = ctx.mpf(0)
        for k in range(degree):
            value, slope = _horner(a, z[k])
            if value == 0:
                continue
            repulsion = ctx.mpc(0)
            for j in range(degree):
                if j != k and z[k] != z[j]:
                    repulsion += 1 / (z[k] - z[j])
            denominator = slope - value * repulsion
            if denominator == 0:
                continue
            step = value / denominator
            z[k] -= step
            worst = max(worst, abs(step) / max(1, abs(z[k])))
        if worst < threshold:
            converged = True
            break

    for k in range(degree):
        value, slope = _horner(a, z[k])
        if slope != 0:
            z[k] -= value / slope

    LOG.debug("Aberth: degree %s, %s iterations, converged=%s", degree, iteration, converged)
    return SolveResult(z, iteration, converged)
