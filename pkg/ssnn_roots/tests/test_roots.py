#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Test module for the numerical root finder and the real-root classification.
"""
import random
from fractions import Fraction

import mock
from django.conf import settings
from django.test import TestCase, override_settings
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from ..analysis import norm_check, real_strip_check
from ..backends import SolveResult
from ..backends.aberth_mp_v1 import cauchy_radius, fujiwara_bound
from ..catalog import counterexample_deltas
from ..exceptions import DegenerateInput, InvalidConfiguration, NoConvergence
from ..poly_core import RationalPolynomial, from_delta, validate_delta
from ..roots import (
    RootSet,
    SolverConfig,
    classify_roots,
    cross_check,
    find_roots,
    max_root_distance,
    quadratic_roots_exact,
    residual,
    solve_and_classify,
)
from ..utils import working_context


class SolverBackendTest(TestCase):
    """ Tests correct load of the solver backend module """

    def setUp(self):
        """ (n + 1)(n + 2) """
        self.p = RationalPolynomial((2, 3, 1))

    @mock.patch('ssnn_roots.roots.import_module')
    def test_import_the_backend(self, m_import):
        """ Test we import the backend defined in the settings """
        m_import.return_value.EFFECTIVE_PRECISION = None
        m_import.return_value.solve.return_value = SolveResult(roots=[-1, -2], iterations=3, converged=True)

        rs = find_roots(self.p)

        m_import.assert_called_with(settings.SSNN_ROOTS_SOLVER_BACKEND)
        self.assertEqual(rs.iterations, 3)
        self.assertEqual(sorted(root.value.real for root in rs), [-2.0, -1.0])

    @mock.patch('ssnn_roots.roots.import_module')
    def test_import_the_configured_backend(self, m_import):
        """ Test an explicit SolverConfig.backend wins over the settings """
        m_import.return_value.EFFECTIVE_PRECISION = 53
        m_import.return_value.solve.return_value = SolveResult(roots=[-1, -2], iterations=1, converged=True)

        rs = find_roots(self.p, SolverConfig(backend="ssnn_roots.backends.companion_np_v1"))

        m_import.assert_called_with("ssnn_roots.backends.companion_np_v1")
        self.assertEqual(rs.precision, 53)

    @mock.patch('ssnn_roots.roots.import_module')
    def test_backend_failure_keeps_partial_roots(self, m_import):
        """ A backend that gives up still hands back what it had """
        m_import.return_value.EFFECTIVE_PRECISION = None
        m_import.return_value.solve.return_value = SolveResult(roots=[-1, -2], iterations=200, converged=False)

        with self.assertRaises(NoConvergence) as raised:
            find_roots(self.p)

        self.assertEqual(len(raised.exception.partial), 2)
        # retried at 256, 512 and 1024 bits before giving up
        self.assertEqual(m_import.return_value.solve.call_count, 4)
        self.assertEqual(m_import.return_value.solve.call_args[0][1].precision_bits, 1024)


class SolverConfigTest(TestCase):
    """ Tests the solver knobs """

    def test_rejects_low_precision(self):
        with self.assertRaises(InvalidConfiguration):
            SolverConfig(precision_bits=10)

    def test_rejects_bad_factor(self):
        with self.assertRaises(InvalidConfiguration):
            SolverConfig(convergence_factor=0)
        with self.assertRaises(InvalidConfiguration):
            SolverConfig(max_iterations=0)

    @override_settings(SSNN_ROOTS_PRECISION_BITS=256)
    def test_from_settings(self):
        """ Settings are picked up, explicit overrides win, None overrides are ignored """
        self.assertEqual(SolverConfig.from_settings().precision_bits, 256)
        self.assertEqual(SolverConfig.from_settings(precision_bits=192).precision_bits, 192)
        self.assertEqual(SolverConfig.from_settings(precision_bits=None).precision_bits, 256)

    def test_with_precision(self):
        self.assertEqual(SolverConfig().with_precision(512).precision_bits, 512)


class FindRootsTest(TestCase):
    """ Tests the roots of known delta-vectors """

    def setUp(self):
        self.counterexample, self.candidate = counterexample_deltas()

    def test_counterexample_roots(self):
        """ The degree 8 roots agree with the published values """
        rs = find_roots(from_delta(self.counterexample.delta))
        self.assertEqual(len(rs), 8)
        for published in self.counterexample.published_roots:
            self.assertLess(abs(rs.nearest(published).value - published), 1e-6)
        for root in rs:
            self.assertLess(root.residual, 1e-25)
            self.assertLess(root.error_radius, 1e-20)

    def test_candidate_root(self):
        rs = find_roots(from_delta(self.candidate.delta))
        published = self.candidate.published_roots[0]
        self.assertLess(abs(rs.nearest(published).value - published), 1e-6)

    def test_symmetries(self):
        """ Conjugation and z -> -1 - conj(z) permute the roots of a symmetric vector """
        rs = find_roots(from_delta(self.counterexample.delta))
        self.assertTrue(rs.is_conjugate_closed())
        self.assertTrue(rs.is_reflection_closed())

    def test_multiplicity_two(self):
        """ (1, 6, 1) is 4n^2 + 4n + 1 """
        rs = solve_and_classify(from_delta(validate_delta((1, 6, 1))))
        self.assertEqual(len(rs), 2)
        for root in rs:
            self.assertEqual(root.multiplicity, 2)
            self.assertTrue(root.is_real_certified)
            self.assertAlmostEqual(float(root.re), -0.5, places=20)

    def test_multiplicity_three(self):
        rs = solve_and_classify(from_delta(validate_delta((1, 23, 23, 1))))
        self.assertEqual([root.multiplicity for root in rs], [3, 3, 3])
        self.assertEqual(len(rs.real_roots()), 3)

    def test_integer_roots_are_certified(self):
        """ C(n+2, 4) has the roots -2, -1, 0, 1 """
        rs = solve_and_classify(from_delta(validate_delta((0, 0, 1, 0, 0))))
        self.assertEqual(len(rs.real_roots()), 4)
        self.assertEqual(rs.nonreal_roots(), [])
        for expected, root in zip((-2, -1, 0, 1), rs):
            self.assertAlmostEqual(float(root.re), expected, places=20)
            self.assertEqual(root.im, 0)

    def test_classify_leaves_complex_roots(self):
        rs = classify_roots(find_roots(from_delta(self.counterexample.delta)))
        self.assertEqual(rs.real_roots(), [])
        self.assertEqual(len(rs.nonreal_roots()), 8)

    def test_companion_backend_agrees(self):
        """ Double precision eigenvalues match the multiprecision roots """
        p = from_delta(self.counterexample.delta)
        aberth = find_roots(p)
        companion = find_roots(p, SolverConfig(backend="ssnn_roots.backends.companion_np_v1"))
        self.assertEqual(companion.precision, 53)
        self.assertTrue(cross_check(aberth, companion, tol=1e-8))
        self.assertGreater(max_root_distance(aberth, companion), 0)

    def test_no_convergence(self):
        with self.assertRaises(NoConvergence) as raised:
            find_roots(from_delta(self.counterexample.delta), SolverConfig(max_iterations=1))
        self.assertEqual(len(raised.exception.partial), 8)

    def test_constant_is_degenerate(self):
        with self.assertRaises(DegenerateInput):
            find_roots(RationalPolynomial((3,)))

    def test_residual_is_scale_free(self):
        p = RationalPolynomial((2, 3, 1))
        self.assertEqual(residual(p, -1), 0)
        self.assertLess(residual(p * 1000, complex(-1, 1e-3)), 1e-3)


class QuadraticRootsExactTest(TestCase):
    """ Tests the closed form of a quadratic """

    def test_real_pair(self):
        roots = quadratic_roots_exact(9, 9, 2)
        self.assertEqual(roots.as_rationals(), (Fraction(-2, 3), Fraction(-1, 3)))

    def test_complex_pair(self):
        roots = quadratic_roots_exact(3, 3, 2)
        self.assertEqual(roots.radicand, Fraction(-5, 3))

    def test_not_a_quadratic(self):
        with self.assertRaises(DegenerateInput):
            quadratic_roots_exact(0, 1, 1)


def _symmetric_delta(rng, d, bound=20):
    half = [Fraction(rng.randint(0, bound), rng.randint(1, bound)) for _ in range(d // 2 + 1)]
    half[0] = Fraction(1)
    return validate_delta([half[min(i, d - i)] for i in range(d + 1)])


class StartRadiusTest(TestCase):
    """ The circle the Aberth iteration starts on """

    def test_cauchy_radius(self):
        """ x^2 - x - 6 has its positive root at 3 """
        ctx = working_context(128)
        coefficients = [ctx.mpf(-6), ctx.mpf(1), ctx.mpf(1)]
        self.assertAlmostEqual(float(cauchy_radius(ctx, coefficients)), 3.03, places=9)
        self.assertGreaterEqual(fujiwara_bound(ctx, [abs(c) for c in coefficients]), 3)

    def test_radius_is_tight_for_delta_polynomials(self):
        """ The 1/d! leading coefficient must not blow up the start circle """
        ctx = working_context(128)
        rng = random.Random(18)
        for _ in range(10):
            v = _symmetric_delta(rng, rng.randint(18, 20))
            p = from_delta(v)
            radius = cauchy_radius(ctx, [ctx.mpf(c) for c in p.integer_coefficients()])
            farthest = max(abs(root.value) for root in find_roots(p))
            self.assertGreaterEqual(float(radius), farthest)
            # at most 1/(2^(1/n) - 1) times the largest root modulus
            self.assertLess(float(radius), 50 * farthest)


class HighDegreeTest(TestCase):
    """ Default solver settings on degrees 18 to 40 """

    def _solve(self, v):
        rs = classify_roots(find_roots(from_delta(v)))
        self.assertIsInstance(rs, RootSet)
        self.assertEqual(len(rs), v.degree)
        self.assertTrue(rs.is_conjugate_closed(), v)
        self.assertTrue(norm_check(rs).passed, v)
        return rs

    def test_degrees_eighteen_to_twenty(self):
        rng = random.Random(2024)
        for _ in range(60):
            self._solve(_symmetric_delta(rng, rng.randint(18, 20)))

    def test_alternating_entries(self):
        self._solve(validate_delta([1] + [Fraction(17, 9), Fraction(10, 9)] * 9 + [Fraction(17, 9), 1]))

    def test_degree_forty(self):
        rng = random.Random(40)
        for d in (39, 40):
            self._solve(_symmetric_delta(rng, d))


@st.composite
def symmetric_deltas(draw, max_degree=20):
    d = draw(st.integers(min_value=1, max_value=max_degree))
    entries = st.fractions(min_value=0, max_value=20, max_denominator=9)
    half = draw(st.lists(entries, min_size=d // 2 + 1, max_size=d // 2 + 1))
    half[0] = Fraction(1)
    return validate_delta([half[min(i, d - i)] for i in range(d + 1)])


class RootSetPropertyTest(HypothesisTestCase):
    """ Every solved root set keeps its symmetries and the norm disk """

    @hypothesis_settings(max_examples=300, deadline=None)
    @given(symmetric_deltas())
    def test_random_symmetric_delta(self, v):
        rs = classify_roots(find_roots(from_delta(v)))
        self.assertEqual(len(rs), v.degree)
        self.assertTrue(rs.is_reflection_closed(), v)
        self.assertTrue(norm_check(rs).passed, v)
        self.assertTrue(real_strip_check(rs).passed, v)
