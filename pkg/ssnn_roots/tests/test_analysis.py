#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Test module for the strip, disk and dimension 4/5 analyses.
"""
import math
import random
from fractions import Fraction

import mpmath
from django.test import TestCase
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.django import TestCase as HypothesisTestCase

from ..analysis import (
    BOUND_SQUARED,
    FIRST_COMPLEX_REGIME,
    INADMISSIBLE,
    REAL_REGIME,
    SECOND_COMPLEX_REGIME,
    admissible_b_interval,
    admissible_grid,
    complex_regime_thresholds,
    dim45_containment,
    norm_check,
    norm_radius,
    quartic_analysis,
    quartic_delta,
    real_strip_check,
    sample_admissible,
    strip_check,
)
from ..catalog import counterexample_deltas, gorenstein_deltas
from ..exceptions import Inconclusive, UnsupportedDimension
from ..poly_core import RationalPolynomial, from_delta, validate_delta
from ..radicals import QuadraticSurd
from ..roots import ComplexRoot, RootSet, find_roots
from ..verdicts import DIM45, FLOOR_STRIP, FULL_STRIP, HALF_STRIP, BoundCheck, strip_bounds


class StripBoundsTest(TestCase):
    """ Bounds of the vertical strips """

    def test_bounds(self):
        self.assertEqual(strip_bounds(8, FULL_STRIP), (-8, 7))
        self.assertEqual(strip_bounds(8, HALF_STRIP), (-4, 3))
        self.assertEqual(strip_bounds(5, HALF_STRIP), (Fraction(-5, 2), Fraction(3, 2)))
        self.assertEqual(strip_bounds(5, FLOOR_STRIP), (-2, 1))

    def test_degree_one_floor_strip(self):
        """ The floor strip is empty for d = 1 and falls back to the half strip """
        self.assertEqual(strip_bounds(1, FLOOR_STRIP), (Fraction(-1, 2), Fraction(-1, 2)))

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            strip_bounds(4, "diagonal")

    def test_passed_matches_violators(self):
        with self.assertRaises(ValueError):
            BoundCheck(kind=HALF_STRIP, degree=2, passed=False)


class StripCheckTest(TestCase):
    """ Strip verdicts on solved roots """

    def test_counterexample_leaves_half_strip(self):
        rs = find_roots(from_delta(counterexample_deltas()[0].delta))
        check = strip_check(rs)
        self.assertFalse(check.passed)
        self.assertEqual(len(check.violators), 4)
        self.assertAlmostEqual(check.worst_margin, -0.00099518, places=7)
        self.assertTrue(strip_check(rs, kind=FULL_STRIP).passed)

    def test_candidate_leaves_half_strip(self):
        rs = find_roots(from_delta(counterexample_deltas()[1].delta))
        check = strip_check(rs)
        self.assertFalse(check.passed)
        self.assertTrue(any(float(root.re) > 4 for root in check.violators))

    def test_low_degrees_stay_in_half_strip(self):
        for entry in gorenstein_deltas(2) + gorenstein_deltas(3):
            self.assertTrue(strip_check(find_roots(from_delta(entry.delta))).passed, entry.label)

    def test_roots_on_the_bound(self):
        """ C(n+2, 4) has exact roots at -2 and 1, the ends of the floor strip """
        rs = find_roots(from_delta(validate_delta((0, 0, 1, 0, 0))))
        self.assertTrue(strip_check(rs, kind=FLOOR_STRIP).passed)

    def test_straddling_root_is_inconclusive(self):
        """ A disk across a bound that cannot be refined any further """
        root = ComplexRoot(re=mpmath.mpf('0.1'), im=mpmath.mpf(0), residual=0.0, error_radius=0.5)
        rs = RootSet(roots=(root, root), degree=2, precision=1024, polynomial=RationalPolynomial((1, 0, 1)))
        with self.assertRaises(Inconclusive) as raised:
            strip_check(rs)
        self.assertEqual(len(raised.exception.roots), 2)

    def test_real_strip_check(self):
        check = real_strip_check(find_roots(from_delta(validate_delta((1, 6, 1)))))
        self.assertTrue(check.passed)
        self.assertEqual(len(check.margins), 2)


class NormCheckTest(TestCase):
    """ |alpha + 1/2| <= d(2d - 1)/2 """

    def test_radius(self):
        self.assertEqual(norm_radius(4), 14)
        self.assertEqual(norm_radius(5), Fraction(45, 2))

    def test_dimension_two(self):
        check = norm_check(find_roots(from_delta(validate_delta((1, 0, 1)))))
        self.assertTrue(check.passed)
        self.assertEqual(check.radius, 3)
        self.assertAlmostEqual(check.worst_margin, 3 - 3 ** 0.5 / 2, places=12)
        self.assertEqual(check.notes, ("extrapolated",))

    def test_dimension_four_is_not_extrapolated(self):
        check = norm_check(find_roots(from_delta(quartic_delta(0, 36, 4))))
        self.assertTrue(check.passed)
        self.assertEqual(check.notes, ())


class QuarticAnalysisTest(TestCase):
    """ Exact analysis of (1, b, c, b, 1) and (1, b, c, c, b, 1) """

    def test_thresholds(self):
        low, high = complex_regime_thresholds(4)
        self.assertEqual(low, QuadraticSurd(34, -12, 5))
        self.assertAlmostEqual(float(low), 7.1672, places=4)
        self.assertAlmostEqual(float(high), 60.8328, places=4)
        low, _ = complex_regime_thresholds(5)
        self.assertAlmostEqual(float(low), 4.1472, places=4)
        with self.assertRaises(UnsupportedDimension):
            complex_regime_thresholds(6)

    def test_b_interval_empty(self):
        self.assertIsNone(admissible_b_interval(4, 5))

    def test_b_interval_open(self):
        interval = admissible_b_interval(4, 100)
        self.assertFalse(interval.lower_closed)
        self.assertEqual(interval.lower, QuadraticSurd(21, Fraction(-3, 2), 95))
        self.assertEqual(interval.upper, QuadraticSurd(21, Fraction(3, 2), 95))
        self.assertFalse(interval.contains(6))
        self.assertTrue(interval.contains(7))

    def test_b_interval_closed_at_zero(self):
        interval = admissible_b_interval(5, 89)
        self.assertTrue(interval.lower_closed)
        self.assertTrue(interval.contains(0))
        self.assertEqual(interval.upper, QuadraticSurd(Fraction(200, 27), Fraction(20, 27), 262))

    def test_first_complex_regime(self):
        analysis = quartic_analysis(0, 36, 4)
        self.assertEqual(analysis.region, FIRST_COMPLEX_REGIME)
        self.assertEqual(analysis.G_coeffs, (Fraction(267, 8), Fraction(-47), Fraction(38)))
        self.assertLess(analysis.discriminant, 0)
        self.assertAlmostEqual(float(analysis.r), 0.9372, places=4)
        self.assertTrue(analysis.passed)
        self.assertTrue(analysis.interval_agrees)
        self.assertGreater(analysis.margin, 0)

    def test_second_complex_regime(self):
        analysis = quartic_analysis(10, 100, 4)
        self.assertEqual(analysis.region, SECOND_COMPLEX_REGIME)
        self.assertTrue(analysis.passed)

    def test_quintic_bound_is_attained(self):
        """ b = 0, c = 41 sits exactly on |Re(alpha) + 1/2| = sqrt(8/7) """
        analysis = quartic_analysis(0, 41, 5)
        self.assertEqual(analysis.G_coeffs, (Fraction(1029, 4), Fraction(-90), Fraction(84)))
        self.assertTrue(analysis.passed)
        self.assertAlmostEqual(float(analysis.r), 1.75, places=20)
        self.assertAlmostEqual(float(analysis.real_part_magnitude), (8 / 7) ** 0.5, places=15)
        self.assertAlmostEqual(float(analysis.margin), 0, places=20)

    def test_real_regime(self):
        analysis = quartic_analysis(0, 0, 4)
        self.assertEqual(analysis.region, REAL_REGIME)
        self.assertTrue(analysis.passed)
        self.assertIsNone(analysis.r)
        self.assertIsNone(analysis.b_interval)

    def test_inadmissible(self):
        analysis = quartic_analysis(-1, 10, 4)
        self.assertEqual(analysis.region, INADMISSIBLE)
        self.assertFalse(analysis.passed)
        self.assertEqual(quartic_analysis(1, -1, 5).region, INADMISSIBLE)

    def test_negative_discriminant_is_a_complex_regime(self):
        """ For b, c >= 0 only the discriminant decides the region """
        for b, c, d in ((0, 36, 4), (10, 100, 4), (0, 41, 5)):
            analysis = quartic_analysis(b, c, d)
            self.assertLess(analysis.discriminant, 0)
            self.assertNotEqual(analysis.region, INADMISSIBLE)
            self.assertTrue(analysis.passed)

    def test_other_degrees(self):
        with self.assertRaises(UnsupportedDimension):
            quartic_analysis(1, 1, 6)

    def test_agrees_with_roots(self):
        """ The closed-form real part matches the solved roots """
        analysis = quartic_analysis(0, 36, 4)
        rs = find_roots(from_delta(quartic_delta(0, 36, 4)))
        worst = max(abs(float(root.re) + 0.5) for root in rs)
        self.assertAlmostEqual(worst, float(analysis.real_part_magnitude), places=12)


class Dim45ContainmentTest(TestCase):
    """ Containment of the roots for d = 4, 5 """

    def test_quartic(self):
        check = dim45_containment(find_roots(from_delta(quartic_delta(0, 36, 4))))
        self.assertEqual(check.kind, DIM45)
        self.assertTrue(check.passed)

    def test_quintic_has_real_root(self):
        check = dim45_containment(find_roots(from_delta(quartic_delta(2, 50, 5))))
        self.assertTrue(check.passed)

    def test_other_degrees(self):
        with self.assertRaises(UnsupportedDimension):
            dim45_containment(find_roots(from_delta(validate_delta((1, 1, 1)))))


class QuarticPropertyTest(HypothesisTestCase):
    """ Randomized agreement of the exact analysis """

    @settings(max_examples=1000, deadline=None)
    @given(
        st.sampled_from((4, 5)),
        st.fractions(min_value=0, max_value=80, max_denominator=50),
        st.fractions(min_value=0, max_value=400, max_denominator=50),
    )
    def test_discriminant_matches_b_interval(self, d, b, c):
        analysis = quartic_analysis(b, c, d)
        self.assertTrue(analysis.interval_agrees)
        self.assertTrue(analysis.passed)


class AdmissibleGridTest(TestCase):
    """ Grid enumeration of the complex regimes """

    def test_matches_pointwise_analysis(self):
        for d in (4, 5):
            points = list(admissible_grid(d, (0, 30), ("0", "120"), 5))
            expected = [
                (Fraction(b), Fraction(c))
                for c in range(0, 121, 5) for b in range(0, 31, 5)
                if quartic_analysis(b, c, d).region in (FIRST_COMPLEX_REGIME, SECOND_COMPLEX_REGIME)
            ]
            self.assertTrue(points)
            self.assertEqual(points, expected)

    def test_negative_grid_values_are_skipped(self):
        points = list(admissible_grid(4, ("-10", "30"), ("-5", "110"), "5/2"))
        self.assertTrue(points)
        self.assertTrue(all(b >= 0 and c >= 0 for b, c in points))
        self.assertIn((Fraction(20), Fraction(100)), points)

    def test_step_must_be_positive(self):
        with self.assertRaises(ValueError):
            list(admissible_grid(4, (0, 1), (0, 1), 0))


class QuarticSweepTest(TestCase):
    """ Seeded admissible (b, c) checked exactly and against the solved roots """

    POINTS_PER_DEGREE = 10000

    def test_sampled_points_hold_numerically(self):
        for d in (4, 5):
            bound = math.sqrt(float(BOUND_SQUARED[d]))
            rng = random.Random(1000 + d)
            for _ in range(self.POINTS_PER_DEGREE):
                b, c = sample_admissible(d, rng)
                analysis = quartic_analysis(b, c, d)
                self.assertIn(analysis.region, (FIRST_COMPLEX_REGIME, SECOND_COMPLEX_REGIME))
                self.assertTrue(analysis.passed, (b, c, d))
                self.assertLessEqual(float(analysis.real_part_magnitude), bound + 1e-9, (b, c, d))

                rs = find_roots(from_delta(quartic_delta(b, c, d)))
                worst = max(abs(float(root.re) + 0.5) - root.error_radius for root in rs.roots)
                self.assertLessEqual(worst, bound + 1e-9, (b, c, d))
                self.assertTrue(dim45_containment(rs).passed, (b, c, d))
                self.assertTrue(norm_check(rs).passed, (b, c, d))
