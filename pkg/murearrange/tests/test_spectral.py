#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the spectral module.  For :math:`c = 1` in the plane the best
constant is :math:`2cn = 4`, attained by :math:`e^{-|x|^2}`.

"""
from __future__ import division, print_function, absolute_import
import math
import unittest

import numpy as np
import six
from numpy.testing import assert_allclose

from murearrange.density import RadialDensity
from murearrange.gridsets import GridSpec
from murearrange.rearrangefn import GridFunction, random_bump
from murearrange.spectral import (RayleighReport, SobolevSurvey,
                                  admissible_range, cutoff, oscillator_eigenvalue,
                                  oscillator_form, oscillator_parts,
                                  rayleigh_quotient, rayleigh_suite,
                                  sobolev_corpus, sobolev_ratio_survey,
                                  to_oscillator, truncated_gaussian,
                                  weighted_norm)
from murearrange.util import DomainError, ParameterError, PreconditionError


class Test_helpers(unittest.TestCase):

    def test_admissible_range(self):
        self.assertEqual(admissible_range(3, 2.0), (2.0, 6.0))
        self.assertEqual(admissible_range(2, 2.0), (2.0, np.inf))
        self.assertRaises(ParameterError, admissible_range, 2, 0.5)

    def test_oscillator_eigenvalue(self):
        """(2k - 2 + n) c"""
        self.assertEqual(oscillator_eigenvalue(1, 1.0, 2), 2.0)
        self.assertEqual(oscillator_eigenvalue(3, 0.5, 3), 3.5)
        self.assertRaises(ParameterError, oscillator_eigenvalue, 0, 1.0, 2)
        self.assertRaises(ParameterError, oscillator_eigenvalue, 1.5, 1.0, 2)

    def test_cutoff(self):
        spec = GridSpec(2, 4.0, 64)
        chi = cutoff(spec)
        r = np.sqrt(sum(x**2 for x in spec.centers()))
        r = np.broadcast_to(r, spec.shape)
        self.assertTrue(np.all(chi[r <= 0.7 * 4.0] == 1.0))
        self.assertTrue(np.all(chi[r >= 0.9 * 4.0] == 0.0))


class Test_rayleigh_quotient(unittest.TestCase):
    """Quotients of truncated Gaussians and bumps for c = 1"""

    def setUp(self):
        self.spec = GridSpec(2, 4.0, 256)
        self.d = RadialDensity(2, 1.0)
        self.gauss = truncated_gaussian(self.spec, self.d, 1.0)

    def test_best_constant(self):
        assert_allclose(rayleigh_quotient(self.gauss), 4.0, rtol=0.02)

    def test_homogeneous(self):
        scaled = self.gauss.derived(3.0 * self.gauss.values, "Scale.")
        assert_allclose(rayleigh_quotient(scaled), rayleigh_quotient(self.gauss),
                        rtol=1e-12)

    def test_density_override(self):
        """For Lebesgue measure the quotient of exp(-|x|^2) is 2"""
        lebesgue = RadialDensity(2, 0.0)
        assert_allclose(rayleigh_quotient(self.gauss, lebesgue), 2.0, rtol=0.02)

    def test_bumps_above_constant(self):
        rng = np.random.default_rng(6)
        for _ in range(3):
            u = random_bump(rng, self.spec, self.d)
            self.assertGreaterEqual(rayleigh_quotient(u), 4.0 * 0.98)

    def test_undefined(self):
        zero = GridFunction(self.spec, np.zeros(self.spec.shape), self.d)
        self.assertRaises(DomainError, rayleigh_quotient, zero)
        loose = GridFunction(self.spec, self.gauss.values, self.d, compact=False)
        self.assertRaises(PreconditionError, rayleigh_quotient, loose)

    def test_weighted_norm(self):
        """The L2 norm squared of exp(-|x|^2) under exp(|x|^2) dx is pi"""
        assert_allclose(weighted_norm(self.gauss, 2)**2, math.pi, rtol=1e-3)


class Test_oscillator(unittest.TestCase):
    """The substituted quadratic form"""

    def setUp(self):
        self.spec = GridSpec(2, 4.0, 256)
        self.d = RadialDensity(2, 1.0)

    def test_ground_state(self):
        """exp(-|x|^2/2): the three terms are pi, pi and 2 pi"""
        v = to_oscillator(truncated_gaussian(self.spec, self.d, 1.0), 1.0)
        self.assertEqual(v.density.c, 0.0)
        grad, potential, mass = oscillator_parts(v, 1.0)
        assert_allclose([grad, potential, mass], [math.pi, math.pi, math.pi],
                        rtol=0.01)
        self.assertLess(abs(oscillator_form(v, 1.0)), 0.005 * grad)

    def test_excited(self):
        """A bump has a positive form"""
        u = random_bump(np.random.default_rng(2), self.spec, self.d)
        v = to_oscillator(u, 1.0)
        grad, potential, mass = oscillator_parts(v, 1.0)
        self.assertGreater(oscillator_form(v, 1.0), -0.005 * (grad + potential))


class Test_RayleighReport(unittest.TestCase):

    def setUp(self):
        self.spec = GridSpec(2, 4.0, 32)

    def test_gap(self):
        r = RayleighReport(4.4, 'f', self.spec, 1.0, 2)
        self.assertEqual(r.target, 4.0)
        self.assertAlmostEqual(r.relative_gap, 0.1)
        c = r.to_comparison()
        self.assertTrue(c.passed)
        self.assertEqual(c.metadata['function_id'], 'f')
        self.assertFalse(r.to_comparison(relation='==').passed)

    def test_lebesgue_target(self):
        self.assertEqual(RayleighReport(1.0, 'f', self.spec, 0.0, 2).relative_gap,
                         np.inf)

    def test_negative(self):
        self.assertRaises(ValueError, RayleighReport, -1.0, 'f', self.spec, 1.0, 2)


class Test_SobolevSurvey(unittest.TestCase):

    def setUp(self):
        self.spec = GridSpec(2, 4.0, 128)
        self.d = RadialDensity(2, 1.0)
        self.corpus = sobolev_corpus(self.spec, self.d, bumps=3, seed=1)

    def test_corpus(self):
        ids = [k for k, _ in self.corpus]
        self.assertEqual(ids[:3], ['gaussian-0.5', 'gaussian-1.0', 'gaussian-2.0'])
        self.assertEqual(len(ids), 6)

    def test_minimum(self):
        survey = SobolevSurvey(self.d, 2.0, 2.0, self.corpus)
        ratios = [row[3] for row in survey.rows]
        self.assertEqual(survey.minimum, min(ratios))
        self.assertEqual(survey.argmin, survey.rows[int(np.argmin(ratios))][0])
        for check in survey.checks(tol=0.05):
            self.assertTrue(check.passed, repr(check))

    def test_inadmissible(self):
        d3 = RadialDensity(3, 1.0)
        self.assertRaises(ParameterError, SobolevSurvey, d3, 2.0, 7.0, [])
        self.assertRaises(ParameterError, SobolevSurvey, self.d, 2.0, 1.5, [])

    def test_csv(self):
        survey = sobolev_ratio_survey(self.d, 2.0, 4.0, corpus=self.corpus)
        out = six.StringIO()
        survey.to_csv(out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], "function_id,p,q,ratio")
        self.assertEqual(len(lines), 7)
        self.assertEqual(survey.to_dict()['functions'], 6)


class Test_rayleigh_suite(unittest.TestCase):

    def test_small_suite(self):
        a = rayleigh_suite(N=256, bumps=3, seed=2)
        self.assertTrue(a.passed, repr(a))
        self.assertEqual(a.summary()['cases'], 3 + 2 * 3)
        b = rayleigh_suite(N=256, bumps=3, seed=2)
        self.assertEqual(a.to_json(), b.to_json())


if __name__ == '__main__':
    unittest.main()
