#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the rearrange1d module.  Exact identities are checked on
hand-built interval sets; the inequalities are checked on interval sets
drawn by ``hypothesis``.

"""
from __future__ import division, print_function, absolute_import
import unittest

import numpy as np
from numpy.testing import assert_allclose
from hypothesis import given, settings, strategies as st

from murearrange.density import Density1D, log_convexity_check
from murearrange.rearrange1d import (IntervalSet, hausdorff_distance,
                                     iso1d_suite, measure_1d,
                                     minkowski_content_1d, perimeter_1d,
                                     symmetrize_1d, verify_iso_1d,
                                     verify_parallel_containment_1d)
from murearrange.util import DomainError, ParameterError, PreconditionError

DENSITIES = [Density1D('gauss', c) for c in (0.0, 0.5, 1.0)]
CONVEXITY = [log_convexity_check(d) for d in DENSITIES]


@st.composite
def interval_sets(draw, lo=-3.0, hi=3.0, max_components=6, resolution=1e-3):
    """Unions of intervals with end points on a grid of ``resolution``."""
    ticks = draw(st.lists(st.integers(int(lo / resolution), int(hi / resolution)),
                          min_size=2, max_size=2 * max_components, unique=True))
    ends = [t * resolution for t in sorted(ticks)]
    if len(ends) % 2:
        ends = ends[:-1]
    return IntervalSet(np.reshape(ends, (-1, 2)))


class Test_IntervalSet(unittest.TestCase):
    """Normalization, containment and distances"""

    def test_merge(self):
        """Overlapping and touching intervals merge"""
        s = IntervalSet([(2, 3), (0, 1), (0.5, 1.5), (1.5, 1.8)])
        self.assertEqual(s.intervals.tolist(), [[0.0, 1.8], [2.0, 3.0]])

    def test_invalid(self):
        self.assertRaises(ValueError, IntervalSet, [(1.0, 1.0)])
        self.assertRaises(ValueError, IntervalSet, [(0.0, np.inf)])

    def test_contains(self):
        outer = IntervalSet([(-2, 2)])
        self.assertTrue(outer.contains(IntervalSet([(-1, 0), (0.5, 1)])))
        self.assertFalse(outer.contains(IntervalSet([(1, 3)])))
        self.assertTrue(outer.contains(IntervalSet()))
        self.assertFalse(IntervalSet().contains(outer))

    def test_dilate(self):
        s = IntervalSet([(0, 1), (1.2, 2)]).dilate(0.1)
        self.assertEqual(len(s), 1)
        assert_allclose(s.intervals, [[-0.1, 2.1]])
        self.assertRaises(ParameterError, s.dilate, -1.0)

    def test_hausdorff(self):
        """A point in a gap is the farthest point of the union"""
        s = IntervalSet([(0, 3)])
        t = IntervalSet([(0, 1), (2, 3)])
        assert_allclose(hausdorff_distance(s, t), 0.5)
        assert_allclose(hausdorff_distance(IntervalSet([(0, 1)]),
                                           IntervalSet([(0, 1), (2, 3)])), 2.0)
        self.assertEqual(hausdorff_distance(IntervalSet(), IntervalSet()), 0.0)
        self.assertEqual(hausdorff_distance(s, IntervalSet()), np.inf)

    def test_json(self):
        s = IntervalSet([(-1, 0.5), (1, 2)])
        self.assertEqual(IntervalSet.from_json(s.to_json()), s)


class Test_measure_perimeter(unittest.TestCase):
    """Endpoint formulas for the measure and the perimeter"""

    def test_lebesgue(self):
        d = DENSITIES[0]
        s = IntervalSet([(-1, 0), (2, 2.5)])
        self.assertAlmostEqual(measure_1d(d, s), 1.5)
        self.assertAlmostEqual(perimeter_1d(d, s), 4.0)
        sym = symmetrize_1d(d, s)
        assert_allclose(sym.intervals, [[-0.75, 0.75]])

    def test_empty(self):
        d = DENSITIES[2]
        self.assertEqual(measure_1d(d, IntervalSet()), 0.0)
        self.assertEqual(perimeter_1d(d, IntervalSet()), 0.0)
        self.assertTrue(symmetrize_1d(d, IntervalSet()).is_empty())

    def test_minkowski_content(self):
        """For c = 0 each interval gains 2r of length"""
        d = DENSITIES[0]
        s = IntervalSet([(0, 1), (2, 3)])
        self.assertAlmostEqual(minkowski_content_1d(d, s, 0.1), 4.0)
        self.assertRaises(ParameterError, minkowski_content_1d, d, s, 0.0)


class Test_verify_iso_1d(unittest.TestCase):
    """The one-dimensional isoperimetric inequality"""

    def test_interval_equality_lebesgue(self):
        """psi = 1: every single interval has zero deficit"""
        r = verify_iso_1d(DENSITIES[0], IntervalSet([(0.3, 2.9)]))
        self.assertEqual(r.deficit, 0.0)
        self.assertTrue(r.passed)

    def test_centered_equality(self):
        """psi = exp(t^2): the centered interval attains the profile"""
        for a in (0.1, 1.0, 2.5):
            r = verify_iso_1d(DENSITIES[2], IntervalSet([(-a, a)]))
            self.assertLessEqual(abs(r.deficit), 1e-9 * max(1.0, r.rhs))

    def test_off_center_strict(self):
        """Shifting an interval off center costs perimeter when c > 0"""
        r = verify_iso_1d(DENSITIES[2], IntervalSet([(0.0, 1.0)]))
        self.assertGreater(r.deficit, 0.1)

    def test_concave_density(self):
        """exp(-t^2) is refused with the failed check in the message"""
        d = Density1D('gauss', -1.0, allow_concave=True)
        with self.assertRaises(PreconditionError) as cm:
            verify_iso_1d(d, IntervalSet([(0, 1)]))
        self.assertIn('log_convexity_check', str(cm.exception))

    def test_empty(self):
        self.assertRaises(DomainError, verify_iso_1d, DENSITIES[1], IntervalSet())

    @settings(max_examples=150, deadline=None)
    @given(s=interval_sets(), k=st.integers(0, 2))
    def test_inequality(self, s, k):
        r = verify_iso_1d(DENSITIES[k], s, convexity=CONVEXITY[k])
        self.assertTrue(r.passed, repr(r))

    @settings(max_examples=150, deadline=None)
    @given(s=interval_sets(), k=st.integers(0, 2))
    def test_measure_preserved(self, s, k):
        d = DENSITIES[k]
        m = measure_1d(d, s)
        assert_allclose(measure_1d(d, symmetrize_1d(d, s)), m,
                        rtol=1e-9, atol=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(s=interval_sets(), r=st.floats(0.01, 0.5), k=st.integers(0, 2))
    def test_parallel_containment(self, s, r, k):
        self.assertTrue(verify_parallel_containment_1d(DENSITIES[k], s, r).passed)

    @settings(max_examples=100, deadline=None)
    @given(s=interval_sets(), k=st.integers(0, 2))
    def test_monotone(self, s, k):
        """A subset symmetrizes into the symmetral of the set"""
        d = DENSITIES[k]
        sub = IntervalSet([(a + 0.25 * (b - a), b - 0.25 * (b - a)) for a, b in s])
        self.assertTrue(symmetrize_1d(d, s).contains(symmetrize_1d(d, sub)))


class Test_iso1d_suite(unittest.TestCase):

    def test_small_suite(self):
        """A small corpus passes and its JSON ignores the worker count"""
        a = iso1d_suite(cases=40, seed=7, threads=1)
        b = iso1d_suite(cases=40, seed=7, threads=4)
        self.assertTrue(a.passed, repr(a))
        self.assertEqual(a.to_json(), b.to_json())
        ops = a.summary()['by_operation']
        for name in ('verify_iso_1d', 'measure_preservation_1d',
                     'monotonicity_1d', 'parallel_containment_1d'):
            self.assertIn(name, ops)


if __name__ == '__main__':
    unittest.main()
