#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the report and util modules.

"""
from __future__ import division, print_function, absolute_import
import json
import os
import unittest
from unittest import mock

import numpy as np

from murearrange.report import ComparisonReport, SuiteReport, dumps
from murearrange.util import (THREADS_ENV, ParameterError, eng, infer_step,
                              parallel_map, powerise10, thread_count)


class Test_ComparisonReport(unittest.TestCase):
    """Slack and pass/fail for the three relations"""

    def test_greater_equal(self):
        """lhs >= rhs passes with zero tolerance; a small miss is absorbed
        by the tolerance"""
        self.assertTrue(ComparisonReport('op', 2.0, 1.0).passed)
        r = ComparisonReport('op', 0.99, 1.0, tolerance=0.02)
        self.assertAlmostEqual(r.deficit, -0.01)
        self.assertAlmostEqual(r.slack, 0.01)
        self.assertTrue(r.passed)
        self.assertFalse(ComparisonReport('op', 0.9, 1.0, tolerance=0.02).passed)

    def test_less_equal(self):
        """'<=' flips the sign of the deficit"""
        self.assertTrue(ComparisonReport('op', 0.0, 1.0, relation='<=').passed)
        self.assertFalse(ComparisonReport('op', 1.5, 1.0, tolerance=0.1,
                                          relation='<=').passed)

    def test_equal(self):
        """'==' compares the absolute deficit with the tolerance"""
        self.assertTrue(ComparisonReport('op', 1.001, 1.0, tolerance=0.01,
                                         relation='==').passed)
        self.assertFalse(ComparisonReport('op', 0.98, 1.0, tolerance=0.01,
                                          relation='==').passed)

    def test_bad_arguments(self):
        """Negative tolerances and unknown relations are rejected"""
        self.assertRaises(ValueError, ComparisonReport, 'op', 1, 1, -1e-3)
        self.assertRaises(ValueError, ComparisonReport, 'op', 1, 1, 0.0, '>')

    def test_details(self):
        """A failing detail fails the parent"""
        bad = ComparisonReport('inner', 0.0, 1.0)
        r = ComparisonReport('outer', 2.0, 1.0, details=[bad])
        self.assertFalse(r.passed)
        self.assertEqual(r.failures(), [bad])

    def test_json(self):
        """to_dict / from_dict keeps every field"""
        r = ComparisonReport('op', 1.5, 1.0, tolerance=0.1, relation='==',
                             metadata={'seed': 3},
                             details=[ComparisonReport('q', 1.0, 2.0, relation='<=')])
        data = json.loads(r.to_json())
        self.assertEqual(data['operation'], 'op')
        self.assertEqual(data['metadata'], {'seed': 3})
        back = ComparisonReport.from_dict(data)
        self.assertEqual(back.to_json(), r.to_json())


class Test_SuiteReport(unittest.TestCase):
    """Aggregation of comparison reports"""

    def setUp(self):
        self.cases = [ComparisonReport('a', 2.0, 1.0),
                      ComparisonReport('a', 1.0, 1.0),
                      ComparisonReport('b', 0.5, 1.0, tolerance=0.1)]
        self.suite = SuiteReport('demo', self.cases, {'seed': 0})

    def test_summary(self):
        """Counts, per-operation deficits and the worst case"""
        s = self.suite.summary()
        self.assertEqual(s['cases'], 3)
        self.assertEqual(s['failed'], 1)
        self.assertFalse(s['passed'])
        self.assertEqual(s['by_operation']['a']['cases'], 2)
        self.assertEqual(s['by_operation']['a']['min_deficit'], 0.0)
        self.assertEqual(s['by_operation']['a']['max_deficit'], 1.0)
        self.assertEqual(s['worst']['operation'], 'b')

    def test_empty(self):
        """An empty suite passes and has no worst case"""
        suite = SuiteReport('empty', [])
        self.assertTrue(suite.passed)
        self.assertIsNone(suite.worst())

    def test_deterministic_json(self):
        """The JSON body depends only on the cases and metadata"""
        again = SuiteReport('demo', list(self.cases), {'seed': 0})
        self.assertEqual(self.suite.to_json(), again.to_json())
        data = json.loads(self.suite.to_json())
        self.assertEqual(len(data['failures']), 1)

    def test_dumps_non_finite(self):
        """Infinite values survive as strings"""
        data = json.loads(dumps({'x': np.inf, 'y': np.float64(2.0)}))
        self.assertEqual(data['x'], 'inf')
        self.assertEqual(data['y'], 2.0)


class Test_util(unittest.TestCase):
    """Formatting, grid steps and the thread pool"""

    def test_powerise10(self):
        a, b = powerise10(-12345.0)
        self.assertAlmostEqual(a, -1.2345)
        self.assertEqual(b, 4)

    def test_eng(self):
        self.assertEqual(eng(25000.0), "25E3")
        self.assertEqual(eng(0.5), "0.5")

    def test_infer_step(self):
        self.assertAlmostEqual(infer_step(np.linspace(0, 1, 11)), 0.1)
        self.assertRaises(ValueError, infer_step, [0.0, 1.0, 3.0])
        self.assertRaises(ValueError, infer_step, [0.0])

    def test_parallel_map_order(self):
        """Results come back in input order for any worker count"""
        items = list(range(50))
        serial = parallel_map(lambda k: k * k, items, threads=1)
        threaded = parallel_map(lambda k: k * k, items, threads=8)
        self.assertEqual(serial, threaded)

    def test_thread_count_env(self):
        with mock.patch.dict(os.environ, {THREADS_ENV: '3'}):
            self.assertEqual(thread_count(), 3)
        with mock.patch.dict(os.environ, {THREADS_ENV: '0'}):
            self.assertRaises(ParameterError, thread_count)
        with mock.patch.dict(os.environ, {THREADS_ENV: 'many'}):
            self.assertRaises(ParameterError, thread_count)


if __name__ == '__main__':
    unittest.main()
