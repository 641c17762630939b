#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the io module: MUGRID and CSV grid files and report tables.

"""
from __future__ import division, print_function, absolute_import
import json
import unittest

import numpy as np
import six
from numpy.testing import assert_array_equal

from murearrange import io
from murearrange.density import RadialDensity, density_id
from murearrange.gridsets import GridSet, GridSpec
from murearrange.rearrangefn import GridFunction, random_bump
from murearrange.report import ComparisonReport
from murearrange.util import silent_remove


class Test_header(unittest.TestCase):

    def setUp(self):
        self.spec = GridSpec(2, 2.5, 16)
        self.d = RadialDensity(2, 1.0)

    def test_set_header(self):
        s = GridSet.disk(self.spec, self.d, 1.0)
        line = io.header(s)
        self.assertEqual(line.split()[:5], ['MUGRID', 'v1', '2', '16', '2.5'])
        is_function, spec, cfg = io.parse_header(line)
        self.assertFalse(is_function)
        self.assertEqual(spec, self.spec)
        self.assertEqual(json.dumps(cfg, separators=(',', ':'), sort_keys=True),
                         density_id(self.d))

    def test_function_header(self):
        u = GridFunction.from_set(GridSet.disk(self.spec, self.d, 1.0))
        self.assertEqual(io.header(u).split()[2], 'FN')
        self.assertTrue(io.parse_header("# " + io.header(u))[0])

    def test_bad_headers(self):
        self.assertRaises(ValueError, io.parse_header, "GRID v1 2 16 2.5 {}")
        self.assertRaises(ValueError, io.parse_header, "MUGRID v2 2 16 2.5 {}")
        self.assertRaises(ValueError, io.parse_header, "MUGRID v1 2 16")


class Test_grid_files(unittest.TestCase):
    """Writing and reading grids through handles and paths"""
    filename = '.Test_grid.csv'

    def setUp(self):
        self.spec = GridSpec(2, 2.5, 16)
        self.d = RadialDensity(2, 1.0)
        self.u = random_bump(np.random.default_rng(0), self.spec, self.d)

    def test_function_stream(self):
        buf = six.StringIO()
        io.write_grid(self.u, buf)
        lines = buf.getvalue().splitlines()
        self.assertEqual(len(lines), 1 + self.spec.N)
        v = io.read_grid(six.StringIO(buf.getvalue()))
        self.assertIsInstance(v, GridFunction)
        self.assertTrue(v.compact)
        assert_array_equal(v.values, self.u.values)
        self.assertEqual(v.report, ["Read from a stream."])

    def test_set_csv_path(self):
        """A .csv extension selects commas and a commented header"""
        s = GridSet.ellipse(self.spec, self.d, (1.0, 0.5))
        io.write_grid(s, self.filename)
        with open(self.filename) as f:
            first, second = f.readline(), f.readline()
        self.assertTrue(first.startswith('# MUGRID v1 2'))
        self.assertIn(',', second)
        t = io.read_grid(self.filename)
        self.assertIsInstance(t, GridSet)
        assert_array_equal(t.occ, s.occ)

    def test_density_override(self):
        buf = six.StringIO()
        io.write_grid(self.u, buf)
        other = RadialDensity(2, 0.5)
        v = io.read_grid(six.StringIO(buf.getvalue()), density=other)
        self.assertIs(v.density, other)

    def test_bad_files(self):
        self.assertRaises(ValueError, io.read_grid, six.StringIO(""))
        short = io.header(self.u) + "\n0.0 0.0\n"
        self.assertRaises(ValueError, io.read_grid, six.StringIO(short))
        self.assertRaises(ValueError, io.write_grid, self.u, six.StringIO(), 'npy')

    def tearDown(self):
        silent_remove(self.filename)


class Test_tables(unittest.TestCase):

    def test_write_table(self):
        buf = six.StringIO()
        io.write_table(buf, ['name', 'x'], [['a', 1], ['b', 0.5]], comment='demo')
        self.assertEqual(buf.getvalue().splitlines(),
                         ['# demo', 'name,x', 'a,1.0', 'b,0.5'])

    def test_json(self):
        buf = six.StringIO()
        io.write_json(ComparisonReport('op', 2.0, 1.0), buf)
        data = io.read_json(six.StringIO(buf.getvalue()))
        self.assertEqual(data['operation'], 'op')
        self.assertTrue(data['passed'])


if __name__ == '__main__':
    unittest.main()
