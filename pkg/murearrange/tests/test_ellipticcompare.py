#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the ellipticcompare module.  For Lebesgue measure the torsion
problem on the disk has the solution :math:`(R^2 - r^2)/4`, which is also
the radial bound; the solver and the bound are checked against it.

"""
from __future__ import division, print_function, absolute_import
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose

from murearrange.density import Density1D, ProductDensity, RadialDensity
from murearrange.ellipticcompare import (SHAPES, SOURCES, EllipticProblem,
                                         RadialBound, compare,
                                         comparison_suite, convergence_order,
                                         domain_from_config, mesh_convergence,
                                         oracle_error, problem_from_config,
                                         radial_bound_v, radial_torsion,
                                         solve_weighted_plaplace,
                                         source_from_config)
from murearrange.gridsets import GridSet, GridSpec, grid_measure
from murearrange.util import (DomainError, ParameterError, PreconditionError,
                              WindowError)


def disk_problem(N=128, c=0.0, R=1.0, f=1.0):
    spec = GridSpec(2, 1.25, N)
    density = RadialDensity(2, c)
    domain, level = domain_from_config({'shape': 'disk', 'radius': R},
                                       spec, density)
    return EllipticProblem(domain, 2.0, f, density, level)


def weighted_config(shape, f, N=64, p=2.0, c=1.0):
    return {'grid': {'n': 2, 'L': 1.25, 'N': N},
            'density': {'kind': 'gauss', 'c': c},
            'domain': shape, 'f': f, 'p': p}


class Test_configuration(unittest.TestCase):
    """Domains, sources and problems from JSON-style dicts"""

    def setUp(self):
        self.spec = GridSpec(2, 1.25, 64)
        self.d = RadialDensity(2, 1.0)

    def test_shapes(self):
        disk, _ = domain_from_config({'shape': 'disk', 'radius': 1.0},
                                     self.spec, self.d)
        square, _ = domain_from_config({'shape': 'square', 'side': 1.6},
                                       self.spec, self.d)
        ell, _ = domain_from_config({'shape': 'l_shape', 'side': 1.6},
                                    self.spec, self.d)
        self.assertLess(grid_measure(ell), grid_measure(square))
        self.assertLess(grid_measure(ell), grid_measure(disk))
        self.assertEqual(int(ell.occ.sum()), int(square.occ.sum()) * 3 // 4)

    def test_bad_shapes(self):
        self.assertRaises(ValueError, domain_from_config, {'shape': 'star'},
                          self.spec, self.d)
        spec = GridSpec(3, 1.25, 16)
        self.assertRaises(ValueError, domain_from_config, {'shape': 'l_shape'},
                          spec, RadialDensity(3, 1.0))

    def test_sources(self):
        x = [np.array([0.0, 1.0]), np.array([0.0, 0.0])]
        assert_allclose(source_from_config({'kind': 'constant', 'value': 2.0})(x),
                        [2.0, 2.0])
        assert_allclose(source_from_config({'kind': 'ramp', 'value': 1.0,
                                            'slope': 0.5})(x), [1.0, 0.5])
        bump = source_from_config({'kind': 'bump', 'center': [0.0, 0.0],
                                   'width': 1.0, 'height': 2.0})
        assert_allclose(bump(x), [2.0, 2.0 / math.e])
        self.assertRaises(ValueError, source_from_config, {'kind': 'delta'})

    def test_problem_from_config(self):
        prob = problem_from_config({
            'grid': {'n': 2, 'L': 1.25, 'N': 32},
            'density': {'kind': 'gauss', 'c': 1.0},
            'domain': {'shape': 'square', 'side': 1.6},
            'p': 2.0})
        self.assertEqual(prob.p, 2.0)
        self.assertEqual(prob.density.c, 1.0)
        self.assertIsNotNone(prob.level)
        self.assertEqual(prob.config()['grid'], prob.spec.config())
        self.assertIn("EllipticProblem report", repr(prob))


class Test_EllipticProblem(unittest.TestCase):
    """Argument checks"""

    def setUp(self):
        self.spec = GridSpec(2, 1.25, 32)
        self.d = RadialDensity(2, 1.0)
        self.domain = GridSet.disk(self.spec, self.d, 1.0)

    def test_exponent(self):
        self.assertRaises(DomainError, EllipticProblem, self.domain, 1.0)
        self.assertRaises(ParameterError, EllipticProblem, self.domain, 5.0)
        self.assertAlmostEqual(EllipticProblem(self.domain, 3.0).p_prime, 1.5)

    def test_preconditions(self):
        product = ProductDensity(Density1D('gauss', 1.0))
        self.assertRaises(PreconditionError, EllipticProblem, self.domain,
                          2.0, 1.0, product)
        occ = self.domain.occ * 0.5
        fuzzy = GridSet(self.spec, occ, self.d)
        self.assertRaises(PreconditionError, EllipticProblem, fuzzy)
        empty = GridSet(self.spec, np.zeros(self.spec.shape), self.d, boolean=True)
        self.assertRaises(ValueError, EllipticProblem, empty)

    def test_source_outside_domain(self):
        """f is cut to the domain"""
        prob = EllipticProblem(self.domain, 2.0, 3.0)
        self.assertEqual(prob.f.max(), 3.0)
        self.assertTrue(np.all(prob.f[self.domain.occ == 0] == 0))


class Test_solver(unittest.TestCase):
    """The p = 2 solver against the exact torsion function"""

    def test_lebesgue_torsion(self):
        prob = disk_problem(N=128)
        u = solve_weighted_plaplace(prob)
        r = np.sqrt(sum(x**2 for x in prob.spec.centers()))
        exact = np.clip(1 - r**2, 0, None) / 4
        self.assertLess(np.max(np.abs(u.values - exact)), 0.01 * 0.25)
        self.assertTrue(np.all(u.values[prob.domain.occ == 0] == 0))
        self.assertLess(prob.history[-1], 1e-9)

    def test_oracle(self):
        """The radial quadrature reproduces (R^2 - r^2)/4 and the solver
        matches it for c = 1"""
        oracle = radial_torsion(RadialDensity(2, 0.0), 1.0)
        assert_allclose(oracle(np.array([0.0, 0.5, 1.0, 1.2])),
                        [0.25, 0.1875, 0.0, 0.0], atol=1e-6)
        r = oracle_error(disk_problem(N=128, c=1.0),
                         radial_torsion(RadialDensity(2, 1.0), 1.0))
        self.assertTrue(r.passed, repr(r))

    def test_zero_source(self):
        u = solve_weighted_plaplace(disk_problem(N=32, f=0.0))
        self.assertEqual(u.values.max(), 0.0)

    def test_convergence_order(self):
        """Exact power law data gives its exponent back"""
        deltas = np.array([0.1, 0.05, 0.025, 0.0125])
        fit = convergence_order(deltas, 3 * deltas**2)
        self.assertAlmostEqual(fit['order'], 2.0, places=6)
        self.assertAlmostEqual(fit['amplitude'], 3.0, places=5)
        self.assertRaises(ParameterError, convergence_order, [0.1], [0.01])

    def test_mesh_convergence(self):
        fit = mesh_convergence(c=0.0, Ns=(32, 64, 128))
        self.assertEqual(len(fit['errors']), 3)
        self.assertLess(fit['errors'][-1], fit['errors'][0])
        self.assertGreater(fit['order'], 1.0)


class Test_radial_bound(unittest.TestCase):
    """For c = 0, p = 2, f = 1 the bound is (mu(Omega) - s) / (4 pi)"""

    def setUp(self):
        self.prob = disk_problem(N=64)
        self.bound = radial_bound_v(self.prob)
        self.mass = grid_measure(self.prob.domain)

    def test_values(self):
        b = self.bound
        self.assertEqual(b.v[-1], 0.0)
        self.assertTrue(np.all(np.diff(b.v) <= 1e-15))
        assert_allclose(b.v, (self.mass - b.s) / (4 * math.pi), rtol=1e-6,
                        atol=1e-12)
        self.assertEqual(b.to_table().shape, (b.s.size, 3))

    def test_gradient_norm(self):
        """q = 1: the integral of |x|/2 over the ball of the same area"""
        R = math.sqrt(self.mass / math.pi)
        assert_allclose(self.bound.gradient_norm(1.0), math.pi * R**3 / 3,
                        rtol=1e-3)

    def test_sample_window(self):
        d = RadialDensity(2, 0.0)
        s = np.array([0.0, d.H(1.3)])
        bound = RadialBound(s, np.array([1.0, 0.0]), np.zeros(2), None, d, 2.0)
        self.assertRaises(WindowError, bound.sample, GridSpec(2, 1.25, 32))

    def test_negative_source(self):
        prob = disk_problem(N=32, f=-1.0)
        self.assertRaises(PreconditionError, radial_bound_v, prob)


class Test_compare(unittest.TestCase):

    def test_disk_equality(self):
        """On the disk with f = 1 the symmetral of u touches the bound"""
        r = compare(disk_problem(N=128))
        self.assertLessEqual(r.lhs, r.tolerance)
        self.assertGreater(r.metadata['max_u_star'], 0.95 * r.metadata['max_v'])
        self.assertEqual([d.metadata['q'] for d in r.details], [1.0, 1.5])

    def test_bad_q(self):
        prob = disk_problem(N=32)
        self.assertRaises(ParameterError, compare, prob, [2.0])
        self.assertRaises(ParameterError, compare, prob, [0.5])

    def test_weighted_shapes(self):
        """c = 1 on the square and the L-shape, constant and bump sources"""
        for shape in SHAPES[1:]:
            for f in (SOURCES[0], SOURCES[2]):
                r = compare(problem_from_config(weighted_config(shape, f, N=128)))
                self.assertTrue(r.passed, repr(r))
                self.assertEqual(len(r.details), 2)

    def test_fixed_point_path(self):
        """p = 1.5 goes through the damped fixed-point iteration"""
        for shape in SHAPES[1:]:
            prob = problem_from_config(weighted_config(shape, SOURCES[0], p=1.5))
            r = compare(prob)
            self.assertTrue(r.passed, repr(r))
            self.assertIsNotNone(prob.epsilon)
            self.assertLess(prob.history[-1], 1e-7)
            self.assertEqual([d.metadata['q'] for d in r.details], [1.0, 1.25])


class Test_comparison_suite(unittest.TestCase):

    def test_deterministic(self):
        a = comparison_suite(cs=(1.0,), ps=(2.0, 1.5), N=32, threads=1)
        b = comparison_suite(cs=(1.0,), ps=(2.0, 1.5), N=32, threads=2)
        self.assertEqual(a.to_json(), b.to_json())
        # every shape and source for p = 2, the constant source for p = 1.5,
        # then the ball and the torsion control
        self.assertEqual(a.summary()['cases'], 9 + 3 + 1 + 1)
        self.assertIn('torsion_oracle', a.summary()['by_operation'])


if __name__ == '__main__':
    unittest.main()
