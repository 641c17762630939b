#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the density module: one-dimensional primitives, radial ball
masses and isoperimetric profiles, and density configurations.

"""
from __future__ import division, print_function, absolute_import
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose
from scipy.integrate import quad

from murearrange.density import (Density1D, ProductDensity, RadialDensity,
                                 SingularRadialDensity, density_from_config,
                                 density_id, iso_fn_J, iso_profile_I,
                                 log_convexity_check, one_d_profile,
                                 psi_primitive, psi_primitive_inv,
                                 radial_mass_H, radial_mass_H_inv,
                                 steiner_factors)
from murearrange.util import DomainError, PreconditionError, RangeError


class Test_Density1D(unittest.TestCase):
    """Closed-form and tabulated one-dimensional densities"""

    def test_lebesgue(self):
        """c = 0 is Lebesgue measure: Psi(x) = x and I_1 = 2"""
        d = Density1D('gauss', 0.0)
        assert_allclose(d.Psi([-1.5, 0.0, 2.0]), [-1.5, 0.0, 2.0])
        assert_allclose(d.Psi_inv(0.7), 0.7)
        assert_allclose(one_d_profile(d, [0.1, 1.0, 10.0]), 2.0)

    def test_gauss_primitive(self):
        """Psi against quadrature and Psi_inv against Psi"""
        d = Density1D('gauss', 1.0)
        x = np.linspace(-2, 2, 9)
        reference = [math.copysign(quad(lambda t: math.exp(t * t), 0, abs(v))[0], v)
                     for v in x]
        assert_allclose(d.Psi(x), reference, rtol=1e-9, atol=1e-12)
        y = d.Psi(x)
        assert_allclose(d.Psi_inv(y), x, atol=1e-9)

    def test_scalar_in_scalar_out(self):
        d = Density1D('gauss', 0.5)
        self.assertIsInstance(d.Psi(1.0), float)
        self.assertIsInstance(d.Psi_inv(1.0), float)
        self.assertEqual(np.shape(d.psi(np.zeros((3, 2)))), (3, 2))

    def test_J(self):
        """J(Psi(x)) = psi(x)"""
        d = Density1D('gauss', 1.0)
        x = np.array([0.0, 0.3, 1.2])
        assert_allclose(iso_fn_J(d, d.Psi(x)), np.exp(x**2), rtol=1e-9)

    def test_profile_domain(self):
        d = Density1D('gauss', 1.0)
        self.assertRaises(DomainError, one_d_profile, d, -1.0)
        self.assertEqual(one_d_profile(d, 0.0), 2.0)

    def test_tabulated_constant(self):
        """A flat table reproduces Lebesgue measure, including the tail"""
        d = Density1D('tabulated', samples=[(0.0, 1.0), (1.0, 1.0)])
        assert_allclose(d.Psi([0.5, 1.0, 3.0]), [0.5, 1.0, 3.0], rtol=1e-9)
        assert_allclose(d.Psi_inv(2.5), 2.5, rtol=1e-8)

    def test_tabulated_matches_gauss(self):
        """A table of exp(t^2), linear in log psi, integrates like the closed
        form"""
        t = np.linspace(0, 3, 601)
        d = Density1D('tabulated', samples=np.column_stack([t, np.exp(t**2)]))
        g = Density1D('gauss', 1.0)
        assert_allclose(d.Psi(1.5), g.Psi(1.5), rtol=1e-5)

    def test_bad_arguments(self):
        self.assertRaises(DomainError, Density1D, 'gauss', -1.0)
        self.assertRaises(ValueError, Density1D, 'cauchy')
        self.assertRaises(ValueError, Density1D, 'tabulated')
        self.assertRaises(ValueError, Density1D, 'tabulated',
                          samples=[(0.5, 1.0), (1.0, 1.0)])
        self.assertRaises(ValueError, Density1D, 'tabulated',
                          samples=[(0.0, 2.0), (1.0, 1.0)])
        self.assertRaises(ValueError, Density1D, 'gauss', 0.0, quad_tol=0.0)

    def test_concave_range(self):
        """A finite-mass density cannot invert beyond its half-line mass"""
        d = Density1D('gauss', -1.0, allow_concave=True)
        self.assertRaises(RangeError, d.Psi_inv, 1.0)


class Test_functions(unittest.TestCase):
    """The module-level transforms"""

    def test_primitive(self):
        d = Density1D('gauss', 1.0)
        assert_allclose(psi_primitive(d, 1.0), 1.4626517, rtol=1e-7)
        assert_allclose(psi_primitive(d, -1.0), -psi_primitive(d, 1.0))
        assert_allclose(psi_primitive_inv(d, psi_primitive(d, 0.4)), 0.4, rtol=1e-9)
        self.assertEqual(psi_primitive(Density1D('gauss', 0.0), 2.0), 2.0)

    def test_radial(self):
        """I(pi (e - 1)) = 2 pi e, about 17.0795"""
        d = RadialDensity(2, 1.0)
        m = radial_mass_H(d, 1.0)
        assert_allclose(radial_mass_H_inv(d, m), 1.0, rtol=1e-10)
        assert_allclose(iso_profile_I(d, m), 17.0795, rtol=1e-5)


class Test_log_convexity_check(unittest.TestCase):

    def test_convex(self):
        for c in (0.0, 0.5, 1.0):
            self.assertTrue(log_convexity_check(Density1D('gauss', c))['convex'])

    def test_concave(self):
        """exp(-t^2) is reported with its violation"""
        out = log_convexity_check(Density1D('gauss', -1.0, allow_concave=True))
        self.assertFalse(out['convex'])
        self.assertGreater(out['violation'], 0.0)


class Test_RadialDensity(unittest.TestCase):
    """Ball masses and the isoperimetric profile of exp(c|x|^2)"""

    def test_anchor_plane(self):
        """n = 2, c = 1: H(1) = pi (e - 1) and I(H(1)) = 2 pi e"""
        d = RadialDensity(2, 1.0)
        assert_allclose(d.H(1.0), math.pi * (math.e - 1), rtol=1e-12)
        assert_allclose(d.I(math.pi * (math.e - 1)), 2 * math.pi * math.e,
                        rtol=1e-10)

    def test_lebesgue(self):
        """c = 0: H(r) = omega_n r^n"""
        for n in (2, 3, 4):
            d = RadialDensity(n, 0.0)
            assert_allclose(d.H(1.3), d.omega_n * 1.3**n, rtol=1e-12)
            assert_allclose(d.H_inv(d.H(1.3)), 1.3, rtol=1e-12)

    def test_closed_form_vs_quadrature(self):
        """The n = 3 closed form (series and erfi branches) matches quad"""
        d = RadialDensity(3, 1.0)
        for r in (0.2, 0.9, 1.7):
            assert_allclose(d.H(r), d.H(r, method='quad'), rtol=1e-9)

    def test_higher_dimension(self):
        """n = 4 falls back to quadrature and still inverts"""
        d = RadialDensity(4, 0.5)
        m = d.H(1.1)
        assert_allclose(d.H_inv(m), 1.1, rtol=1e-8)

    def test_profile_endpoints(self):
        d = RadialDensity(2, 1.0)
        self.assertEqual(d.I(0.0), 0.0)
        self.assertRaises(DomainError, d.I, -0.5)
        self.assertRaises(DomainError, d.H, -0.5)

    def test_bad_arguments(self):
        self.assertRaises(ValueError, RadialDensity, 1, 0.0)
        self.assertRaises(DomainError, RadialDensity, 2, -0.1)

    def test_weight(self):
        d = RadialDensity(2, 0.5)
        assert_allclose(d.weight([np.array([1.0]), np.array([1.0])]), [math.e])


class Test_other_densities(unittest.TestCase):

    def test_singular_ball_mass(self):
        """a(t) = t: mu(B_R) = 2 pi (e^R - 1) and the inverse recovers R"""
        d = SingularRadialDensity(2)
        assert_allclose(d.ball_mass(1.0), 2 * math.pi * (math.e - 1), rtol=1e-12)
        assert_allclose(d.ball_radius(d.ball_mass(0.7)), 0.7, rtol=1e-9)
        assert_allclose(d.ball_perimeter(1.0), 2 * math.pi * math.e)

    def test_singular_quadratic(self):
        """The quadrature branch agrees with the affine closed form"""
        quadratic = SingularRadialDensity(2, {'kind': 'quadratic',
                                         'coefficients': [0.0, 1.0, 0.0]})
        closed = SingularRadialDensity(2)
        assert_allclose(quadratic.ball_mass(0.8), closed.ball_mass(0.8), rtol=1e-9)

    def test_singular_nonconvex(self):
        self.assertRaises(PreconditionError, SingularRadialDensity, 2,
                          {'kind': 'quadratic', 'coefficients': [0.0, 0.0, -1.0]})

    def test_product(self):
        d = ProductDensity(Density1D('gauss', 1.0), {'kind': 'constant', 'value': 2.0})
        assert_allclose(d.weight([np.array([1.0]), np.array([5.0])]), [2 * math.e])
        self.assertIs(steiner_factors(d), d)

    def test_steiner_factors_radial(self):
        """exp(c|x|^2) factors as exp(c x1^2) exp(c |x'|^2)"""
        d = RadialDensity(2, 0.7)
        f = steiner_factors(d)
        x = [np.array([0.3, -1.0]), np.array([0.8, 0.2])]
        assert_allclose(f.weight(x), d.weight(x))
        self.assertRaises(PreconditionError, steiner_factors, SingularRadialDensity(2))


class Test_density_config(unittest.TestCase):
    """Configurations build the density they describe"""

    def test_round_trip_ids(self):
        for d in (Density1D('gauss', 0.5), RadialDensity(3, 1.0),
                  SingularRadialDensity(2),
                  ProductDensity(Density1D('gauss', 1.0), {'kind': 'gauss', 'c': 1.0})):
            self.assertEqual(density_id(density_from_config(density_id(d))),
                             density_id(d))

    def test_kinds(self):
        self.assertIsInstance(density_from_config({'kind': 'gauss', 'c': 1.0}),
                              Density1D)
        self.assertIsInstance(density_from_config({'kind': 'gauss', 'c': 1.0, 'n': 2}),
                              RadialDensity)
        self.assertRaises(ValueError, density_from_config, {'kind': 'laplace'})


if __name__ == '__main__':
    unittest.main()
