#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# density.py

"""

Weight functions and the transforms they induce.

One-dimensional densities :math:`\\psi` (class :class:`Density1D`) provide

.. math::

    \\Psi(x) = \\int_0^x \\psi(t) \\, dt, \\qquad
    J(y) = \\psi(\\Psi^{-1}(y)), \\qquad
    I_1(m) = 2 J(m/2),

the last being the weighted perimeter of the centered interval of mass
:math:`m`.  Radial densities :math:`\\varphi(x) = e^{c|x|^2}` in
:math:`\\mathbb{R}^n` (class :class:`RadialDensity`) provide

.. math::

    h(r) = n \\omega_n e^{c r^2} r^{n-1}, \\qquad
    H(r) = \\int_0^r h(t) \\, dt, \\qquad
    I(m) = h(H^{-1}(m)),

the mass and perimeter of centered balls.  :class:`SingularRadialDensity`
is :math:`|x|^{1-n} e^{a(|x|)}` with convex :math:`a`, and
:class:`ProductDensity` is :math:`\\psi(x_1) \\rho(x')`.

All densities are immutable once built; every cache is filled in the
constructor so objects may be shared between threads.

"""

from __future__ import division, print_function, absolute_import
import json
import math
from collections import OrderedDict

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import erf, erfi, gamma

from murearrange.util import (
    DomainError,
    PreconditionError,
    QuadratureError,
    RangeError,
    format_report,
)

DEFAULT_QUAD_TOL = 1e-10


def _quad(fcn, a, b, tol, points=None):
    """``quad`` with a relative tolerance; failures raise QuadratureError."""
    if a == b:
        return 0.0
    kwargs = dict(epsabs=0.0, epsrel=tol, limit=200, full_output=1)
    if points is not None and len(points) > 0:
        kwargs['points'] = points
    out = quad(fcn, a, b, **kwargs)
    value, abserr = out[0], out[1]
    if len(out) > 3:
        achieved = abserr / max(abs(value), np.finfo(float).tiny)
        raise QuadratureError(
            "Quadrature on [{0}, {1}] did not reach relative tolerance {2}; "
            "achieved {3:.3g}. QUADPACK: {4}".format(
                a, b, tol, achieved, out[3].strip().splitlines()[0]),
            achieved=achieved)
    return value


def _invert_increasing(fcn, y, lo=0.0, hi=1.0, max_doublings=200,
                       what='value'):
    """Solve ``fcn(x) = y`` for increasing ``fcn`` with ``fcn(lo) <= y``.

    The upper end of the bracket is doubled until it brackets the root."""
    f_hi = fcn(hi)
    k = 0
    while not f_hi >= y:
        if k >= max_doublings or not np.isfinite(f_hi):
            raise RangeError(
                "Could not bracket {0} = {1}: the transform reached {2} at "
                "x = {3}".format(what, y, f_hi, hi), target=y)
        lo, hi = hi, 2 * hi
        f_hi = fcn(hi)
        k += 1
    if f_hi == y:
        return hi
    return brentq(lambda x: fcn(x) - y, lo, hi, xtol=1e-15, rtol=1e-14,
                  maxiter=500)


def _as_output(x, values):
    """Return a float for scalar input, an array otherwise."""
    if np.ndim(x) == 0:
        return float(np.asarray(values).reshape(()))
    return np.asarray(values, dtype=float)


def unit_ball_volume(n):
    """:math:`\\omega_n`, the Lebesgue measure of the unit ball."""
    return math.pi**(n / 2) / gamma(n / 2 + 1)


class Density1D(object):

    def __init__(self, kind='gauss', c=0.0, samples=None,
                 quad_tol=DEFAULT_QUAD_TOL, allow_concave=False):
        """
        An even, positive one-dimensional density.

        :param str kind: ``'gauss'`` for :math:`\\psi(t) = e^{ct^2}`, or
            ``'tabulated'`` for samples of :math:`\\psi` on :math:`t \\ge 0`
            interpolated linearly in :math:`\\log \\psi`
        :param float c: exponent of the ``'gauss'`` kind, ``c >= 0``
        :param samples: ``(t, psi)`` pairs, ``t`` increasing from 0
        :param float quad_tol: relative tolerance of every quadrature
        :param bool allow_concave: admit ``c < 0``.  Such a density has
            finite total mass; it exists only as a counterexample for
            :func:`log_convexity_check`.

        The tabulated tail beyond the last sample continues the last
        segment's slope of :math:`\\log \\psi`, which must be ``>= 0`` so
        that the line carries infinite mass.
        """
        if not 1e-14 <= quad_tol < 1:
            raise ValueError(
                "quad_tol must lie in [1e-14, 1), got {0}".format(quad_tol))
        self.kind = kind
        self.quad_tol = float(quad_tol)
        self.c = float(c)
        self.report = []
        new_report = []

        if kind == 'gauss':
            if self.c < 0 and not allow_concave:
                raise DomainError(
                    "c = {0} < 0 gives a finite-mass density; pass "
                    "allow_concave=True to build it anyway".format(c))
            self.samples = None
            new_report.append(
                "Density psi(t) = exp({0} t^2) with closed-form".format(c))
            new_report.append("primitive.")
        elif kind == 'tabulated':
            self._init_tabulated(samples)
            new_report.append("Tabulated density from {0} samples on".format(
                self._t.size))
            new_report.append("[0, {0}], tail slope of log psi {1:.4g};".format(
                self._t[-1], self._tail_slope))
            new_report.append("primitive by adaptive quadrature with")
            new_report.append("relative tolerance {0:g}.".format(self.quad_tol))
        else:
            raise ValueError(
                "Unknown density kind {0!r}; expected 'gauss' or "
                "'tabulated'".format(kind))
        self.report.append(" ".join(new_report))

    def _init_tabulated(self, samples):
        if samples is None:
            raise ValueError("tabulated density requires samples")
        samples = np.asarray(samples, dtype=float)
        if samples.ndim != 2 or samples.shape[1] != 2 or samples.shape[0] < 1:
            raise ValueError("samples must be a list of (t, psi) pairs")
        t, psi = samples[:, 0], samples[:, 1]
        if t[0] != 0:
            raise ValueError("samples must start at t = 0, got {0}".format(t[0]))
        if np.any(np.diff(t) <= 0):
            raise ValueError("sample abscissae must be strictly increasing")
        if np.any(psi <= 0) or not np.all(np.isfinite(psi)):
            raise ValueError("psi samples must be positive and finite")
        self._t = t
        self._logpsi = np.log(psi)
        if t.size > 1:
            self._tail_slope = ((self._logpsi[-1] - self._logpsi[-2]) /
                                (t[-1] - t[-2]))
        else:
            self._tail_slope = 0.0
        if self._tail_slope < 0:
            raise ValueError(
                "the tail of log psi decreases (slope {0:.4g}): the density "
                "would have finite total mass".format(self._tail_slope))
        self.samples = samples
        # primitive at the breakpoints
        cum = np.zeros(t.size)
        for k in range(1, t.size):
            cum[k] = cum[k - 1] + _quad(self._psi_scalar, t[k - 1], t[k],
                                        self.quad_tol)
        self._cum = cum

    def _psi_scalar(self, t):
        return float(self.psi(t))

    def psi(self, t):
        """The density :math:`\\psi(t)`; accepts scalars or arrays."""
        a = np.abs(np.asarray(t, dtype=float))
        if self.kind == 'gauss':
            return _as_output(t, np.exp(self.c * a**2))
        logpsi = np.interp(a, self._t, self._logpsi)
        tail = a > self._t[-1]
        logpsi = np.where(
            tail, self._logpsi[-1] + self._tail_slope * (a - self._t[-1]),
            logpsi)
        return _as_output(t, np.exp(logpsi))

    def log_psi(self, t):
        return np.log(self.psi(t))

    def _Psi_abs(self, x):
        """:math:`\\Psi(x)` for scalar ``x >= 0``."""
        if self.kind == 'gauss':
            c = self.c
            if c == 0:
                return x
            elif c > 0:
                return math.sqrt(math.pi / (4 * c)) * erfi(math.sqrt(c) * x)
            return math.sqrt(math.pi / (4 * -c)) * erf(math.sqrt(-c) * x)
        k = int(np.searchsorted(self._t, x, side='right')) - 1
        return self._cum[k] + _quad(self._psi_scalar, self._t[k], x,
                                    self.quad_tol)

    def Psi(self, x):
        """:math:`\\Psi(x) = \\int_0^x \\psi`, odd in ``x``."""
        if self.kind == 'gauss':
            a = np.asarray(x, dtype=float)
            c = self.c
            if c == 0:
                out = a
            elif c > 0:
                out = np.sqrt(np.pi / (4 * c)) * erfi(np.sqrt(c) * a)
            else:
                out = np.sqrt(np.pi / (4 * -c)) * erf(np.sqrt(-c) * a)
            return _as_output(x, out)
        vals = [math.copysign(self._Psi_abs(abs(v)), v)
                for v in np.ravel(np.asarray(x, dtype=float))]
        return _as_output(x, np.reshape(vals, np.shape(x)))

    def _Psi_inv_abs(self, y):
        if y == 0:
            return 0.0
        if self.kind == 'gauss' and self.c == 0:
            return y
        if self.kind == 'gauss' and self.c < 0:
            total = math.sqrt(math.pi / (4 * -self.c))
            if y >= total:
                raise RangeError(
                    "y = {0} exceeds the half-line mass {1} of the density "
                    "exp({2} t^2)".format(y, total, self.c), target=y)
        # psi >= psi(0) for log-convex gauss kinds, so Psi(x) >= x psi(0)
        hi = y / float(self.psi(0.0)) if self.c >= 0 else 1.0
        hi = max(hi, 1e-300)
        return _invert_increasing(self._Psi_abs, y, 0.0, hi, what='Psi(x)')

    def Psi_inv(self, y):
        """:math:`\\Psi^{-1}(y)`, odd and increasing in ``y``."""
        vals = [math.copysign(self._Psi_inv_abs(abs(v)), v)
                for v in np.ravel(np.asarray(y, dtype=float))]
        return _as_output(y, np.reshape(vals, np.shape(y)))

    def config(self):
        cfg = OrderedDict([('kind', self.kind)])
        if self.kind == 'gauss':
            cfg['c'] = self.c
        else:
            cfg['samples'] = self.samples.tolist()
        if self.quad_tol != DEFAULT_QUAD_TOL:
            cfg['quad_tol'] = self.quad_tol
        return cfg

    def __repr__(self):
        return format_report("Density1D report", self.report)


def psi_primitive(d, x):
    """:math:`\\Psi(x)` to relative tolerance ``d.quad_tol``."""
    return d.Psi(x)


def psi_primitive_inv(d, y):
    """:math:`\\Psi^{-1}(y)` with :math:`|\\Psi(x) - y| \\le`
    ``quad_tol * max(1, |y|)``."""
    return d.Psi_inv(y)


def iso_fn_J(d, y):
    """:math:`J(y) = \\psi(\\Psi^{-1}(y))`."""
    return d.psi(d.Psi_inv(y))


def one_d_profile(d, m):
    """:math:`I_1(m) = 2J(m/2)`, perimeter of the centered interval of
    mass ``m``."""
    if np.any(np.asarray(m) < 0):
        raise DomainError("mass must be >= 0, got {0}".format(m))
    return 2 * iso_fn_J(d, np.asarray(m, dtype=float) / 2)


def log_convexity_check(d, t_max=3.0, num=601, tol=1e-12):
    """
    Midpoint convexity of :math:`\\log \\psi` on ``num`` points of
    ``[-t_max, t_max]``, over triples at separations 1, 2, 4, ... samples.

    :return: OrderedDict with ``convex``, ``violation`` (``max(0, worst)``),
        ``worst_margin`` (the largest value of
        :math:`\\log\\psi(t) - (\\log\\psi(t-s) + \\log\\psi(t+s))/2`),
        ``worst_at`` and the sampled range.
    """
    if t_max <= 0 or num < 3:
        raise ValueError("need t_max > 0 and num >= 3")
    t = np.linspace(-t_max, t_max, num)
    logpsi = np.log(np.atleast_1d(d.psi(t)))
    scale = np.maximum(1.0, np.abs(logpsi))
    worst = -np.inf
    worst_at = 0.0
    worst_rel = -np.inf
    k = 1
    while 2 * k < num:
        mid = logpsi[k:-k]
        avg = (logpsi[:-2 * k] + logpsi[2 * k:]) / 2
        margin = mid - avg
        i = int(np.argmax(margin))
        if margin[i] > worst:
            worst = float(margin[i])
            worst_at = float(t[k + i])
        worst_rel = max(worst_rel, float(np.max(margin / scale[k:-k])))
        k *= 2
    return OrderedDict([
        ('convex', bool(worst_rel <= tol)),
        ('violation', max(0.0, worst)),
        ('worst_margin', worst),
        ('worst_at', worst_at),
        ('t_max', float(t_max)),
        ('samples', int(num)),
    ])


class RadialDensity(object):

    def __init__(self, n=2, c=0.0, quad_tol=DEFAULT_QUAD_TOL):
        """
        The radial weight :math:`\\varphi(x) = e^{c|x|^2}` on
        :math:`\\mathbb{R}^n`.

        :param int n: dimension, ``n >= 2``
        :param float c: exponent, ``c >= 0``
        :param float quad_tol: relative tolerance for :math:`H` when no
            closed form is available
        """
        if int(n) != n or n < 2:
            raise ValueError("dimension must be an integer >= 2, got {0}".format(n))
        if c < 0:
            raise DomainError("c must be >= 0, got {0}".format(c))
        self.n = int(n)
        self.c = float(c)
        self.quad_tol = float(quad_tol)
        self.omega_n = unit_ball_volume(self.n)
        self.kind = 'gauss'

        closed = self.c == 0 or self.n in (2, 3)
        self.report = []
        new_report = []
        new_report.append("Radial density exp({0} |x|^2) in dimension".format(c))
        new_report.append("{0}; ball masses by {1}.".format(
            self.n, 'closed form' if closed else 'adaptive quadrature'))
        self.report.append(" ".join(new_report))

    def phi_r(self, r):
        return np.exp(self.c * np.asarray(r, dtype=float)**2)

    def weight(self, coords):
        """Density at points given as a sequence of coordinate arrays."""
        r2 = sum(np.asarray(x, dtype=float)**2 for x in coords)
        return np.exp(self.c * r2)

    def h(self, r):
        """Perimeter of the centered ball of radius ``r``."""
        r = np.asarray(r, dtype=float)
        return self.n * self.omega_n * np.exp(self.c * r**2) * r**(self.n - 1)

    def _H_quad(self, r):
        return _quad(lambda t: float(self.h(t)), 0.0, r, self.quad_tol)

    def _H_scalar(self, r, method='auto'):
        if r < 0:
            raise DomainError("radius must be >= 0, got {0}".format(r))
        if r == 0:
            return 0.0
        c, n = self.c, self.n
        if method == 'quad':
            return self._H_quad(r)
        if c == 0:
            return self.omega_n * r**n
        if n == 2:
            return math.pi * math.expm1(c * r * r) / c
        if n == 3:
            x = c * r * r
            if x < 1:
                # series of int_0^r t^2 exp(c t^2) dt
                term, total, k = 1.0, 1.0 / 3, 0
                while True:
                    k += 1
                    term *= x / k
                    add = term / (2 * k + 3)
                    total += add
                    if add < 1e-17 * total:
                        break
                return 4 * math.pi * r**3 * total
            sc = math.sqrt(c)
            prim = (r * math.exp(x) / (2 * c) -
                    math.sqrt(math.pi) * erfi(sc * r) / (4 * c * sc))
            return 4 * math.pi * prim
        return self._H_quad(r)

    def H(self, r, method='auto'):
        """:math:`\\mu(B_r)`; ``method='quad'`` forces quadrature."""
        vals = [self._H_scalar(v, method)
                for v in np.ravel(np.asarray(r, dtype=float))]
        return _as_output(r, np.reshape(vals, np.shape(r)))

    def _H_inv_scalar(self, m):
        if m < 0:
            raise DomainError("mass must be >= 0, got {0}".format(m))
        if m == 0:
            return 0.0
        c, n = self.c, self.n
        if c == 0:
            return (m / self.omega_n)**(1 / n)
        if n == 2:
            return math.sqrt(math.log1p(c * m / math.pi) / c)
        # exp(c r^2) >= 1 bounds the radius by the Lebesgue one
        hi = (m / self.omega_n)**(1 / n)
        return _invert_increasing(self._H_scalar, m, 0.0, hi, what='H(r)')

    def H_inv(self, m):
        """Radius of the centered ball of mass ``m``."""
        vals = [self._H_inv_scalar(v) for v in np.ravel(np.asarray(m, dtype=float))]
        return _as_output(m, np.reshape(vals, np.shape(m)))

    def I(self, m):
        """Isoperimetric profile :math:`h(H^{-1}(m))`."""
        if np.any(np.asarray(m) < 0):
            raise DomainError("mass must be >= 0, got {0}".format(m))
        return _as_output(m, self.h(self.H_inv(m)))

    def as_product(self):
        """Factor :math:`e^{c|x|^2} = e^{cx_1^2} e^{c|x'|^2}`."""
        return ProductDensity(Density1D('gauss', self.c, quad_tol=self.quad_tol),
                              rho={'kind': 'gauss', 'c': self.c}, n=self.n)

    def config(self):
        return OrderedDict([('kind', 'gauss'), ('c', self.c), ('n', self.n)])

    def __repr__(self):
        return format_report("RadialDensity report", self.report)


def radial_mass_H(d, r):
    return d.H(r)


def radial_mass_H_inv(d, m):
    return d.H_inv(m)


def iso_profile_I(d, m):
    return d.I(m)


class Profile(object):
    """A scalar profile on ``[0, inf)``: affine, quadratic or tabulated."""

    def __init__(self, kind='affine', coefficients=(0.0, 1.0), samples=None):
        self.kind = kind
        if kind in ('affine', 'quadratic'):
            coefficients = [float(a) for a in coefficients]
            expected = 2 if kind == 'affine' else 3
            if len(coefficients) != expected:
                raise ValueError("{0} profile needs {1} coefficients".format(
                    kind, expected))
            self.coefficients = coefficients
            self.samples = None
        elif kind == 'tabulated':
            samples = np.asarray(samples, dtype=float)
            if samples.ndim != 2 or samples.shape[1] != 2 or samples.shape[0] < 2:
                raise ValueError("tabulated profile needs (t, a) pairs")
            if samples[0, 0] != 0 or np.any(np.diff(samples[:, 0]) <= 0):
                raise ValueError("profile abscissae must increase from 0")
            self.samples = samples
            self.coefficients = None
        else:
            raise ValueError("Unknown profile kind {0!r}".format(kind))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind in ('affine', 'quadratic'):
            return sum(a * t**k for k, a in enumerate(self.coefficients))
        ts, a = self.samples[:, 0], self.samples[:, 1]
        slope = (a[-1] - a[-2]) / (ts[-1] - ts[-2])
        return np.where(t > ts[-1], a[-1] + slope * (t - ts[-1]),
                        np.interp(t, ts, a))

    def config(self):
        if self.kind == 'tabulated':
            return OrderedDict([('kind', 'tabulated'),
                                ('samples', self.samples.tolist())])
        return OrderedDict([('kind', self.kind),
                            ('coefficients', list(self.coefficients))])


class SingularRadialDensity(object):

    def __init__(self, n=2, a=None, quad_tol=DEFAULT_QUAD_TOL, t_max=10.0,
                 tol=1e-10):
        """
        The density :math:`|x|^{1-n} e^{a(|x|)}` with convex profile ``a``.

        :param int n: dimension, ``n >= 2``
        :param a: a :class:`Profile` or its configuration dict; default
            :math:`a(t) = t`
        :param float t_max: range on which convexity of ``a`` is checked
        """
        if int(n) != n or n < 2:
            raise ValueError("dimension must be an integer >= 2, got {0}".format(n))
        if a is None:
            a = Profile('affine', (0.0, 1.0))
        elif isinstance(a, dict):
            a = Profile(a.get('kind', 'affine'), a.get('coefficients', (0.0, 1.0)),
                        a.get('samples'))
        self.n = int(n)
        self.a = a
        self.quad_tol = float(quad_tol)
        self.omega_n = unit_ball_volume(self.n)
        self.kind = 'singular-radial'

        t = np.linspace(0, t_max, 401)
        vals = self.a(t)
        margin = vals[1:-1] - (vals[:-2] + vals[2:]) / 2
        worst = float(np.max(margin))
        if worst > tol * max(1.0, float(np.max(np.abs(vals)))):
            raise PreconditionError(
                "profile a is not convex on [0, {0}]: midpoint excess "
                "{1:.3g}".format(t_max, worst))

        self.report = []
        new_report = []
        new_report.append("Singular radial density |x|^(1-n) exp(a(|x|))")
        new_report.append("in dimension {0} with {1} profile a.".format(
            self.n, self.a.kind))
        self.report.append(" ".join(new_report))

    def weight(self, coords):
        r = np.sqrt(sum(np.asarray(x, dtype=float)**2 for x in coords))
        with np.errstate(divide='ignore'):
            return r**(1 - self.n) * np.exp(self.a(r))

    def ball_mass(self, R):
        """:math:`\\mu(B_R) = n\\omega_n \\int_0^R e^{a(t)} dt`."""
        if R < 0:
            raise DomainError("radius must be >= 0, got {0}".format(R))
        if self.a.kind == 'affine':
            a0, a1 = self.a.coefficients
            base = R if a1 == 0 else math.expm1(a1 * R) / a1
            return self.n * self.omega_n * math.exp(a0) * base
        return self.n * self.omega_n * _quad(
            lambda t: math.exp(float(self.a(t))), 0.0, R, self.quad_tol)

    def ball_radius(self, m):
        if m < 0:
            raise DomainError("mass must be >= 0, got {0}".format(m))
        if m == 0:
            return 0.0
        return _invert_increasing(self.ball_mass, m, 0.0, 1.0, what='mu(B_R)')

    def ball_perimeter(self, R):
        """:math:`n\\omega_n e^{a(R)}`, the same for every radius when
        ``a`` is constant."""
        return self.n * self.omega_n * math.exp(float(self.a(R)))

    def config(self):
        return OrderedDict([('kind', 'singular-radial'), ('n', self.n),
                            ('a', self.a.config())])

    def __repr__(self):
        return format_report("SingularRadialDensity report", self.report)


class ProductDensity(object):

    def __init__(self, psi, rho=None, n=2):
        """
        The product :math:`\\psi(x_1) \\rho(x')`.

        :param Density1D psi: factor along the first axis
        :param dict rho: ``{'kind': 'constant', 'value': v}``,
            ``{'kind': 'gauss', 'c': c}`` (:math:`e^{c|x'|^2}`) or
            ``{'kind': 'tabulated', 'samples': [(r, rho), ...]}``
            (radial in :math:`|x'|`, linear in :math:`\\log\\rho`)
        :param int n: dimension, 2 or more
        """
        if isinstance(psi, dict):
            psi = density_from_config(psi)
        if not isinstance(psi, Density1D):
            raise ValueError("psi must be a Density1D")
        rho = OrderedDict(rho or {'kind': 'constant', 'value': 1.0})
        kind = rho.get('kind')
        if kind == 'constant':
            if not rho.get('value', 1.0) > 0:
                raise ValueError("constant rho must be positive")
        elif kind == 'gauss':
            pass
        elif kind == 'tabulated':
            s = np.asarray(rho['samples'], dtype=float)
            if np.any(s[:, 1] <= 0):
                raise ValueError("rho samples must be positive")
            self._rho_t, self._rho_log = s[:, 0], np.log(s[:, 1])
        else:
            raise ValueError("Unknown rho kind {0!r}".format(kind))
        self.psi = psi
        self.rho_config = rho
        self.n = int(n)
        self.kind = 'product'
        self.report = ["Product density psi(x1) rho(x') with {0} psi and "
                       "{1} rho in dimension {2}.".format(psi.kind, kind, n)]

    def rho(self, coords_prime):
        r2 = sum(np.asarray(x, dtype=float)**2 for x in coords_prime)
        kind = self.rho_config['kind']
        if kind == 'constant':
            return np.full(np.shape(r2), float(self.rho_config.get('value', 1.0)))
        elif kind == 'gauss':
            return np.exp(float(self.rho_config['c']) * r2)
        return np.exp(np.interp(np.sqrt(r2), self._rho_t, self._rho_log))

    def weight(self, coords):
        coords = list(coords)
        return self.psi.psi(coords[0]) * self.rho(coords[1:])

    def config(self):
        return OrderedDict([('kind', 'product'), ('n', self.n),
                            ('psi', self.psi.config()),
                            ('rho', self.rho_config)])

    def __repr__(self):
        return format_report("ProductDensity report", self.report)


def steiner_factors(d):
    """The :class:`ProductDensity` Steiner operations work with."""
    if isinstance(d, ProductDensity):
        return d
    if isinstance(d, RadialDensity):
        return d.as_product()
    raise PreconditionError(
        "Steiner symmetrization needs a density of the form psi(x1) rho(x'); "
        "got {0}".format(type(d).__name__))


def density_from_config(cfg):
    """Build a density from its JSON configuration."""
    if isinstance(cfg, str):
        cfg = json.loads(cfg)
    kind = cfg.get('kind')
    quad_tol = cfg.get('quad_tol', DEFAULT_QUAD_TOL)
    if kind == 'gauss':
        if cfg.get('n', 1) >= 2:
            return RadialDensity(cfg['n'], cfg.get('c', 0.0), quad_tol)
        return Density1D('gauss', cfg.get('c', 0.0), quad_tol=quad_tol,
                         allow_concave=cfg.get('allow_concave', False))
    elif kind == 'tabulated':
        return Density1D('tabulated', samples=cfg['samples'], quad_tol=quad_tol)
    elif kind == 'singular-radial':
        return SingularRadialDensity(cfg.get('n', 2), cfg.get('a'), quad_tol)
    elif kind == 'product':
        psi = cfg.get('psi', {'kind': 'gauss', 'c': cfg.get('c', 0.0)})
        return ProductDensity(density_from_config(psi), cfg.get('rho'),
                              cfg.get('n', 2))
    raise ValueError(
        "config.density.kind must be one of 'gauss', 'tabulated', "
        "'singular-radial', 'product'; got {0!r}".format(kind))


def density_id(d):
    """Whitespace-free identifier, parseable by :func:`density_from_config`."""
    return json.dumps(d.config(), separators=(',', ':'), sort_keys=True)
