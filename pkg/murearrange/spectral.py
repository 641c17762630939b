#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# spectral.py

"""

Rayleigh quotients for :math:`d\\mu = e^{c|x|^2} dx` and the harmonic
oscillator.

For :math:`c > 0` the weighted Poincaré constant on :math:`\\mathbb{R}^n` is

.. math::

    \\inf_u \\frac{\\int |\\nabla u|^2 \\, d\\mu}{\\int u^2 \\, d\\mu} = 2cn,

attained in the limit by :math:`u = e^{-c|x|^2}`.  The substitution
:math:`v = u e^{c|x|^2/2}` turns the quotient into

.. math::

    Q(u) = 2cn + \\frac{\\int |\\nabla v|^2 + c^2|x|^2 v^2 - cn v^2 \\, dx}
                       {\\int v^2 \\, dx},

the quadratic form of :math:`-\\Delta + c^2|x|^2` shifted by its ground
state energy :math:`cn`; the spectrum is :math:`(2k - 2 + n)c`.

Test functions are truncated by a :math:`C^1` cutoff equal to 1 for
:math:`|x| \\le 0.7L` and 0 for :math:`|x| \\ge 0.9L`.

"""

from __future__ import division, print_function, absolute_import
import math
import time
from collections import OrderedDict

import numpy as np
import six

from murearrange.density import RadialDensity
from murearrange.gridsets import GridSpec
from murearrange.rearrangefn import GridFunction, gradient_norm, random_bump
from murearrange.report import ComparisonReport, SuiteReport
from murearrange.util import (DomainError, ParameterError,
                              PreconditionError, format_report)


def cutoff(spec, inner=0.7, outer=0.9):
    """Smoothstep in :math:`|x|` from 1 at ``inner*L`` to 0 at ``outer*L``."""
    r = np.sqrt(sum(x**2 for x in spec.centers()))
    t = np.clip((r - inner * spec.L) / ((outer - inner) * spec.L), 0.0, 1.0)
    return np.broadcast_to(1 - t**2 * (3 - 2 * t), spec.shape)


def truncated_gaussian(spec, density, a):
    """:math:`e^{-a|x|^2}` times :func:`cutoff`."""
    r2 = sum(x**2 for x in spec.centers())
    values = np.exp(-a * r2) * cutoff(spec)
    return GridFunction(spec, values, density,
                        report=["Gaussian exp(-{0} |x|^2) with cutoff.".format(a)])


def weighted_norm(u, q):
    """:math:`\\|u\\|_{q,\\mu}`."""
    return math.fsum((np.abs(u.values)**q * u.cell_masses()).ravel())**(1 / q)


def gradient_weighted_norm(u, p):
    """:math:`\\|\\nabla u\\|_{p,\\mu}`."""
    return math.fsum((gradient_norm(u)**p * u.cell_masses()).ravel())**(1 / p)


def rayleigh_quotient(u, d=None):
    """:math:`\\|\\nabla u\\|_{2,\\mu}^2 / \\|u\\|_{2,\\mu}^2` with central
    differences; ``d`` overrides the density of ``u``."""
    if d is not None and d is not u.density:
        u = GridFunction(u.spec, u.values, d, compact=u.compact, report=u.report)
    if not u.compact:
        raise PreconditionError("the Rayleigh quotient needs a compactly supported function")
    den = weighted_norm(u, 2)**2
    if den == 0:
        raise DomainError("the Rayleigh quotient of the zero function is undefined")
    return gradient_weighted_norm(u, 2)**2 / den


def oscillator_parts(v, c):
    """Lebesgue integrals :math:`\\int |\\nabla v|^2`,
    :math:`c^2 \\int |x|^2 v^2` and :math:`\\int v^2`."""
    vol = v.spec.cell_volume
    r2 = np.broadcast_to(sum(x**2 for x in v.spec.centers()), v.spec.shape)
    grad = math.fsum((gradient_norm(v)**2).ravel()) * vol
    potential = c**2 * math.fsum((r2 * v.values**2).ravel()) * vol
    mass = math.fsum((v.values**2).ravel()) * vol
    return grad, potential, mass


def oscillator_form(v, c, n=None):
    """:math:`\\int |\\nabla v|^2 + c^2|x|^2 v^2 - cn v^2 \\, dx`."""
    n = v.spec.n if n is None else n
    grad, potential, mass = oscillator_parts(v, c)
    return grad + potential - c * n * mass


def oscillator_eigenvalue(k, c, n):
    """:math:`(2k - 2 + n)c`, ``k = 1, 2, ...``."""
    if int(k) != k or k < 1:
        raise ParameterError("k must be a positive integer, got {0}".format(k))
    return (2 * k - 2 + n) * c


def to_oscillator(u, c):
    """:math:`v = u e^{c|x|^2/2}` as an unweighted function."""
    r2 = sum(x**2 for x in u.spec.centers())
    values = u.values * np.exp(c * r2 / 2)
    return GridFunction(u.spec, values, RadialDensity(u.spec.n, 0.0),
                        compact=u.compact,
                        report=u.report + ["Substitute v = u exp({0} |x|^2 / 2).".format(c)])


def admissible_range(n, p):
    """``(q_min, q_max)`` for the weighted Sobolev inequality."""
    if p < 1:
        raise ParameterError("p must be >= 1, got {0}".format(p))
    if p < n:
        return p, n * p / (n - p)
    return p, np.inf


class RayleighReport(object):

    def __init__(self, quotient, function_id, spec, c, n):
        """
        One Rayleigh quotient against :math:`2cn`.

        :param float quotient: the measured quotient
        :param str function_id: test-function label
        :param GridSpec spec: the grid
        """
        if quotient < 0:
            raise ValueError("a Rayleigh quotient is >= 0, got {0}".format(quotient))
        self.quotient = float(quotient)
        self.function_id = function_id
        self.spec = spec
        self.c = float(c)
        self.n = int(n)
        self.target = 2 * self.c * self.n

    @property
    def relative_gap(self):
        if self.target == 0:
            return np.inf
        return (self.quotient - self.target) / self.target

    def to_comparison(self, tol=0.02, relation='>='):
        return ComparisonReport(
            'rayleigh', self.quotient, self.target, tolerance=tol * self.target,
            relation=relation, metadata=self.to_dict())

    def to_dict(self):
        return OrderedDict([('function_id', self.function_id),
                            ('quotient', self.quotient),
                            ('target', self.target),
                            ('relative_gap', self.relative_gap),
                            ('c', self.c), ('n', self.n),
                            ('grid', self.spec.config())])

    def __repr__(self):
        return format_report("Rayleigh report", [
            "{0}: quotient {1:.6g} against 2cn = {2:.6g}".format(
                self.function_id, self.quotient, self.target)])


def sobolev_corpus(spec, density, bumps=100, seed=0, gaussians=(0.5, 1.0, 2.0)):
    """``(function_id, GridFunction)`` pairs: truncated Gaussians
    :math:`e^{-a c|x|^2}` and random bumps drawn from ``seed``."""
    corpus = []
    scale = density.c if density.c > 0 else 1.0
    for a in gaussians:
        corpus.append(("gaussian-{0}".format(a), truncated_gaussian(spec, density, a * scale)))
    rng = np.random.default_rng(seed)
    for k in range(bumps):
        corpus.append(("bump-{0}".format(k), random_bump(rng, spec, density)))
    return corpus


class SobolevSurvey(object):

    def __init__(self, density, p, q, corpus):
        """
        Empirical minimum of :math:`\\|\\nabla u\\|_{p,\\mu} / \\|u\\|_{q,\\mu}`.

        :param RadialDensity density: the weight
        :param float p: gradient exponent
        :param float q: function exponent, admissible for ``p`` and ``n``
        :param corpus: ``(function_id, GridFunction)`` pairs
        """
        q_min, q_max = admissible_range(density.n, p)
        if not q_min <= q <= q_max:
            raise ParameterError(
                "q = {0} is outside the admissible range [{1}, {2}] for p = {3} "
                "in dimension {4}".format(q, q_min, q_max, p, density.n))
        t0 = time.time()
        self.density = density
        self.p = float(p)
        self.q = float(q)
        self.rows = []
        for function_id, u in corpus:
            if u.density is not density:
                u = GridFunction(u.spec, u.values, density, compact=u.compact)
            ratio = gradient_weighted_norm(u, p) / weighted_norm(u, q)
            self.rows.append((function_id, self.p, self.q, ratio))

        self.report = []
        new_report = []
        new_report.append("Sobolev ratio survey for p = {0}, q = {1}".format(p, q))
        new_report.append("over {0} functions; minimum {1:.6g} at {2};".format(
            len(self.rows), self.minimum, self.argmin))
        new_report.append("it took {0:.1f} ms.".format(1e3 * (time.time() - t0)))
        self.report.append(" ".join(new_report))

    @property
    def minimum(self):
        return min(r[3] for r in self.rows)

    @property
    def argmin(self):
        return min(self.rows, key=lambda r: r[3])[0]

    def checks(self, tol=0.02):
        """The minimum is positive; for ``p = q = 2`` its square is at least
        :math:`2cn (1 - tol)`."""
        metadata = OrderedDict([('density', self.density.config()),
                                ('p', self.p), ('q', self.q),
                                ('argmin', self.argmin)])
        out = [ComparisonReport('sobolev_positive', self.minimum,
                                np.finfo(float).tiny, relation='>=',
                                metadata=metadata)]
        if self.p == 2 and self.q == 2:
            target = 2 * self.density.c * self.density.n
            out.append(ComparisonReport('sobolev_best_constant', self.minimum**2,
                                        target, tolerance=tol * target,
                                        relation='>=', metadata=metadata))
        return out

    def to_csv(self, dest):
        """Rows ``function_id, p, q, ratio`` to a path or handle."""
        text = "function_id,p,q,ratio\n" + "".join(
            "{0},{1!r},{2!r},{3!r}\n".format(*row) for row in self.rows)
        if isinstance(dest, six.string_types):
            with open(dest, 'w') as f:
                f.write(text)
        else:
            dest.write(text)

    def to_dict(self):
        return OrderedDict([('density', self.density.config()), ('p', self.p),
                            ('q', self.q), ('functions', len(self.rows)),
                            ('minimum', self.minimum), ('argmin', self.argmin)])

    def __repr__(self):
        return format_report("Sobolev survey report", self.report)


def sobolev_ratio_survey(d, p, q, corpus=None, spec=None, bumps=100, seed=0):
    """
    :class:`SobolevSurvey` over ``corpus``, or over :func:`sobolev_corpus`
    on ``spec`` (default ``n = d.n``, ``L = 4``, ``N = 256``).
    """
    if corpus is None:
        spec = GridSpec(d.n, 4.0, 256) if spec is None else spec
        corpus = sobolev_corpus(spec, d, bumps=bumps, seed=seed)
    return SobolevSurvey(d, p, q, corpus)


def rayleigh_suite(c=1.0, n=2, L=4.0, N=512, bumps=100, seed=0, tol=0.02,
                   form_tol=0.005):
    """
    Best constant and oscillator form checks.

    The truncated Gaussian must give :math:`2cn` within ``tol``; every
    random bump a quotient of at least :math:`2cn(1 - tol)`.  The
    oscillator form of the ground state vanishes within ``form_tol`` of
    its gradient term and is never below ``-form_tol`` times its positive
    part.
    """
    spec = GridSpec(n, L, N)
    density = RadialDensity(n, c)
    cases = []

    gauss = truncated_gaussian(spec, density, c)
    cases.append(RayleighReport(rayleigh_quotient(gauss), 'gaussian', spec, c, n)
                 .to_comparison(tol, relation='=='))
    q1 = rayleigh_quotient(gauss)
    scaled = gauss.derived(3.0 * gauss.values, "Scale by 3.")
    cases.append(ComparisonReport(
        'rayleigh_homogeneity', rayleigh_quotient(scaled), q1,
        tolerance=1e-12 * q1, relation='==', metadata=OrderedDict([('scale', 3.0)])))

    ground = to_oscillator(gauss, c)
    grad, potential, mass = oscillator_parts(ground, c)
    cases.append(ComparisonReport(
        'oscillator_ground_state', oscillator_form(ground, c, n), 0.0,
        tolerance=form_tol * grad, relation='==',
        metadata=OrderedDict([('c', c), ('n', n), ('grid', spec.config()),
                              ('eigenvalue', oscillator_eigenvalue(1, c, n))])))

    rng = np.random.default_rng(seed)
    for k in range(bumps):
        u = random_bump(rng, spec, density)
        cases.append(RayleighReport(rayleigh_quotient(u), 'bump-{0}'.format(k),
                                    spec, c, n).to_comparison(tol))
        v = to_oscillator(u, c)
        grad, potential, mass = oscillator_parts(v, c)
        cases.append(ComparisonReport(
            'oscillator_form', grad + potential - c * n * mass, 0.0,
            tolerance=form_tol * (grad + potential), relation='>=',
            metadata=OrderedDict([('function_id', 'bump-{0}'.format(k)),
                                  ('c', c), ('n', n)])))
    return SuiteReport('rayleigh', cases, OrderedDict([
        ('c', c), ('n', n), ('grid', spec.config()), ('bumps', bumps),
        ('seed', seed), ('tol', tol), ('form_tol', form_tol)]))
