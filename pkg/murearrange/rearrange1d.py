#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# rearrange1d.py

"""

Exact weighted geometry on the line.

Sets are finite unions of open intervals (:class:`IntervalSet`); their
measure and perimeter with respect to :math:`d\\mu_1 = \\psi(x)\\,dx` are
evaluated at the endpoints through :math:`\\Psi` and :math:`\\psi`, so no grid
is involved and every tolerance reflects quadrature alone.

The symmetrization of :math:`M` is the centered interval :math:`(-a, a)`
with :math:`2\\Psi(a) = \\mu_1(M)`.  When :math:`\\log\\psi` is convex the
centered interval has the least perimeter among sets of its mass,

.. math::

    \\sum_i \\psi(a_i) + \\psi(b_i) \\ge 2 J(\\mu_1(M)/2),

and :func:`verify_iso_1d` reports both sides.

"""

from __future__ import division, print_function, absolute_import
import json
from collections import OrderedDict

import numpy as np

from murearrange.density import Density1D, log_convexity_check, one_d_profile
from murearrange.report import ComparisonReport, SuiteReport
from murearrange.util import (
    DomainError,
    ParameterError,
    PreconditionError,
    parallel_map,
)


class IntervalSet(object):

    def __init__(self, intervals=()):
        """
        A finite union of open intervals.

        Overlapping or touching intervals are merged, so the stored
        intervals satisfy :math:`b_i < a_{i+1}`.

        :param intervals: iterable of ``(a, b)`` pairs with ``a < b``
        """
        arr = np.asarray(list(intervals), dtype=float).reshape(-1, 2)
        if not np.all(np.isfinite(arr)):
            raise ValueError("interval endpoints must be finite")
        if np.any(arr[:, 0] >= arr[:, 1]):
            bad = arr[arr[:, 0] >= arr[:, 1]][0]
            raise ValueError(
                "interval ({0}, {1}) is empty; need a < b".format(*bad))
        arr = arr[np.argsort(arr[:, 0], kind='mergesort')]
        merged = []
        for a, b in arr:
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        self.intervals = np.array(merged, dtype=float).reshape(-1, 2)
        self.intervals.setflags(write=False)

    @property
    def a(self):
        return self.intervals[:, 0]

    @property
    def b(self):
        return self.intervals[:, 1]

    def __len__(self):
        return self.intervals.shape[0]

    def __iter__(self):
        return iter(tuple(map(float, row)) for row in self.intervals)

    def __eq__(self, other):
        return (isinstance(other, IntervalSet) and
                np.array_equal(self.intervals, other.intervals))

    def __ne__(self, other):
        return not self == other

    def is_empty(self):
        return len(self) == 0

    def dilate(self, r):
        """The parallel set :math:`M + B_r = \\{x : \\mathrm{dist}(x, M) < r\\}`."""
        if r < 0:
            raise ParameterError("dilation radius must be >= 0, got {0}".format(r))
        return IntervalSet(self.intervals + np.array([-r, r]))

    def contains(self, other):
        """True if every interval of ``other`` lies inside one of ours."""
        if other.is_empty():
            return True
        if self.is_empty():
            return False
        k = np.searchsorted(self.a, other.a, side='right') - 1
        ok = k >= 0
        kk = np.clip(k, 0, None)
        return bool(np.all(ok & (other.b <= self.b[kk])))

    def distance_to(self, x):
        """:math:`\\mathrm{dist}(x, \\bar M)` for an array of points."""
        x = np.asarray(x, dtype=float)
        if self.is_empty():
            return np.full(x.shape, np.inf)
        d = np.maximum(self.a[None, :] - x[..., None], x[..., None] - self.b[None, :])
        return np.maximum(np.min(d, axis=-1), 0.0)

    def to_json(self):
        return json.dumps(self.intervals.tolist())

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text))

    def __repr__(self):
        return "IntervalSet({0})".format(self.intervals.tolist())


def measure_1d(d, s):
    """:math:`\\sum_i \\Psi(b_i) - \\Psi(a_i)`."""
    if s.is_empty():
        return 0.0
    return float(np.sum(d.Psi(s.b) - d.Psi(s.a)))


def perimeter_1d(d, s):
    """:math:`\\sum_i \\psi(a_i) + \\psi(b_i)`."""
    if s.is_empty():
        return 0.0
    return float(np.sum(d.psi(s.a) + d.psi(s.b)))


def symmetrize_1d(d, s):
    """The centered interval of the same :math:`\\mu_1`-mass."""
    m = measure_1d(d, s)
    if m == 0:
        return IntervalSet()
    a = d.Psi_inv(m / 2)
    return IntervalSet([(-a, a)])


def minkowski_content_1d(d, s, r):
    """Difference quotient :math:`(\\mu_1(M_r) - \\mu_1(M)) / r`."""
    if not r > 0:
        raise ParameterError("r must be > 0, got {0}".format(r))
    return (measure_1d(d, s.dilate(r)) - measure_1d(d, s)) / r


def hausdorff_distance(s, t):
    """Hausdorff distance between the closures of two interval unions.

    The distance to a union of intervals is piecewise linear, so each
    supremum is attained at an endpoint or at the midpoint of a gap."""
    if s.is_empty() and t.is_empty():
        return 0.0
    if s.is_empty() or t.is_empty():
        return np.inf

    def one_sided(p, q):
        candidates = [p.a, p.b]
        if len(q) > 1:
            mids = (q.b[:-1] + q.a[1:]) / 2
            inside = (p.distance_to(mids) == 0)
            candidates.append(mids[inside])
        return float(np.max(q.distance_to(np.concatenate(candidates))))

    return max(one_sided(s, t), one_sided(t, s))


def random_interval_set(rng, max_components=8, lo=-3.0, hi=3.0):
    """Union of 1 to ``max_components`` intervals with sorted uniform
    endpoints in ``[lo, hi]``."""
    k = int(rng.integers(1, max_components + 1))
    ends = np.sort(rng.uniform(lo, hi, 2 * k))
    return IntervalSet(ends.reshape(k, 2))


def random_subset(rng, s):
    """A union of random sub-intervals, one per interval of ``s``."""
    u = np.sort(rng.uniform(0.05, 0.95, (len(s), 2)), axis=1)
    width = s.b - s.a
    return IntervalSet(np.column_stack([s.a + u[:, 0] * width,
                                        s.a + u[:, 1] * width]))


def verify_iso_1d(d, s, tol=1e-9, convexity=None):
    """
    Compare :math:`P_{\\mu_1}(M)` with :math:`I_1(\\mu_1(M))`.

    :param Density1D d: log-convex density
    :param IntervalSet s: nonempty set
    :param float tol: relative tolerance, scaled by ``max(1, rhs)``
    :param convexity: result of :func:`log_convexity_check` if already known
    :return: :class:`ComparisonReport` with lhs the perimeter of ``s``
    """
    if convexity is None:
        convexity = log_convexity_check(d)
    if not convexity['convex']:
        raise PreconditionError(
            "log_convexity_check failed: log psi violates midpoint convexity "
            "by {0:.3g} at t = {1:.3g}, so centered intervals need not "
            "minimize perimeter".format(convexity['violation'],
                                        convexity['worst_at']))
    if s.is_empty():
        raise DomainError("the isoperimetric comparison needs a nonempty set")
    m = measure_1d(d, s)
    lhs = perimeter_1d(d, s)
    rhs = float(one_d_profile(d, m))
    metadata = OrderedDict([
        ('density', d.config()),
        ('intervals', s.intervals.tolist()),
        ('measure', m),
        ('log_convexity_violation', convexity['violation']),
    ])
    return ComparisonReport('verify_iso_1d', lhs, rhs,
                            tolerance=tol * max(1.0, rhs), metadata=metadata)


def verify_parallel_containment_1d(d, s, r, tol=1e-9):
    """:math:`\\mu_1((M_r)^*) \\ge \\mu_1((M^*)_r)` for interval sets."""
    lhs = measure_1d(d, s.dilate(r))
    rhs = measure_1d(d, symmetrize_1d(d, s).dilate(r))
    return ComparisonReport(
        'parallel_containment_1d', lhs, rhs, tolerance=tol * max(1.0, rhs),
        metadata=OrderedDict([('density', d.config()), ('r', r),
                              ('intervals', s.intervals.tolist())]))


def _iso1d_case(args):
    d, convexity, s, sub, radii, equality_deficit, equality_distance = args
    reports = []
    iso = verify_iso_1d(d, s, convexity=convexity)
    reports.append(iso)

    m = iso.metadata['measure']
    m_sym = measure_1d(d, symmetrize_1d(d, s))
    reports.append(ComparisonReport(
        'measure_preservation_1d', m_sym, m, tolerance=1e-9 * max(1.0, m),
        relation='==', metadata=OrderedDict([('intervals', s.intervals.tolist())])))

    if d.kind == 'gauss' and d.c > 0 and iso.deficit < equality_deficit:
        dist = hausdorff_distance(s, symmetrize_1d(d, s))
        reports.append(ComparisonReport(
            'equality_case_1d', dist, equality_distance, relation='<=',
            metadata=OrderedDict([('deficit', iso.deficit),
                                  ('intervals', s.intervals.tolist())])))

    nested = symmetrize_1d(d, s).contains(symmetrize_1d(d, sub))
    reports.append(ComparisonReport(
        'monotonicity_1d', 1.0 if nested else 0.0, 1.0, relation='==',
        metadata=OrderedDict([('outer', s.intervals.tolist()),
                              ('inner', sub.intervals.tolist())])))

    for r in radii:
        reports.append(verify_parallel_containment_1d(d, s, r))
    return reports


def iso1d_suite(cs=(0.0, 0.5, 1.0), cases=10000, seed=0,
                radii=(0.05, 0.1, 0.3), equality_deficit=1e-6,
                equality_distance=1e-4, threads=None):
    """
    Random-corpus verification of the one-dimensional results: the
    isoperimetric inequality, measure preservation, the equality case for
    strictly log-convex densities, monotonicity on nested pairs and
    parallel-set containment.

    Sets are drawn sequentially from ``numpy.random.default_rng(seed)``
    before any evaluation, so the outcome does not depend on ``threads``.
    """
    rng = np.random.default_rng(seed)
    jobs = []
    for c in cs:
        d = Density1D('gauss', c)
        convexity = log_convexity_check(d)
        for _ in range(cases):
            s = random_interval_set(rng)
            jobs.append((d, convexity, s, random_subset(rng, s), radii,
                         equality_deficit, equality_distance))
    # centered intervals exercise the equality case at every c
    for c in cs:
        d = Density1D('gauss', c)
        convexity = log_convexity_check(d)
        for a in (0.1, 0.5, 1.0, 2.0):
            s = IntervalSet([(-a, a)])
            jobs.append((d, convexity, s, IntervalSet([(-a / 2, a / 3)]),
                         radii, equality_deficit, equality_distance))

    cases_out = []
    for reports in parallel_map(_iso1d_case, jobs, threads):
        cases_out.extend(reports)
    metadata = OrderedDict([('c', list(cs)), ('cases', cases), ('seed', seed),
                            ('radii', list(radii))])
    return SuiteReport('iso1d', cases_out, metadata)
