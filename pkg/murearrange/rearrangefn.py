#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# rearrangefn.py

"""

Rearrangement of nonnegative grid functions.

A :class:`GridFunction` is a multiset of *atoms* ``(cell mass, value)``.
Its decreasing rearrangement in mass coordinates,

.. math::

    \\tilde u(s) = \\inf\\{t : m_u(t) \\le s\\}, \\qquad
    m_u(t) = \\mu(\\{u > t\\}),

is a right-continuous step function held by :class:`LayerProfile`, together
with the piecewise-linear primitive :math:`U(s) = \\int_0^s \\tilde u`.

Symmetrized functions are built from atoms, never from interpolated level
sets.  Target cells are taken in order of increasing distance (to the
origin for Schwarz, to the hyperplane :math:`x_1 = 0` for Steiner); with
:math:`S_k` the cumulative target mass, target :math:`k` receives the atom
value :math:`\\tilde u((S_{k-1} + S_k)/2)` found at the middle of its own
mass interval.  Every value of a symmetral is therefore a value of
:math:`u`, so :math:`\\varphi(u)^* = \\varphi(u^*)` exactly for increasing
:math:`\\varphi` with :math:`\\varphi(0) = 0`; the order of functions and
the sup-norm distance are kept exactly, and every distribution function
moves by at most one cell group of mass per level.  Steiner targets are
the symmetric cell pairs of each column, so the result is even in
:math:`x_1`; Schwarz targets are single cells ordered by :math:`|x|` and
then by index.

"""

from __future__ import division, print_function, absolute_import
import math
import time
from collections import OrderedDict

import numpy as np
import six
from scipy import ndimage

from murearrange.density import RadialDensity, steiner_factors
from murearrange.gridsets import GridSpec, cell_weights
from murearrange.report import ComparisonReport, SuiteReport
from murearrange.util import (
    ParameterError,
    PreconditionError,
    WindowError,
    format_report,
    parallel_map,
)


class GridFunction(object):

    def __init__(self, spec, values, density, compact=True, report=None):
        """
        A nonnegative function sampled at cell centers.

        :param GridSpec spec: the lattice
        :param values: one value per cell, ``>= 0``
        :param density: RadialDensity or ProductDensity
        :param bool compact: declare the support interior to the window;
            checked
        :param list report: history of the operations that produced it
        """
        values = np.array(values, dtype=float)
        if values.shape != spec.shape:
            raise ValueError("values shape {0} does not match grid {1}".format(
                values.shape, spec.shape))
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")
        if np.any(values < 0):
            raise ValueError("values must be >= 0; minimum is {0}".format(
                values.min()))
        if compact and np.any(values[spec.boundary_mask()] > 0):
            raise WindowError(
                "function flagged compact is nonzero on the window boundary")
        self.spec = spec
        self.values = values
        self.values.setflags(write=False)
        self.density = density
        self.compact = bool(compact)
        self.report = list(report or [])
        self._weights = None

    @property
    def weights(self):
        if self._weights is None:
            self._weights = cell_weights(self.spec, self.density)
            self._weights.setflags(write=False)
        return self._weights

    def cell_masses(self):
        return self.weights * self.spec.cell_volume

    def derived(self, values, sentence, compact=None):
        new = GridFunction(self.spec, values, self.density,
                           compact=self.compact if compact is None else compact,
                           report=self.report + [sentence])
        new._weights = self._weights
        return new

    def apply(self, fcn, name):
        """Compose with a monotone map, ``fcn(u)``."""
        return self.derived(fcn(self.values), "Apply {0}.".format(name))

    def integral(self, fcn=None):
        """:math:`\\int f(u) \\, d\\mu`, with ``f`` the identity by default."""
        v = self.values if fcn is None else fcn(self.values)
        return math.fsum((v * self.cell_masses()).ravel())

    @classmethod
    def from_function(cls, spec, density, fcn, compact=True, sentence=None):
        """Sample ``fcn(coords)`` at cell centers."""
        values = np.broadcast_to(fcn(spec.centers()), spec.shape)
        return cls(spec, values, density, compact=compact,
                   report=[sentence or "Sampled function on {0}.".format(spec)])

    @classmethod
    def from_set(cls, s):
        """Occupancy of a :class:`GridSet` as a function."""
        return cls(s.spec, s.occ, s.density,
                   report=s.report + ["Indicator function of the set."])

    @classmethod
    def radial(cls, spec, density, profile, compact=True):
        """:math:`u(x) = f(|x|)`."""
        return cls.from_function(
            spec, density, lambda c: profile(np.sqrt(sum(x**2 for x in c))),
            compact=compact, sentence="Radial function on {0}.".format(spec))

    def __repr__(self):
        return format_report("GridFunction report", self.report)


class LayerProfile(object):

    def __init__(self, values, masses):
        """
        Decreasing rearrangement of positive atoms.

        :param values: atom values (any order, positive)
        :param masses: atom masses
        """
        values = np.asarray(values, dtype=float).ravel()
        masses = np.asarray(masses, dtype=float).ravel()
        keep = values > 0
        values, masses = values[keep], masses[keep]
        levels, inverse = np.unique(values, return_inverse=True)
        level_mass = np.bincount(inverse.ravel(), weights=masses,
                                 minlength=levels.size)
        self.values = levels[::-1].copy()
        self.masses = level_mass[::-1].copy()
        self.cumulative = np.cumsum(self.masses)
        self.primitive = np.cumsum(self.values * self.masses)
        self.total = float(self.cumulative[-1]) if self.values.size else 0.0

    def __call__(self, s):
        """:math:`\\tilde u(s)`, right-continuous, 0 beyond the total mass."""
        s = np.asarray(s, dtype=float)
        idx = np.searchsorted(self.cumulative, s, side='right')
        padded = np.concatenate([self.values, [0.0]])
        out = padded[idx]
        return float(out) if out.ndim == 0 else out

    def U(self, s):
        """:math:`\\int_0^s \\tilde u`, piecewise linear."""
        return np.interp(s, np.concatenate([[0.0], self.cumulative]),
                         np.concatenate([[0.0], self.primitive]))

    def distribution(self, t):
        """:math:`m_u(t) = \\mu(\\{u > t\\})`."""
        count = np.searchsorted(-self.values, -np.asarray(t, dtype=float),
                                side='left')
        padded = np.concatenate([[0.0], self.cumulative])
        out = padded[count]
        return float(out) if np.ndim(out) == 0 else out

    def integral(self, fcn=None):
        """:math:`\\int_0^\\infty f(\\tilde u(s)) \\, ds` over the atoms."""
        v = self.values if fcn is None else fcn(self.values)
        return math.fsum(v * self.masses)

    def breakpoints(self):
        return np.column_stack([self.values, self.cumulative])

    def to_csv(self, dest):
        """Write ``value, cumulative_mass`` rows to a path or handle."""
        text = "value,cumulative_mass\n" + "".join(
            "{0!r},{1!r}\n".format(float(v), float(m))
            for v, m in self.breakpoints())
        if isinstance(dest, six.string_types):
            with open(dest, 'w') as f:
                f.write(text)
        else:
            dest.write(text)


def layer_profile(u):
    """The :class:`LayerProfile` of ``u``."""
    return LayerProfile(u.values, u.cell_masses())


def distribution_fn(u, t):
    """:math:`m_u(t)` summed directly over the cells with ``u > t``."""
    masses = u.cell_masses()
    t = np.asarray(t, dtype=float)
    if t.ndim == 0:
        return math.fsum(masses[u.values > t])
    return np.array([math.fsum(masses[u.values > tk]) for tk in t])


def distribution_fn_slice(u, index, t):
    """:math:`\\mu_1(\\{u(\\cdot, x') > t\\})` along axis 0 at ``x'`` given by
    the remaining indices ``index``."""
    psi = steiner_factors(u.density).psi
    index = (index,) if np.ndim(index) == 0 else tuple(index)
    column = u.values[(slice(None),) + index]
    weights = psi.psi(u.spec.axis_centers()) * u.spec.delta
    return math.fsum(weights[column > t])


def rearranged_atoms(values, masses, targets):
    """:math:`\\tilde u` at the middle of each of the consecutive target
    masses."""
    S = np.cumsum(targets)
    return np.asarray(LayerProfile(values, masses)(S - 0.5 * targets))


def schwarz_symmetrize_fn(u, method='atoms'):
    """
    :math:`u^\\star(x) = \\tilde u(H(|x|))`.

    :param str method: ``'atoms'`` samples :math:`\\tilde u` at the middle
        of each cell's mass interval; ``'formula'`` evaluates the formula at
        cell centers with the continuum :math:`H`.
    """
    if not isinstance(u.density, RadialDensity):
        raise PreconditionError("Schwarz symmetrization needs a RadialDensity")
    t0 = time.time()
    spec = u.spec
    if method == 'formula':
        profile = layer_profile(u)
        r = np.sqrt(sum(x**2 for x in spec.centers()))
        new = profile(u.density.H(np.broadcast_to(r, spec.shape)))
    elif method == 'atoms':
        key = np.broadcast_to(spec.radius_key(), spec.shape).ravel()
        order = np.argsort(key, kind='mergesort')
        masses = u.cell_masses().ravel()
        atoms = rearranged_atoms(u.values.ravel(), masses, masses[order])
        new = np.empty(atoms.size)
        new[order] = atoms
        new = new.reshape(spec.shape)
    else:
        raise ValueError("method must be 'atoms' or 'formula', got {0!r}".format(method))
    new = np.maximum(new, 0.0)
    if u.compact and np.any(new[spec.boundary_mask()] > 0):
        raise WindowError("the Schwarz symmetral reaches the window boundary")
    sentence = ("Schwarz symmetrization ({0}); it took {1:.1f} ms.".format(
        method, 1e3 * (time.time() - t0)))
    return u.derived(new, sentence)


def steiner_symmetrize_fn(u):
    """Symmetric decreasing rearrangement of every line parallel to
    :math:`x_1`, with respect to :math:`\\mu_1`."""
    factors = steiner_factors(u.density)
    t0 = time.time()
    spec = u.spec
    N = spec.N
    psi_cells = factors.psi.psi(spec.axis_centers())
    upper = np.arange(N // 2, N)
    lower = N // 2 - 1 - np.arange(N // 2)
    targets = 2 * psi_cells[upper]
    cols = u.values.reshape(N, -1)
    new = np.zeros_like(cols)
    for j in range(cols.shape[1]):
        column = cols[:, j]
        if not np.any(column > 0):
            continue
        atoms = rearranged_atoms(column, psi_cells, targets)
        new[upper, j] = atoms
        new[lower, j] = atoms
    new = new.reshape(spec.shape)
    if u.compact and np.any(new[spec.boundary_mask()] > 0):
        raise WindowError("the Steiner symmetral reaches the window boundary")
    sentence = ("Steiner symmetrization along x1 over {0} lines; it took "
                "{1:.1f} ms.".format(cols.shape[1], 1e3 * (time.time() - t0)))
    return u.derived(new, sentence)


def symmetrize_fn(u, mode):
    if mode == 'schwarz':
        return schwarz_symmetrize_fn(u)
    elif mode == 'steiner':
        return steiner_symmetrize_fn(u)
    raise ValueError("mode must be 'schwarz' or 'steiner', got {0!r}".format(mode))


def _metadata(u, **extra):
    metadata = OrderedDict([('density', u.density.config()),
                            ('grid', u.spec.config())])
    metadata.update(extra)
    return metadata


def thresholds(u, count=64):
    """``count`` equispaced levels strictly inside ``(0, max u)``."""
    top = float(u.values.max())
    return top * np.arange(1, count + 1) / (count + 1)


def equimeasurability(u, w, count=64, cells=3, mode='schwarz'):
    """Largest gap between :math:`m_u` and :math:`m_w` over ``count``
    thresholds, against ``cells`` maximal cell masses of the joint
    support."""
    t = thresholds(u, count)
    gap = np.max(np.abs(distribution_fn(u, t) - distribution_fn(w, t))) if t.size else 0.0
    support = (u.values > 0) | (w.values > 0)
    cell = float(u.cell_masses()[support].max()) if np.any(support) else 0.0
    return ComparisonReport('equimeasurability', gap, 0.0, tolerance=cells * cell,
                            relation='<=',
                            metadata=_metadata(u, thresholds=count, mode=mode,
                                               cell_mass=cell))


def sampling_tolerance(u, us, mode, fcn=None):
    """
    Bound on :math:`|\\int f(u^{sym}) - \\int f(u)|` for increasing ``f``
    with :math:`f(0) = 0`.

    Sampling :math:`\\tilde u` once per target moves each integral by at
    most the oscillation of :math:`f(\\tilde u)` over the target's mass
    interval times its mass; the oscillations add up to :math:`f(\\max u)`.
    Steiner sums this over the lines; the targets are the cell pairs of the
    line's symmetral support and the next pair outward.
    """
    f = (lambda x: x) if fcn is None else fcn
    masses = u.cell_masses()
    n, N = u.spec.n, u.spec.N
    if mode == 'steiner':
        structure = np.ones((3,) + (1,) * (n - 1), dtype=bool)
        near = ndimage.binary_dilation(us.values > 0, structure=structure)
        near[N // 2 - 1] = True
        near[N // 2] = True
        top = f(u.values.max(axis=0))
        pair = 2 * np.where(near, masses, 0.0).max(axis=0)
        return math.fsum((top * pair).ravel())
    structure = ndimage.generate_binary_structure(n, n)
    near = ndimage.binary_dilation(us.values > 0, structure=structure,
                                   iterations=2)
    if not np.any(near):
        near = np.zeros(u.spec.shape, dtype=bool)
        near[(slice(N // 2 - 1, N // 2 + 1),) * n] = True
    return float(f(u.values.max())) * float(masses[near].max())


def lipschitz_constant(u):
    """Largest difference quotient between neighbouring cells, times
    :math:`\\sqrt{n}`."""
    steps = [np.max(np.abs(np.diff(u.values, axis=k))) for k in range(u.spec.n)]
    return math.sqrt(u.spec.n) * float(max(steps)) / u.spec.delta


def modulus_check(u, us, t, mode='schwarz'):
    """:math:`\\omega_{u^{sym}}(t) \\le \\omega_u(t) + 2\\Delta\\,\\mathrm{Lip}(u)`."""
    lhs = modulus_of_continuity(us, t)
    rhs = modulus_of_continuity(u, t)
    return ComparisonReport('modulus_of_continuity', lhs, rhs,
                            tolerance=2 * u.spec.delta * lipschitz_constant(u),
                            relation='<=', metadata=_metadata(u, t=t, mode=mode))


def order_preserved(u, v, mode='schwarz', rtol=1e-9):
    """For ``u <= v`` cell-wise, check ``u^sym <= v^sym`` cell-wise."""
    if np.any(u.values > v.values):
        raise PreconditionError("order check needs u <= v everywhere")
    us, vs = symmetrize_fn(u, mode), symmetrize_fn(v, mode)
    excess = float(np.max(us.values - vs.values))
    return ComparisonReport('order_preservation', excess, 0.0,
                            tolerance=rtol * float(v.values.max()),
                            relation='<=', metadata=_metadata(u, mode=mode))


MODULUS_STEPS = (0.1, 0.2, 0.4)

PROPERTY_KINDS = ('cavalieri', 'hardy_littlewood', 'nonexpansivity',
                  'supnorm_contraction', 'correlation')


def property_checks(u, v, kind, mode='schwarz', p=2.0, functional='product',
                    tol=0.01):
    """
    One rearrangement inequality, evaluated with the ``mode`` backend.

    :param str kind: ``'cavalieri'`` (:math:`\\int (u^*)^p = \\int u^p`
        up to the sampling bound), ``'hardy_littlewood'`` (:math:`\\int uv \\le \\int u^*v^*`),
        ``'nonexpansivity'`` (:math:`\\int |u^*-v^*|^p \\le \\int |u-v|^p`),
        ``'supnorm_contraction'``, ``'correlation'`` (:math:`\\int F(u, v)
        \\le \\int F(u^*, v^*)` with ``functional`` ``'product'`` or
        ``'min'``)
    :param float p: power of the convex integrand, ``p >= 1``
    :param float tol: relative tolerance for the grid-level inequalities
    """
    if kind not in PROPERTY_KINDS:
        raise ParameterError("unknown property kind {0!r}; expected one of "
                             "{1}".format(kind, ", ".join(PROPERTY_KINDS)))
    if p < 1:
        raise ParameterError("the convex power needs p >= 1, got {0}".format(p))
    power = lambda x: np.abs(x)**p

    if kind == 'cavalieri':
        us = symmetrize_fn(u, mode)
        lhs = us.integral(power)
        rhs = u.integral(power)
        layers = layer_profile(u).integral(power)
        detail = ComparisonReport(
            'layer_integral', layers, rhs,
            tolerance=1e-12 * max(1.0, abs(rhs)), relation='==',
            metadata=_metadata(u, p=p))
        return ComparisonReport('cavalieri', lhs, rhs,
                                tolerance=sampling_tolerance(u, us, mode, power),
                                relation='==',
                                metadata=_metadata(u, mode=mode, p=p),
                                details=[detail])

    us, vs = symmetrize_fn(u, mode), symmetrize_fn(v, mode)
    masses = u.cell_masses()

    def integrate(x):
        return math.fsum((x * masses).ravel())

    if kind == 'hardy_littlewood':
        lhs = integrate(u.values * v.values)
        rhs = integrate(us.values * vs.values)
        relation = '<='
    elif kind == 'nonexpansivity':
        lhs = integrate(power(us.values - vs.values))
        rhs = integrate(power(u.values - v.values))
        relation = '<='
    elif kind == 'supnorm_contraction':
        lhs = float(np.max(np.abs(us.values - vs.values)))
        rhs = float(np.max(np.abs(u.values - v.values)))
        relation = '<='
    else:
        if functional == 'product':
            F = np.multiply
        elif functional == 'min':
            F = np.minimum
        else:
            raise ParameterError("functional must be 'product' or 'min', got "
                                 "{0!r}".format(functional))
        lhs = integrate(F(u.values, v.values))
        rhs = integrate(F(us.values, vs.values))
        relation = '<='
    scale = max(abs(lhs), abs(rhs))
    return ComparisonReport(kind, lhs, rhs, tolerance=tol * scale,
                            relation=relation,
                            metadata=_metadata(u, mode=mode, p=p,
                                               functional=functional))


def modulus_of_continuity(u, t):
    """:math:`\\omega_u(t) = \\max |u(x) - u(y)|` over cell centers with
    :math:`|x - y| < t`."""
    spec = u.spec
    if t < 2 * spec.delta:
        raise ParameterError(
            "t = {0} is below two cell widths ({1})".format(t, 2 * spec.delta))
    k = int(math.ceil(t / spec.delta))
    rng = np.arange(-k, k + 1)
    offsets = np.array(np.meshgrid(*([rng] * spec.n), indexing='ij')).reshape(spec.n, -1).T
    dist = np.sqrt(np.sum(offsets**2, axis=1)) * spec.delta
    offsets = offsets[(dist < t) & (dist > 0)]
    # one offset of each +/- pair
    first = np.array([o[np.flatnonzero(o)[0]] > 0 for o in offsets])
    offsets = offsets[first]
    values = u.values
    best = 0.0
    for o in offsets:
        a = tuple(slice(max(0, -d), spec.N - max(0, d)) for d in o)
        b = tuple(slice(max(0, d), spec.N - max(0, -d)) for d in o)
        best = max(best, float(np.max(np.abs(values[b] - values[a]))))
    return best


def gradient_norm(u):
    """:math:`|\\nabla u|` by central differences over the window."""
    grads = np.gradient(u.values, u.spec.delta)
    return np.sqrt(sum(g**2 for g in grads))


def dirichlet_energy(u, p):
    """:math:`\\int |\\nabla u|^p \\, d\\mu`."""
    return math.fsum((gradient_norm(u)**p * u.cell_masses()).ravel())


def _check_support(u, pad=2):
    if not u.compact:
        raise PreconditionError(
            "gradient functionals need a compactly supported function")
    inner = np.zeros(u.spec.shape, dtype=bool)
    inner[tuple(slice(pad, u.spec.N - pad) for _ in range(u.spec.n))] = True
    if np.any(u.values[~inner] > 0):
        raise PreconditionError(
            "support must stay {0} cells away from the window boundary".format(pad))


def dirichlet_functional(u, p=2.0, mode='schwarz', tol=0.02):
    """
    :math:`\\int |\\nabla u|^p d\\mu` against the same functional of the
    symmetrized function, ``1 <= p <= 4``.

    The support must stay two cells inside the window so that the stencil
    sees zeros around it.
    """
    if not 1 <= p <= 4:
        raise ParameterError("p must lie in [1, 4], got {0}".format(p))
    _check_support(u)
    us = symmetrize_fn(u, mode)
    lhs = dirichlet_energy(u, p)
    rhs = dirichlet_energy(us, p)
    return ComparisonReport('dirichlet_functional', lhs, rhs,
                            tolerance=tol * rhs,
                            metadata=_metadata(u, p=p, mode=mode))


# ---------------------------------------------------------------------------
# Random functions

def bump_sum(centers, radii, heights):
    """:math:`\\sum_k a_k (1 - |x - c_k|^2 / s_k^2)_+^2`."""
    def fcn(coords):
        out = 0.0
        for c, s, a in zip(centers, radii, heights):
            r2 = sum((x - ci)**2 for x, ci in zip(coords, c))
            out = out + a * np.clip(1 - r2 / s**2, 0, None)**2
        return out
    return fcn


def random_bump(rng, spec, density, components=None, radius_range=(0.3, 0.9)):
    """Sum of 1 to 3 Lipschitz bumps with support in ``[-0.8L, 0.8L]^n``."""
    k = int(rng.integers(1, 4)) if components is None else components
    scale = spec.L / 2.5
    radii = rng.uniform(*radius_range, size=k) * scale
    heights = rng.uniform(0.2, 1.0, size=k)
    room = np.maximum(0.8 * spec.L - radii, 0.0)
    centers = [rng.uniform(-rm, rm, spec.n) for rm in room]
    return GridFunction.from_function(
        spec, density, bump_sum(centers, radii, heights),
        sentence="Random sum of {0} bumps.".format(k))


# ---------------------------------------------------------------------------
# Suites

def _properties_case(args):
    spec, density, seed, modes = args
    rng = np.random.default_rng(seed)
    u = random_bump(rng, spec, density)
    v = random_bump(rng, spec, density)
    reports = []
    for mode in modes:
        us = symmetrize_fn(u, mode)
        reports.append(equimeasurability(u, us, mode=mode))
        for t in MODULUS_STEPS:
            if t >= 2 * spec.delta:
                reports.append(modulus_check(u, us, t, mode))
        reports.append(property_checks(u, v, 'cavalieri', mode))
        reports.append(property_checks(u, v, 'hardy_littlewood', mode))
        reports.append(property_checks(u, v, 'nonexpansivity', mode, p=2))
        reports.append(property_checks(u, v, 'supnorm_contraction', mode))
        reports.append(property_checks(u, v, 'correlation', mode,
                                       functional='product'))
        reports.append(property_checks(u, v, 'correlation', mode,
                                       functional='min'))
        w = u.derived(u.values + v.values, "Add a second bump.")
        reports.append(order_preserved(u, w, mode))
    return reports


def properties_suite(c=1.0, n=2, L=2.5, N=128, pairs=100, seed=0,
                     modes=('schwarz', 'steiner'), threads=None):
    """Rearrangement identities and inequalities on random bump pairs."""
    spec = GridSpec(n, L, N)
    density = RadialDensity(n, c)
    seeds = np.random.default_rng(seed).integers(0, 2**63 - 1, pairs)
    jobs = [(spec, density, int(sd), modes) for sd in seeds]
    cases = []
    for reports in parallel_map(_properties_case, jobs, threads):
        cases.extend(reports)
    return SuiteReport('properties', cases, OrderedDict([
        ('density', density.config()), ('grid', spec.config()),
        ('pairs', pairs), ('modes', list(modes)), ('seed', seed)]))


def _polya_case(args):
    spec, density, seed, ps, modes = args
    u = random_bump(np.random.default_rng(seed), spec, density)
    return [dirichlet_functional(u, p, mode) for p in ps for mode in modes]


def recentred_bump(spec, density, shift=0.6, radius=0.7):
    """A single bump centered at ``(shift, 0, ...)``."""
    center = np.zeros(spec.n)
    center[0] = shift * spec.L / 2.5
    return GridFunction.from_function(
        spec, density, bump_sum([center], [radius * spec.L / 2.5], [1.0]),
        sentence="Bump centered at {0}.".format(center.tolist()))


def polya_suite(cs=(0.0, 1.0), ps=(1.0, 2.0, 3.0), n=2, L=2.5, N=128,
                bumps=50, seed=0, modes=('schwarz', 'steiner'), threads=None):
    """Gradient functionals before and after symmetrization."""
    spec = GridSpec(n, L, N)
    rng = np.random.default_rng(seed)
    jobs = []
    for c in cs:
        density = RadialDensity(n, c)
        jobs += [(spec, density, int(sd), ps, modes)
                 for sd in rng.integers(0, 2**63 - 1, bumps)]
    cases = []
    for reports in parallel_map(_polya_case, jobs, threads):
        cases.extend(reports)
    for c in cs:
        if c <= 0:
            continue
        u = recentred_bump(spec, RadialDensity(n, c))
        for p in ps:
            if p <= 1:
                continue
            r = dirichlet_functional(u, p, 'schwarz')
            cases.append(ComparisonReport(
                'recentred_deficit', r.deficit, 1e-9 * r.rhs, relation='>=',
                metadata=r.metadata))
    return SuiteReport('polya', cases, OrderedDict([
        ('c', list(cs)), ('p', list(ps)), ('grid', spec.config()),
        ('bumps', bumps), ('modes', list(modes)), ('seed', seed)]))
