#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# ellipticcompare.py

"""

Weighted p-Laplace Dirichlet problems and the symmetrization comparison.

The model problem on a gridded domain :math:`\\Omega` is

.. math::

    -\\mathrm{div}\\left(\\varphi(x) |\\nabla u|^{p-2} \\nabla u\\right)
        = f(x) \\varphi(x) \\quad \\text{in } \\Omega, \\qquad u = 0
        \\text{ on } \\partial\\Omega,

with :math:`\\varphi(x) = e^{c|x|^2}`.  It is discretized with cell-centered
finite volumes: the flux through a face between two domain cells has the
weight :math:`\\varphi` at the face midpoint, and a face to a cell outside
the domain puts the zero boundary value at distance :math:`\\theta\\Delta`
from the cell center, adding :math:`k/\\theta` to the diagonal.  With a
level function for the domain :math:`\\theta` is the linear-interpolation
crossing; without one the boundary sits on the face, :math:`\\theta = 1/2`.

For :math:`p = 2` the symmetric positive-definite system is solved by
Jacobi-preconditioned conjugate gradients.  For :math:`p \\ne 2` the flux
coefficient :math:`(|\\nabla u|^2 + \\epsilon^2)^{(p-2)/2}` is frozen and
updated by a fixed-point iteration damped by 0.5.

The radial bound

.. math::

    v(s) = \\int_s^{\\mu(\\Omega)} \\frac{1}{I(r)^{p'}}
        \\left(\\int_0^r \\tilde f(\\sigma) \\, d\\sigma\\right)^{1/(p-1)} dr,
    \\qquad p' = \\frac{p}{p - 1},

is tabulated in mass coordinates, and :func:`compare` checks
:math:`u^\\star(x) \\le v(H(|x|))` together with
:math:`\\|\\nabla u\\|_{q,\\mu} \\le \\|\\nabla v\\|_{q,\\mu}` for
:math:`1 \\le q < p`.

"""

from __future__ import division, print_function, absolute_import
import math
import time
from collections import OrderedDict

import numpy as np
from scipy import sparse
from scipy.integrate import cumulative_trapezoid, trapezoid
from scipy.sparse.linalg import cg
from lmfit import minimize, Parameters, fit_report

from murearrange.density import RadialDensity, density_from_config
from murearrange.gridsets import GridSet, GridSpec, grid_measure
from murearrange.rearrangefn import (
    GridFunction,
    gradient_norm,
    layer_profile,
    schwarz_symmetrize_fn,
)
from murearrange.report import ComparisonReport, SuiteReport
from murearrange.util import (
    ConvergenceError,
    DomainError,
    ParameterError,
    PreconditionError,
    WindowError,
    format_report,
    parallel_map,
    warn,
)

THETA_MIN = 1e-3


# ---------------------------------------------------------------------------
# Domains and right-hand sides

def disk_level(radius, center=None):
    def level(coords):
        c = np.zeros(len(coords)) if center is None else center
        return sum((x - ci)**2 for x, ci in zip(coords, c)) - radius**2
    return level


def box_level(lo, hi):
    lo, hi = np.asarray(lo, float), np.asarray(hi, float)
    mid, half = (lo + hi) / 2, (hi - lo) / 2

    def level(coords):
        out = None
        for x, m, h in zip(coords, mid, half):
            term = np.abs(x - m) - h
            out = term if out is None else np.maximum(out, term)
        return out
    return level


def l_shape_level(side):
    """Square of the given side with the quadrant ``x1 > 0, x2 > 0`` cut
    away."""
    half = side / 2
    box = box_level([-half] * 2, [half] * 2)

    def level(coords):
        return np.maximum(box(coords), np.minimum(coords[0], coords[1]))
    return level


def domain_from_config(cfg, spec, density):
    """
    Boolean domain and level function from a JSON-style dict.

    ``{"shape": "disk", "radius": R}``, ``{"shape": "square", "side": a}``,
    ``{"shape": "l_shape", "side": a}``, ``{"shape": "box", "lo": [...],
    "hi": [...]}`` or ``{"gridfile": path}`` (no level function).
    """
    if 'gridfile' in cfg:
        from murearrange.io import read_grid
        s = read_grid(cfg['gridfile'], density=density)
        if not isinstance(s, GridSet):
            raise ValueError("domain gridfile must hold a set, not a function")
        return s, None
    shape = cfg.get('shape', 'disk')
    if shape == 'disk':
        level = disk_level(float(cfg.get('radius', 1.0)), cfg.get('center'))
    elif shape == 'square':
        half = float(cfg.get('side', 1.6)) / 2
        level = box_level([-half] * spec.n, [half] * spec.n)
    elif shape == 'l_shape':
        if spec.n != 2:
            raise ValueError("the L-shaped domain is two-dimensional")
        level = l_shape_level(float(cfg.get('side', 1.6)))
    elif shape == 'box':
        level = box_level(cfg['lo'], cfg['hi'])
    else:
        raise ValueError("unknown domain shape {0!r}; expected disk, square, "
                         "l_shape or box".format(shape))
    domain = GridSet.from_indicator(
        spec, density, lambda coords: level(coords) < 0,
        "Domain {0}.".format(dict(cfg)))
    return domain, level


def source_from_config(cfg):
    """
    Right-hand side ``f(coords)`` from a JSON-style dict.

    ``{"kind": "constant", "value": 1}``, ``{"kind": "ramp", "value": 1,
    "slope": 0.5}`` for :math:`a(1 - b|x|)_+`, or ``{"kind": "bump",
    "center": [...], "width": w, "height": a}`` for a Gaussian bump.
    """
    kind = cfg.get('kind', 'constant')
    value = float(cfg.get('value', 1.0))
    if kind == 'constant':
        return lambda coords: value + 0 * sum(coords)
    elif kind == 'ramp':
        slope = float(cfg.get('slope', 0.5))
        return lambda coords: value * np.clip(
            1 - slope * np.sqrt(sum(x**2 for x in coords)), 0, None)
    elif kind == 'bump':
        center = cfg.get('center', [0.3, 0.2])
        width = float(cfg.get('width', 0.3))
        height = float(cfg.get('height', 1.0))
        return lambda coords: height * np.exp(
            -sum((x - c)**2 for x, c in zip(coords, center)) / width**2)
    raise ValueError("unknown source kind {0!r}; expected constant, ramp or "
                     "bump".format(kind))


# ---------------------------------------------------------------------------
# Problem

class EllipticProblem(object):

    def __init__(self, domain, p=2.0, f=1.0, density=None, level=None,
                 residual_tol=1e-10, max_iter=500):
        """
        Weighted p-Laplace Dirichlet problem.

        :param GridSet domain: boolean, nonempty, inside the window
        :param float p: exponent, ``1 < p <= 4``
        :param f: number, callable on coordinates, or GridFunction
        :param RadialDensity density: defaults to the domain's density
        :param level: callable, negative inside the domain; locates the
            boundary between cell centers
        :param float residual_tol: relative residual of the linear solves
        :param int max_iter: fixed-point iterations for ``p != 2``
        """
        if p <= 1:
            raise DomainError("p must be > 1, got {0}".format(p))
        if p > 4:
            raise ParameterError("p must be <= 4, got {0}".format(p))
        density = domain.density if density is None else density
        if not isinstance(density, RadialDensity):
            raise PreconditionError("the model problem needs a RadialDensity")
        if not domain.boolean:
            raise PreconditionError("the domain must be a boolean set")
        if not np.any(domain.occ > 0):
            raise ValueError("the domain is empty")
        spec = domain.spec
        if isinstance(f, GridFunction):
            values = f.values
        elif callable(f):
            values = np.broadcast_to(f(spec.centers()), spec.shape)
        else:
            values = np.full(spec.shape, float(f))
        values = np.where(domain.occ > 0, values, 0.0)
        if not np.all(np.isfinite(values)):
            raise ValueError("f must be bounded on the domain")

        self.domain = domain
        self.spec = spec
        self.p = float(p)
        self.f = values
        self.density = density
        self.level = level
        self.residual_tol = float(residual_tol)
        self.max_iter = int(max_iter)
        self.epsilon = None
        self.history = []

        self.report = []
        new_report = []
        new_report.append("Weighted {0}-Laplace problem on {1} domain".format(
            self.p, 'a level-set' if level is not None else 'a cell'))
        new_report.append("cells with c = {0}; mu(Omega) = {1:.6g}.".format(
            density.c, grid_measure(domain)))
        self.report.append(" ".join(new_report))

    @property
    def p_prime(self):
        return self.p / (self.p - 1)

    def config(self):
        return OrderedDict([('p', self.p), ('density', self.density.config()),
                            ('grid', self.spec.config()),
                            ('residual_tol', self.residual_tol),
                            ('max_iter', self.max_iter)])

    def __repr__(self):
        return format_report("EllipticProblem report", self.report)


def problem_from_config(cfg):
    """EllipticProblem from ``{domain, p, f, density, grid, solver}``."""
    grid = cfg.get('grid', {})
    spec = GridSpec(grid.get('n', 2), grid.get('L', 1.25), grid.get('N', 256))
    dcfg = dict(cfg.get('density', {'kind': 'gauss', 'c': 0.0}))
    dcfg.setdefault('n', spec.n)
    density = density_from_config(dcfg)
    domain, level = domain_from_config(cfg.get('domain', {'shape': 'disk'}),
                                       spec, density)
    solver = cfg.get('solver', {})
    return EllipticProblem(domain, p=cfg.get('p', 2.0),
                           f=source_from_config(cfg.get('f', {})),
                           density=density, level=level,
                           residual_tol=solver.get('residual_tol', 1e-10),
                           max_iter=solver.get('max_iter', 500))


# ---------------------------------------------------------------------------
# Solver

def _axis_slices(n, axis):
    lo = [slice(None)] * n
    hi = [slice(None)] * n
    lo[axis] = slice(0, -1)
    hi[axis] = slice(1, None)
    return tuple(lo), tuple(hi)


def _face_weights(prob, axis):
    """:math:`\\varphi` at the midpoints of the interior faces normal to
    ``axis``."""
    spec = prob.spec
    coords = list(spec.centers())
    shape = [1] * spec.n
    shape[axis] = spec.N - 1
    coords[axis] = spec.axis_edges()[1:-1].reshape(shape)
    face_shape = list(spec.shape)
    face_shape[axis] = spec.N - 1
    return np.broadcast_to(prob.density.weight(coords), face_shape)


def _theta(li, lo):
    """Fraction of the center spacing from an inner cell to the boundary,
    from the level values of the inner and the outer cell."""
    with np.errstate(divide='ignore', invalid='ignore'):
        theta = li / (li - lo)
    theta = np.where((li < 0) & (lo >= 0), theta, 0.5)
    return np.clip(theta, THETA_MIN, 1.0)


def assemble(prob, coefficients=None):
    """
    Sparse operator ``A`` with ``A u = Delta^2 f phi`` for the domain cells.

    :param coefficients: optional per-axis arrays on the interior faces
        multiplying the face weights
    :return: ``(A, index)`` with ``index`` mapping cells to unknowns
        (``-1`` outside)
    """
    spec = prob.spec
    inside = prob.domain.occ > 0
    count = int(inside.sum())
    index = -np.ones(spec.shape, dtype=np.int64)
    index[inside] = np.arange(count)
    level = None
    if prob.level is not None:
        level = np.broadcast_to(prob.level(spec.centers()), spec.shape)

    rows, cols, vals = [], [], []
    diag = np.zeros(count)
    for axis in range(spec.n):
        lo, hi = _axis_slices(spec.n, axis)
        k = _face_weights(prob, axis)
        if coefficients is not None:
            k = k * coefficients[axis]
        a, b = inside[lo], inside[hi]
        ia, ib = index[lo], index[hi]

        both = a & b
        kb = k[both]
        rows += [ia[both], ib[both]]
        cols += [ib[both], ia[both]]
        vals += [-kb, -kb]
        diag += np.bincount(ia[both], kb, minlength=count)
        diag += np.bincount(ib[both], kb, minlength=count)

        for inner, outer, idx in ((a & ~b, (lo, hi), ia), (b & ~a, (hi, lo), ib)):
            if not np.any(inner):
                continue
            if level is None:
                theta = np.full(int(inner.sum()), 0.5)
            else:
                theta = _theta(level[outer[0]][inner], level[outer[1]][inner])
            diag += np.bincount(idx[inner], k[inner] / theta, minlength=count)

    rows.append(np.arange(count))
    cols.append(np.arange(count))
    vals.append(diag)
    A = sparse.csr_matrix((np.concatenate(vals),
                           (np.concatenate(rows), np.concatenate(cols))),
                          shape=(count, count))
    return A, index


def _rhs(prob, index):
    phi = np.broadcast_to(prob.density.weight(prob.spec.centers()), prob.spec.shape)
    inside = index >= 0
    return prob.spec.delta**2 * (prob.f * phi)[inside]


def _cg(A, b, x0, tol, history):
    """Jacobi-preconditioned conjugate gradients."""
    M = sparse.diags(1 / A.diagonal())
    norm_b = np.linalg.norm(b)
    residuals = []

    def callback(xk):
        residuals.append(float(np.linalg.norm(b - A.dot(xk)) / norm_b))

    x, info = cg(A, b, x0=x0, rtol=tol, atol=0.0, maxiter=10 * b.size, M=M,
                 callback=callback)
    history.extend(residuals)
    if info != 0:
        raise ConvergenceError(
            "conjugate gradients stopped at relative residual {0:.3g} after "
            "{1} iterations".format(residuals[-1] if residuals else np.nan,
                                    len(residuals)), history=residuals)
    return x


def _face_coefficients(prob, u, epsilon):
    """:math:`(|\\nabla u|^2 + \\epsilon^2)^{(p-2)/2}` on interior faces."""
    spec = prob.spec
    grads = np.gradient(u, spec.delta)
    out = []
    for axis in range(spec.n):
        lo, hi = _axis_slices(spec.n, axis)
        g2 = ((u[hi] - u[lo]) / spec.delta)**2
        for other in range(spec.n):
            if other != axis:
                g2 = g2 + (0.5 * (grads[other][lo] + grads[other][hi]))**2
        out.append((g2 + epsilon**2)**((prob.p - 2) / 2))
    return out


def solve_weighted_plaplace(prob):
    """
    Solve the discrete problem.

    :return: :class:`GridFunction` of :math:`|u|`, zero outside the domain;
        the linear-solve residuals or fixed-point changes are left in
        ``prob.history``
    """
    t0 = time.time()
    spec = prob.spec
    A, index = assemble(prob)
    b = _rhs(prob, index)
    inside = index >= 0
    u = np.zeros(spec.shape)
    prob.history = []

    new_report = []
    if not np.any(b != 0):
        new_report.append("Zero source; the solution vanishes.")
    elif prob.p == 2:
        u[inside] = _cg(A, b, None, prob.residual_tol, prob.history)
        new_report.append("Solved {0} unknowns by preconditioned conjugate".format(b.size))
        new_report.append("gradients in {0} iterations to relative residual".format(
            len(prob.history)))
        new_report.append("{0:.2e};".format(prob.history[-1] if prob.history else 0.0))
    else:
        scale = (np.max(np.abs(prob.f)) * spec.L)**(1 / (prob.p - 1))
        prob.epsilon = 1e-8 * scale
        warn("p = {0}: flux regularized with epsilon = {1:.3g}".format(
            prob.p, prob.epsilon))
        x = _cg(A, b, None, prob.residual_tol, [])
        u[inside] = x
        for it in range(prob.max_iter):
            coefficients = _face_coefficients(prob, u, prob.epsilon)
            Ak, _ = assemble(prob, coefficients)
            x_new = _cg(Ak, b, x, prob.residual_tol, [])
            x_next = 0.5 * x + 0.5 * x_new
            change = np.max(np.abs(x_next - x)) / max(np.max(np.abs(x_next)), 1e-300)
            prob.history.append(float(change))
            x = x_next
            u[inside] = x
            if change < 1e-7:
                break
        else:
            raise ConvergenceError(
                "fixed-point iteration for p = {0} did not settle in {1} "
                "iterations; last relative change {2:.3g}".format(
                    prob.p, prob.max_iter, prob.history[-1]),
                history=prob.history)
        new_report.append("Damped fixed-point iteration with epsilon =")
        new_report.append("{0:.3g} converged in {1} steps;".format(
            prob.epsilon, len(prob.history)))
    if np.any(b != 0):
        new_report.append("minimum of the raw solution {0:.3g};".format(u.min()))
        new_report.append("it took {0:.1f} ms.".format(1e3 * (time.time() - t0)))
    prob.report.append(" ".join(new_report))
    sentence = "Solution of the weighted {0}-Laplace problem.".format(prob.p)
    return GridFunction(spec, np.abs(u), prob.density, report=[sentence])


def radial_torsion(density, R, num=4001):
    """
    Exact solution for :math:`f \\equiv 1` on the ball of radius ``R`` and
    :math:`p = 2`, :math:`u(r) = \\int_r^R H(t)/h(t) \\, dt`, as a callable
    of :math:`|x|`.
    """
    t = np.linspace(0.0, R, num)
    ratio = np.zeros(num)
    ratio[1:] = density.H(t[1:]) / density.h(t[1:])
    cum = cumulative_trapezoid(ratio, t, initial=0.0)
    values = cum[-1] - cum
    return lambda r: np.interp(r, t, values, right=0.0)


# ---------------------------------------------------------------------------
# Radial bound

class RadialBound(object):

    def __init__(self, s, v, integrand, profile, density, p):
        """
        :math:`v` tabulated in mass coordinates.

        :param s: increasing mass grid from 0 to :math:`\\mu(\\Omega)`
        :param v: values, non-increasing, ``v[-1] == 0``
        :param integrand: :math:`-v'(s)` on the same grid
        :param LayerProfile profile: :math:`\\tilde f`
        """
        self.s = s
        self.v = v
        self.integrand = integrand
        self.profile = profile
        self.density = density
        self.p = p
        self.p_prime = p / (p - 1)
        self.mass = float(s[-1])
        self.r = np.asarray(density.H_inv(s), dtype=float)

    def __call__(self, s):
        return np.interp(s, self.s, self.v, right=0.0)

    def at_radius(self, r):
        """:math:`v(H(r))`."""
        return np.interp(r, self.r, self.v, right=0.0)

    def sample(self, spec):
        """:math:`v(H(|x|))` at the cell centers of ``spec``."""
        if self.r[-1] >= spec.L - spec.delta:
            raise WindowError(
                "the support radius {0:.4g} of v does not fit in the window "
                "L = {1}".format(self.r[-1], spec.L))
        r = np.sqrt(sum(x**2 for x in spec.centers()))
        values = np.broadcast_to(self.at_radius(r), spec.shape)
        return GridFunction(spec, values, self.density,
                            report=["Radial bound sampled on {0}.".format(spec)])

    def gradient_norm(self, q):
        """:math:`\\|\\nabla v\\|_{q,\\mu} = (\\int_0^M (|v'(s)| I(s))^q ds)^{1/q}`."""
        I = np.asarray(self.density.I(self.s), dtype=float)
        total = trapezoid((self.integrand * I)**q, self.s)
        return float(total)**(1 / q)

    def to_table(self):
        """Rows ``(s, r, v)``."""
        return np.column_stack([self.s, self.r, self.v])


def mass_grid(mass, points=400, geometric=40, smallest=1e-10):
    """Zero, ``geometric`` geometric subintervals from ``smallest * mass``
    and ``points`` uniform subintervals up to ``mass``."""
    first = mass / points
    geo = np.geomspace(smallest * mass, first, geometric + 1)
    uni = np.linspace(first, mass, points + 1)[1:]
    return np.concatenate([[0.0], geo, uni])


def radial_bound_v(prob, points=400):
    """Tabulate the radial bound of ``prob`` on a graded mass grid."""
    if np.any(prob.f < 0):
        raise PreconditionError(
            "the radial bound needs f >= 0; minimum is {0}".format(prob.f.min()))
    n, p = prob.spec.n, prob.p
    exponent = 1 / (p - 1) - prob.p_prime * (n - 1) / n
    if exponent <= -1:
        raise ParameterError(
            "the integrand behaves like s^{0:.4g} at s = 0 and is not "
            "integrable".format(exponent))
    f = GridFunction(prob.spec, prob.f, prob.density)
    profile = layer_profile(f)
    mass = grid_measure(prob.domain)
    s = mass_grid(mass, points)
    F = profile.U(s)
    I = np.asarray(prob.density.I(s), dtype=float)
    g = np.zeros_like(s)
    g[1:] = F[1:]**(1 / (p - 1)) / I[1:]**prob.p_prime
    g[0] = 0.0 if exponent > 0 else g[1]
    cum = cumulative_trapezoid(g, s, initial=0.0)
    v = cum[-1] - cum
    prob.report.append(
        "Radial bound on {0} mass points; v(0) = {1:.6g}.".format(s.size, v[0]))
    return RadialBound(s, v, g, profile, prob.density, p)


# ---------------------------------------------------------------------------
# Comparison

def _metadata(prob, **extra):
    metadata = prob.config()
    metadata['epsilon'] = prob.epsilon
    metadata.update(extra)
    return metadata


def gradient_norm_q(u, q):
    """:math:`\\|\\nabla u\\|_{q,\\mu}` with central differences."""
    return math.fsum((gradient_norm(u)**q * u.cell_masses()).ravel())**(1 / q)


def compare(prob, qs=None, tol=None):
    """
    :math:`u^\\star \\le v` and the gradient norms.

    :param qs: exponents with ``1 <= q < p``; defaults to ``1`` and
        ``(1 + p)/2``
    :param float tol: relative tolerance; 0.02 for ``p = 2``, 0.03
        otherwise
    :return: :class:`ComparisonReport` with lhs ``max(u* - v)`` and one
        detail per ``q``
    """
    p = prob.p
    qs = [1.0, (1 + p) / 2] if qs is None else list(qs)
    for q in qs:
        if not 1 <= q < p:
            raise ParameterError(
                "gradient comparison needs 1 <= q < p = {0}, got q = {1}".format(p, q))
    if tol is None:
        tol = 0.02 if p == 2 else 0.03
    u = solve_weighted_plaplace(prob)
    us = schwarz_symmetrize_fn(u)
    bound = radial_bound_v(prob)
    v = bound.sample(prob.spec)
    vmax = float(v.values.max())

    details = []
    for q in qs:
        lhs, rhs = gradient_norm_q(u, q), bound.gradient_norm(q)
        details.append(ComparisonReport(
            'gradient_norm', lhs, rhs, tolerance=tol * rhs, relation='<=',
            metadata=_metadata(prob, q=q)))
    excess = float(np.max(us.values - v.values))
    return ComparisonReport(
        'comparison', excess, 0.0, tolerance=tol * vmax, relation='<=',
        metadata=_metadata(prob, max_v=vmax, max_u_star=float(us.values.max())),
        details=details)


def oracle_error(prob, oracle):
    """``max |u - oracle(|x|)|`` on the domain, against ``0.01 max oracle``."""
    u = solve_weighted_plaplace(prob)
    r = np.sqrt(sum(x**2 for x in prob.spec.centers()))
    exact = np.broadcast_to(oracle(r), prob.spec.shape) * (prob.domain.occ > 0)
    err = float(np.max(np.abs(u.values - exact)))
    return ComparisonReport('torsion_oracle', err, 0.0,
                            tolerance=0.01 * float(exact.max()), relation='<=',
                            metadata=_metadata(prob))


def convergence_order(deltas, errors):
    """
    Fit :math:`\\mathrm{err} = A \\Delta^k` in log space.

    :return: OrderedDict with ``order``, ``stderr``, ``amplitude`` and the
        lmfit ``report``
    """
    x = np.log(np.asarray(deltas, dtype=float))
    y = np.log(np.asarray(errors, dtype=float))
    if x.size < 2:
        raise ParameterError("need at least two resolutions, got {0}".format(x.size))

    def fcn2min(params, x, y):
        return params['logA'].value + params['k'].value * x - y

    params = Parameters()
    params.add('logA', value=0.0)
    params.add('k', value=2.0)
    result = minimize(fcn2min, params, args=(x, y))
    p = result.params
    return OrderedDict([
        ('order', p['k'].value),
        ('stderr', p['k'].stderr),
        ('amplitude', math.exp(p['logA'].value)),
        ('report', fit_report(result)),
    ])


def mesh_convergence(c=0.0, R=1.0, L=1.25, Ns=(64, 128, 256)):
    """Errors against :func:`radial_torsion` on successively finer grids."""
    deltas, errors = [], []
    for N in Ns:
        spec = GridSpec(2, L, N)
        density = RadialDensity(2, c)
        domain, level = domain_from_config({'shape': 'disk', 'radius': R},
                                           spec, density)
        prob = EllipticProblem(domain, 2.0, 1.0, density, level)
        u = solve_weighted_plaplace(prob)
        r = np.sqrt(sum(x**2 for x in spec.centers()))
        exact = radial_torsion(density, R)(r) * (domain.occ > 0)
        deltas.append(spec.delta)
        errors.append(float(np.max(np.abs(u.values - exact))))
    fit = convergence_order(deltas, errors)
    fit['deltas'] = deltas
    fit['errors'] = errors
    return fit


# ---------------------------------------------------------------------------
# Suite

SHAPES = (OrderedDict([('shape', 'disk'), ('radius', 1.0)]),
          OrderedDict([('shape', 'square'), ('side', 1.6)]),
          OrderedDict([('shape', 'l_shape'), ('side', 1.6)]))

SOURCES = (OrderedDict([('kind', 'constant'), ('value', 1.0)]),
           OrderedDict([('kind', 'ramp'), ('value', 1.0), ('slope', 0.5)]),
           OrderedDict([('kind', 'bump'), ('center', [0.3, 0.2]),
                        ('width', 0.3), ('height', 1.0)]))


def _comparison_case(cfg):
    prob = problem_from_config(cfg)
    report = compare(prob)
    report.metadata['domain'] = cfg['domain']
    report.metadata['f'] = cfg['f']
    return report


def comparison_suite(cs=(0.0, 1.0), ps=(2.0, 1.5), N=256, L=1.25, seed=0,
                     threads=None):
    """
    The comparison over the matrix of densities, domains and sources.

    ``p = 2`` runs every source; other exponents run the constant source.
    A control case checks the solver against the exact torsion function of
    the disk, and one three-dimensional ball case runs at ``N = 64``.
    """
    grid = OrderedDict([('n', 2), ('L', L), ('N', N)])
    configs = []
    for c in cs:
        for p in ps:
            for shape in SHAPES:
                for f in (SOURCES if p == 2 else SOURCES[:1]):
                    configs.append(OrderedDict([
                        ('grid', grid), ('density', {'kind': 'gauss', 'c': c}),
                        ('domain', shape), ('f', f), ('p', p)]))
    configs.append(OrderedDict([
        ('grid', OrderedDict([('n', 3), ('L', L), ('N', 64)])),
        ('density', {'kind': 'gauss', 'c': max(cs)}),
        ('domain', SHAPES[0]), ('f', SOURCES[0]), ('p', 2.0)]))
    cases = list(parallel_map(_comparison_case, configs, threads))

    spec = GridSpec(2, L, N)
    density = RadialDensity(2, 0.0)
    domain, level = domain_from_config(SHAPES[0], spec, density)
    control = EllipticProblem(domain, 2.0, 1.0, density, level)
    cases.append(oracle_error(control, radial_torsion(density, 1.0)))
    return SuiteReport('comparison', cases, OrderedDict([
        ('c', list(cs)), ('p', list(ps)), ('grid', grid), ('seed', seed)]))
