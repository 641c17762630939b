#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# gridsets.py

"""

Sets in :math:`\\mathbb{R}^2` and :math:`\\mathbb{R}^3` as fractional-occupancy
grids on the window :math:`[-L, L]^n`.

The window is cut into :math:`N^n` cells of width :math:`\\Delta = 2L/N`
with :math:`N` even, so the origin is a cell corner and the cell centers
:math:`(k - N/2 + 1/2)\\Delta` are exactly symmetric.  Axis 0 of every array
is :math:`x_1`.

Measure is :math:`\\sum \\mathrm{occ} \\cdot \\varphi(\\mathrm{center})
\\Delta^n`.  Both symmetrizations fill cells in order of distance to the
origin (along the column for Steiner, in the whole window for Schwarz),
with one fractional cell group at the end, so they preserve this measure
to rounding.

Perimeter estimators
--------------------

* :func:`perimeter_boundary_integral` (2-D, boolean sets): the occupancy
  is smoothed with a one-cell Gaussian, the 0.5 level line is polygonized
  by marching squares, and the density is integrated along the polygon by
  the midpoint rule.
* :func:`perimeter_minkowski`: the outer Minkowski quotient
  :math:`(\\mu(M_r) - \\mu(M))/r` with :math:`M_r` from a Euclidean distance
  transform.
* :func:`perimeter_minkowski_extrapolated`: the shell mass over
  :math:`t = 2\\Delta \\dots 8\\Delta`, weighted by the density at the
  nearest boundary point, is fitted by a polynomial of degree ``n``; its
  slope at the zero crossing removes the curvature and lattice offsets of
  the single quotient.
* :func:`column_perimeter`: the exact perimeter of a boolean 2-D set read
  as a union of cells, used by the Steiner deficit bound.

"""

from __future__ import division, print_function, absolute_import
import math
import time
from collections import OrderedDict

import numpy as np
from scipy import ndimage

from murearrange.density import (
    RadialDensity,
    SingularRadialDensity,
    density_from_config,
    steiner_factors,
)
from murearrange.report import ComparisonReport, SuiteReport
from murearrange.util import (
    ParameterError,
    PreconditionError,
    WindowError,
    format_report,
    parallel_map,
    warn,
)

GOLDEN_ANGLE = 180 * (3 - math.sqrt(5))


class GridSpec(object):

    def __init__(self, n=2, L=2.5, N=512):
        """
        Uniform lattice on :math:`[-L, L]^n`.

        :param int n: dimension, 2 or 3
        :param float L: window half-width
        :param int N: cells per axis, even
        """
        if n not in (2, 3):
            raise ValueError("grid dimension must be 2 or 3, got {0}".format(n))
        if int(N) != N or N <= 0 or N % 2:
            raise ValueError("N must be a positive even integer, got {0}".format(N))
        if not L > 0:
            raise ValueError("L must be > 0, got {0}".format(L))
        self.n = int(n)
        self.L = float(L)
        self.N = int(N)
        self.delta = 2 * self.L / self.N

    @property
    def shape(self):
        return (self.N,) * self.n

    @property
    def cell_volume(self):
        return self.delta**self.n

    def axis_centers(self):
        return (np.arange(self.N) - self.N / 2 + 0.5) * self.delta

    def axis_edges(self):
        return (np.arange(self.N + 1) - self.N / 2) * self.delta

    def centers(self, sparse=True):
        """Cell-center coordinates, one broadcastable array per axis."""
        x = self.axis_centers()
        return np.meshgrid(*([x] * self.n), indexing='ij', sparse=sparse)

    def radius_key(self):
        """Exact integer :math:`\\sum (2i - N + 1)^2`, proportional to
        :math:`|x|^2` at cell centers."""
        k = 2 * np.arange(self.N, dtype=np.int64) - self.N + 1
        grids = np.meshgrid(*([k] * self.n), indexing='ij', sparse=True)
        return sum(g**2 for g in grids)

    def boundary_mask(self):
        mask = np.zeros(self.shape, dtype=bool)
        for axis in range(self.n):
            index = [slice(None)] * self.n
            index[axis] = 0
            mask[tuple(index)] = True
            index[axis] = -1
            mask[tuple(index)] = True
        return mask

    def config(self):
        return OrderedDict([('n', self.n), ('L', self.L), ('N', self.N)])

    def __eq__(self, other):
        return (isinstance(other, GridSpec) and self.n == other.n and
                self.L == other.L and self.N == other.N)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "GridSpec(n={0}, L={1}, N={2})".format(self.n, self.L, self.N)


def cell_weights(spec, density, subsample=4):
    """Density per cell: the center value, or for the singular radial
    density the mean over ``subsample**n`` sub-cell centers."""
    if isinstance(density, SingularRadialDensity):
        sub = (np.arange(subsample) + 0.5) / subsample - 0.5
        total = np.zeros(spec.shape)
        x = spec.axis_centers()
        offsets = np.meshgrid(*([sub * spec.delta] * spec.n), indexing='ij')
        for off in zip(*[o.ravel() for o in offsets]):
            coords = np.meshgrid(*[x + o for o in off], indexing='ij', sparse=True)
            total += density.weight(coords)
        return total / subsample**spec.n
    return np.broadcast_to(density.weight(spec.centers()), spec.shape).copy()


class GridSet(object):

    def __init__(self, spec, occ, density, boolean=None, report=None):
        """
        A set as a fractional-occupancy grid.

        :param GridSpec spec: the lattice
        :param occ: occupancy per cell in ``[0, 1]``
        :param density: RadialDensity, ProductDensity or
            SingularRadialDensity
        :param boolean: flag the set as boolean; detected when ``None``
        :param list report: history of the operations that produced it
        """
        occ = np.array(occ, dtype=float)
        if occ.shape != spec.shape:
            raise ValueError("occupancy shape {0} does not match grid {1}".format(
                occ.shape, spec.shape))
        if np.any(occ < -1e-12) or np.any(occ > 1 + 1e-12):
            raise ValueError("occupancy must lie in [0, 1]; found [{0}, {1}]".format(
                occ.min(), occ.max()))
        occ = np.clip(occ, 0.0, 1.0)
        if np.any(occ[spec.boundary_mask()] > 0):
            raise WindowError(
                "set touches the window boundary; enlarge L or shrink the set")
        crisp = bool(np.all((occ == 0) | (occ == 1)))
        if boolean is None:
            boolean = crisp
        elif boolean and not crisp:
            raise ValueError("occupancy flagged boolean but has fractional cells")
        self.spec = spec
        self.occ = occ
        self.occ.setflags(write=False)
        self.density = density
        self.boolean = bool(boolean)
        self.report = list(report or [])
        self._weights = None

    @property
    def weights(self):
        if self._weights is None:
            self._weights = cell_weights(self.spec, self.density)
            self._weights.setflags(write=False)
        return self._weights

    def derived(self, occ, sentence, boolean=None):
        """New set on the same grid and density with one more report entry."""
        new = GridSet(self.spec, occ, self.density, boolean=boolean,
                      report=self.report + [sentence])
        if not isinstance(self.density, SingularRadialDensity):
            new._weights = self._weights
        return new

    def support(self):
        return self.occ > 0

    def threshold(self, level=0.5):
        """Boolean set of the cells with occupancy ``>= level``."""
        occ = (self.occ >= level).astype(float)
        return self.derived(occ, "Threshold occupancy at {0}.".format(level),
                            boolean=True)

    def cell_masses(self):
        return self.weights * self.spec.cell_volume

    @classmethod
    def from_indicator(cls, spec, density, indicator, sentence=None):
        """Boolean set of the cells whose centers satisfy ``indicator``."""
        inside = np.broadcast_to(indicator(spec.centers()), spec.shape)
        report = [sentence or "Boolean set from indicator on {0}.".format(spec)]
        return cls(spec, inside.astype(float), density, boolean=True,
                   report=report)

    @classmethod
    def disk(cls, spec, density, radius, center=None):
        """Centered (or shifted) ball of the given radius."""
        center = np.zeros(spec.n) if center is None else np.asarray(center, float)

        def inside(coords):
            return sum((x - c)**2 for x, c in zip(coords, center)) < radius**2

        return cls.from_indicator(
            spec, density, inside,
            "Ball of radius {0} centered at {1}.".format(radius, center.tolist()))

    @classmethod
    def box(cls, spec, density, lo, hi):
        """Axis-parallel box ``lo < x < hi``."""
        lo, hi = np.asarray(lo, float), np.asarray(hi, float)

        def inside(coords):
            out = True
            for x, a, b in zip(coords, lo, hi):
                out = out & (x > a) & (x < b)
            return out

        return cls.from_indicator(spec, density, inside, "Box {0} < x < {1}.".format(
            lo.tolist(), hi.tolist()))

    @classmethod
    def ellipse(cls, spec, density, semi_axes, center=None):
        center = np.zeros(spec.n) if center is None else np.asarray(center, float)

        def inside(coords):
            return sum(((x - c) / a)**2
                       for x, c, a in zip(coords, center, semi_axes)) < 1

        return cls.from_indicator(spec, density, inside,
                                  "Ellipsoid with semi-axes {0} at {1}.".format(
                                      list(semi_axes), center.tolist()))

    def __repr__(self):
        return format_report("GridSet report", self.report)


def grid_measure(s):
    """:math:`\\sum \\mathrm{occ} \\, \\varphi \\, \\Delta^n`."""
    return float(np.sum(s.occ * s.weights) * s.spec.cell_volume)


def _check_inside(s, occ, what):
    if np.any(occ[s.spec.boundary_mask()] > 0):
        raise WindowError(
            "{0} reaches the window boundary (L = {1}); enlarge the window".format(
                what, s.spec.L))


# ---------------------------------------------------------------------------
# Dilation and perimeter estimators

def _support_distance(s):
    """Distance from every cell center to the nearest support cell center."""
    support = s.support()
    if not np.any(support):
        raise ValueError("the set is empty")
    return ndimage.distance_transform_edt(~support, sampling=s.spec.delta)


def parallel_set(s, r):
    """:math:`M_r = \\{x : \\mathrm{dist}(x, M) < r\\}` on cell centers."""
    if not r > 0:
        raise ParameterError("r must be > 0, got {0}".format(r))
    t0 = time.time()
    occ = (_support_distance(s) < r).astype(float)
    _check_inside(s, occ, "The parallel set at r = {0}".format(r))
    t_calc = time.time() - t0
    new_report = []
    new_report.append("Parallel set at r = {0:.4g}".format(r))
    new_report.append("({0:.2f} cells) by Euclidean distance".format(r / s.spec.delta))
    new_report.append("transform; it took {0:.1f} ms.".format(1e3 * t_calc))
    return s.derived(occ, " ".join(new_report), boolean=True)


def perimeter_minkowski(s, r):
    """Outer Minkowski quotient :math:`(\\mu(M_r) - \\mu(M)) / r`."""
    if r < 2 * s.spec.delta:
        raise ParameterError(
            "r = {0} is below 2 cell widths ({1}); the dilation is "
            "unresolved".format(r, 2 * s.spec.delta))
    try:
        dilated = parallel_set(s, r)
    except WindowError as e:
        raise ParameterError(str(e))
    return (grid_measure(dilated) - grid_measure(s)) / r


def _shell_growth(t, dist, delta, weights, offset):
    """:math:`\\mu(M_t) - \\mu(M)` for every ``t``, each shell cell
    counted with the fraction ``1 + (t - d)/\\Delta`` clipped to [0, 1]."""
    frac = np.clip(1.0 + (t[:, None] - dist[None, :]) / delta, 0.0, 1.0)
    return offset + frac.dot(weights)


def _fit_slope(t, growth, degree):
    """Slope of the fitted growth curve where it crosses zero."""
    fit = np.polynomial.Polynomial.fit(t, growth, degree)
    slope = fit.deriv()
    t_star = 0.0
    for _ in range(4):
        t_star -= fit(t_star) / slope(t_star)
    return float(slope(t_star)), t_star


def perimeter_minkowski_extrapolated(s, k_min=2, k_max=8, degree=None):
    """
    Outer Minkowski content from the growth :math:`\\mu(M_t) - \\mu(M)`
    over :math:`t \\in [k_{min}\\Delta, k_{max}\\Delta]`.

    Every cell of the dilation shell is weighted by the density at its
    nearest boundary point, so that for a convex set the growth is a
    polynomial of degree :math:`n` in :math:`t`.  The polynomial is fitted
    with a free constant term; the perimeter is its slope where it crosses
    zero, which absorbs the half-cell offset of the lattice boundary.  The
    boundary point is re-placed with that offset and the fit repeated once.

    :param GridSet s: the set
    :param float k_min: smallest dilation in cell widths
    :param float k_max: largest dilation in cell widths
    :param int degree: degree of the fit, default ``n``
    """
    degree = s.spec.n if degree is None else int(degree)
    if k_min < 1 or k_max - k_min < 2:
        raise ParameterError(
            "need 1 <= k_min and k_max >= k_min + 2, got {0}, {1}".format(
                k_min, k_max))
    delta = s.spec.delta
    support = s.support()
    if not np.any(support):
        raise ValueError("the set is empty")
    dist, feet = ndimage.distance_transform_edt(~support, sampling=delta,
                                                return_indices=True)
    if np.any((dist < (k_max + 1) * delta) & s.spec.boundary_mask()):
        raise ParameterError("dilation by {0} escapes the window (L = {1})".format(
            k_max * delta, s.spec.L))

    shell = (dist > 0) & (dist < (k_max + 1) * delta)
    d_shell = dist[shell]
    x = [(idx[shell] - s.spec.N / 2 + 0.5) * delta for idx in np.indices(s.spec.shape)]
    foot = [(f[shell] - s.spec.N / 2 + 0.5) * delta for f in feet]
    normal = [(xi - fi) / d_shell for xi, fi in zip(x, foot)]
    offset = float(np.sum(s.cell_masses()[support]) - grid_measure(s))
    t = np.linspace(k_min, k_max, int(round(4 * (k_max - k_min))) + 1) * delta

    t_star = 0.0
    for _ in range(2):
        reach = 0.5 * delta + t_star
        point = [fi + reach * ni for fi, ni in zip(foot, normal)]
        weights = s.density.weight(point) * s.spec.cell_volume
        growth = _shell_growth(t, d_shell, delta, weights, offset)
        p, t_star = _fit_slope(t, growth, degree)
    return p


def _edge_points(f, level, x1, x2):
    """Level crossings on the four edges of every marching square.

    Corners are c0 = (i, j), c1 = (i+1, j), c2 = (i+1, j+1),
    c3 = (i, j+1); edge k joins corner k and corner k+1 (mod 4)."""
    c = [f[:-1, :-1], f[1:, :-1], f[1:, 1:], f[:-1, 1:]]
    X1 = [x1[:-1, None], x1[1:, None], x1[1:, None], x1[:-1, None]]
    X2 = [x2[None, :-1], x2[None, :-1], x2[None, 1:], x2[None, 1:]]
    points = []
    for k in range(4):
        fa, fb = c[k], c[(k + 1) % 4]
        denom = fb - fa
        with np.errstate(divide='ignore', invalid='ignore'):
            w = np.where(denom != 0, (level - fa) / denom, 0.5)
        p1 = X1[k] + w * (X1[(k + 1) % 4] - X1[k])
        p2 = X2[k] + w * (X2[(k + 1) % 4] - X2[k])
        points.append((p1, p2))
    return c, points


# edge pairs per case; saddles 5 and 10 depend on the square's mean
_SEGMENTS = {
    1: [(3, 0)], 2: [(0, 1)], 3: [(3, 1)], 4: [(1, 2)], 6: [(0, 2)],
    7: [(2, 3)], 8: [(2, 3)], 9: [(0, 2)], 11: [(1, 2)], 12: [(3, 1)],
    13: [(0, 1)], 14: [(3, 0)],
}
_SADDLE_JOINED = {5: [(0, 1), (2, 3)], 10: [(3, 0), (1, 2)]}
_SADDLE_SPLIT = {5: [(3, 0), (1, 2)], 10: [(0, 1), (2, 3)]}


def boundary_segments(field, spec, level=0.5):
    """Marching-squares polygonization of ``{field = level}`` on the cell
    centers of a 2-D grid.

    :return: arrays ``(p, q)`` of segment end points, each of shape (k, 2)
    """
    x = spec.axis_centers()
    c, points = _edge_points(field, level, x, x)
    case = sum((c[k] > level).astype(np.int64) << k for k in range(4))
    mean = sum(c) / 4
    starts, ends = [], []

    def add(mask, pairs):
        if not np.any(mask):
            return
        for e0, e1 in pairs:
            starts.append(np.column_stack([points[e0][0][mask], points[e0][1][mask]]))
            ends.append(np.column_stack([points[e1][0][mask], points[e1][1][mask]]))

    for k, pairs in _SEGMENTS.items():
        add(case == k, pairs)
    for k in (5, 10):
        add((case == k) & (mean > level), _SADDLE_JOINED[k])
        add((case == k) & (mean <= level), _SADDLE_SPLIT[k])
    if not starts:
        return np.zeros((0, 2)), np.zeros((0, 2))
    return np.concatenate(starts), np.concatenate(ends)


def perimeter_boundary_integral(s, sigma=1.0, level=0.5):
    """
    :math:`\\int_{\\partial M} \\varphi \\, dH^1` for a boolean 2-D set.

    :param GridSet s: boolean set, n = 2
    :param float sigma: Gaussian smoothing of the occupancy, in cells
    :param float level: contour level
    """
    if s.spec.n != 2:
        raise PreconditionError(
            "the boundary integral is implemented for n = 2; use "
            "perimeter_minkowski_extrapolated for n = {0}".format(s.spec.n))
    if not s.boolean:
        raise PreconditionError(
            "the boundary integral needs a boolean set; call threshold() first")
    field = s.occ
    if sigma > 0:
        field = ndimage.gaussian_filter(field, sigma, mode='constant')
    p, q = boundary_segments(field, s.spec, level)
    if p.shape[0] == 0:
        return 0.0
    length = np.hypot(q[:, 0] - p[:, 0], q[:, 1] - p[:, 1])
    mid = (p + q) / 2
    weight = s.density.weight([mid[:, 0], mid[:, 1]])
    return float(np.sum(length * weight))


def column_perimeter(s):
    """Perimeter of a boolean 2-D set as a union of closed cells.

    Faces normal to :math:`x_1` weigh :math:`\\psi(x_1)\\rho(x_2)\\Delta`;
    faces normal to :math:`x_2` weigh the :math:`\\mu_1`-mass of the column
    symmetric difference times :math:`\\rho` on the face."""
    factors = _product_2d(s)
    psi, spec = factors.psi, s.spec
    edges = spec.axis_edges()
    occ = np.pad(s.occ, 1)
    rho_c = factors.rho([spec.axis_centers()])
    # faces between rows k and k+1 sit at edges[k]
    jumps = np.abs(np.diff(occ, axis=0))[:, 1:-1]
    horizontal = np.sum(jumps * psi.psi(edges)[:, None] * rho_c[None, :]) * spec.delta
    cell_mass = np.diff(psi.Psi(edges))
    side = np.abs(np.diff(occ, axis=1))[1:-1, :]
    rho_e = factors.rho([edges])
    vertical = np.sum(side * cell_mass[:, None] * rho_e[None, :])
    return float(horizontal + vertical)


def _product_2d(s):
    if s.spec.n != 2:
        raise PreconditionError("column-wise operations need n = 2")
    if not s.boolean:
        raise PreconditionError("column-wise operations need a boolean set")
    return steiner_factors(s.density)


# ---------------------------------------------------------------------------
# Symmetrization

def _steiner_factors_for_axis(s, axis):
    if isinstance(s.density, RadialDensity):
        return steiner_factors(s.density)
    if axis != 0:
        raise PreconditionError(
            "a product density psi(x1) rho(x') factorizes along axis 0 only, "
            "got axis {0}".format(axis))
    return steiner_factors(s.density)


def steiner_fill(target, psi_cells, N):
    """Fill symmetric cell pairs outward until the column mass ``target``
    is reached.

    :param target: column masses :math:`\\sum \\mathrm{occ}\\,\\psi`, shape (K,)
    :param psi_cells: :math:`\\psi` at the N cell centers of the column
    :return: occupancy of shape (N, K)
    """
    half = N // 2
    upper = np.arange(half, N)
    lower = half - 1 - np.arange(half)
    group = 2 * psi_cells[upper]
    prev = np.cumsum(group) - group
    frac = np.clip((target[None, :] - prev[:, None]) / group[:, None], 0.0, 1.0)
    occ = np.empty((N,) + target.shape)
    occ[upper] = frac
    occ[lower] = frac
    return occ


def steiner_symmetrize_set(s, axis=0):
    """Replace every line parallel to ``axis`` by the centered segment of
    equal :math:`\\mu_1`-mass."""
    factors = _steiner_factors_for_axis(s, axis)
    spec = s.spec
    psi_cells = factors.psi.psi(spec.axis_centers())
    occ = np.moveaxis(s.occ, axis, 0).reshape(spec.N, -1)
    target = np.sum(occ * psi_cells[:, None], axis=0)
    new = steiner_fill(target, psi_cells, spec.N)
    new = np.moveaxis(new.reshape(np.moveaxis(s.occ, axis, 0).shape), 0, axis)
    _check_inside(s, new, "The Steiner symmetral")
    sentence = ("Steiner symmetrization along axis {0}; column masses "
                "refilled outward from the hyperplane x{1} = 0.".format(
                    axis, axis + 1))
    return s.derived(new, sentence)


def schwarz_symmetrize_set(s):
    """Replace the set by the centered ball of equal :math:`\\mu`-measure,
    with a fractional outer shell."""
    if not isinstance(s.density, RadialDensity):
        raise PreconditionError("Schwarz symmetrization needs a RadialDensity")
    spec = s.spec
    m = grid_measure(s)
    key = np.broadcast_to(spec.radius_key(), spec.shape).ravel()
    masses = s.cell_masses().ravel()
    levels, inverse = np.unique(key, return_inverse=True)
    group = np.bincount(inverse, weights=masses)
    prev = np.cumsum(group) - group
    frac = np.clip((m - prev) / group, 0.0, 1.0)
    radius = np.sqrt(levels) * spec.delta / 2
    # cells of the outermost ring of the inscribed ball stay empty
    allowed = radius < spec.L - spec.delta
    if np.any(frac[~allowed] > 0):
        raise WindowError(
            "measure {0:.6g} exceeds the mass of the largest ball inside the "
            "window (L = {1})".format(m, spec.L))
    occ = frac[inverse].reshape(spec.shape)
    R = s.density.H_inv(m)
    sentence = ("Schwarz symmetrization: centered ball of radius "
                "{0:.6g} (measure {1:.6g}).".format(R, m))
    return s.derived(occ, sentence)


def iterated_steiner(s, iterations=8, angle=GOLDEN_ANGLE):
    """
    Alternate Steiner symmetrizations along both axes of a 2-D set with
    bilinear rotations of the occupancy.

    Each iteration symmetrizes along :math:`x_1` and :math:`x_2`, records
    the symmetric difference to the Schwarz ball, then rotates by ``angle``
    degrees and renormalizes the measure lost or gained by resampling.
    Repeating 45 degrees stalls at sets with the symmetries of the square,
    hence the golden-angle default.

    :return: the final set and an OrderedDict with per-iteration measure
        drift and relative symmetric difference to the Schwarz ball
    """
    if s.spec.n != 2:
        raise PreconditionError("iterated_steiner is implemented for n = 2")
    if not isinstance(s.density, RadialDensity):
        raise PreconditionError("rotations need a RadialDensity")
    m0 = grid_measure(s)
    ball = schwarz_symmetrize_set(s).occ
    masses = s.cell_masses()
    drift, distance = [], []
    current = s
    for k in range(iterations):
        current = steiner_symmetrize_set(current, axis=0)
        current = steiner_symmetrize_set(current, axis=1)
        distance.append(float(np.sum(np.abs(current.occ - ball) * masses)) / m0)
        if k == iterations - 1:
            break
        occ = ndimage.rotate(current.occ, angle, reshape=False, order=1,
                             mode='constant', cval=0.0)
        occ = np.clip(occ, 0.0, 1.0)
        m = float(np.sum(occ * masses))
        drift.append((m - m0) / m0)
        occ = np.clip(occ * (m0 / m), 0.0, 1.0)
        current = current.derived(occ, "Rotate by {0:.4f} degrees (measure "
                                  "drift {1:.2e}).".format(angle, drift[-1]))
    if drift and max(abs(d) for d in drift) > 1e-2:
        warn("rotation resampling changed the measure by up to {0:.2%}".format(
            max(abs(d) for d in drift)))
    return current, OrderedDict([('drift', drift), ('distance', distance),
                                 ('angle', angle)])

# ---------------------------------------------------------------------------
# Verified inequalities

def _metadata(s, **extra):
    metadata = OrderedDict([('density', s.density.config()),
                            ('grid', s.spec.config())])
    metadata.update(extra)
    return metadata


def perimeter(s):
    """The estimator the acceptance checks use: boundary integral in 2-D,
    extrapolated Minkowski content in 3-D."""
    if s.spec.n == 2:
        return perimeter_boundary_integral(s if s.boolean else s.threshold())
    return perimeter_minkowski_extrapolated(s)


def column_intervals(column, edges):
    """End points :math:`z_1 < z_2 < \\dots` of the runs of occupied cells."""
    padded = np.concatenate([[0.0], column, [0.0]])
    change = np.flatnonzero(np.diff(padded) != 0)
    return edges[change]


def deficit_bound_integrand(psi, z):
    """:math:`\\sqrt{\\psi(z)\\,|\\sum_j \\psi(z_j) - 2\\psi(z)|}` for one
    column with interval end points ``z`` and
    :math:`2\\Psi(z) = \\sum_j (-1)^j \\Psi(z_j)`."""
    z = np.asarray(z, dtype=float)
    if z.size == 0:
        return 0.0, 0.0
    m = float(np.sum(psi.Psi(z[1::2]) - psi.Psi(z[0::2])))
    zc = psi.Psi_inv(m / 2)
    gap = float(np.sum(psi.psi(z))) - 2 * float(psi.psi(zc))
    return math.sqrt(float(psi.psi(zc)) * abs(gap)), zc


def steiner_deficit_bound(s, tol=0.05):
    """
    The perimeter drop under Steiner symmetrization of a column-wise
    polyhedral 2-D set, against the lower bound

    .. math::

        P(\\Pi) - P(\\Pi^*) \\ge \\frac{\\big(\\int \\sqrt{\\psi(z)
        |\\sum_j \\psi(z_j) - 2\\psi(z)|} \\, \\rho \\, dx'\\big)^2}{P(\\Pi^*)}.

    Both perimeters are exact for the cell polyhedron; :math:`\\Pi^*` is the
    continuum symmetral (column half-widths :math:`z` from
    :math:`2\\Psi(z) = \\mu_1(\\Pi(x'))`), not its grid rendering.
    """
    factors = _product_2d(s)
    psi, spec = factors.psi, s.spec
    edges = spec.axis_edges()
    x2 = spec.axis_centers()
    rho_c = factors.rho([x2])
    rho_e = factors.rho([spec.axis_edges()])

    integral = 0.0
    top_sym = 0.0
    masses = np.zeros(spec.N)
    for j in range(spec.N):
        z = column_intervals(s.occ[:, j], edges)
        if z.size == 0:
            continue
        value, zc = deficit_bound_integrand(psi, z)
        masses[j] = 2 * float(psi.Psi(zc))
        integral += value * rho_c[j] * spec.delta
        top_sym += 2 * float(psi.psi(zc)) * rho_c[j] * spec.delta
    m_pad = np.concatenate([[0.0], masses, [0.0]])
    side_sym = float(np.sum(np.abs(np.diff(m_pad)) * rho_e))
    p_sym = top_sym + side_sym
    p_set = column_perimeter(s)
    lhs = p_set - p_sym
    rhs = integral**2 / p_sym if p_sym > 0 else 0.0
    return ComparisonReport(
        'steiner_deficit_bound', lhs, rhs, tolerance=tol * rhs + 1e-12 * p_sym,
        metadata=_metadata(s, perimeter=p_set, perimeter_symmetral=p_sym))


def verify_steiner_perimeter(s, axis=0, tol=0.02):
    """:math:`P(M) \\ge P(M^*)` with relative slack ``tol``."""
    lhs = perimeter(s)
    rhs = perimeter(steiner_symmetrize_set(s, axis))
    return ComparisonReport('steiner_perimeter', lhs, rhs, tolerance=tol * rhs,
                            metadata=_metadata(s, axis=axis))


def verify_iso_nd(s, tol_disc=0.02, equality=False):
    """:math:`P_\\mu(M) \\ge I(\\mu(M))` with relative slack ``tol_disc``.

    With ``equality=True`` the report asserts ``|P - I| <= tol_disc * I``,
    the check for centered balls."""
    if not isinstance(s.density, RadialDensity):
        raise PreconditionError("verify_iso_nd needs a RadialDensity")
    m = grid_measure(s)
    lhs = perimeter(s)
    rhs = float(s.density.I(m))
    return ComparisonReport('verify_iso_nd', lhs, rhs, tolerance=tol_disc * rhs,
                            relation='==' if equality else '>=',
                            metadata=_metadata(s, measure=m))


def verify_parallel_containment(s, r):
    """
    Compare :math:`\\mu((M_r)^\\star) = \\mu(M_r)` (grid) with
    :math:`\\mu((M^\\star)_r) = H(H^{-1}(\\mu(M)) + r)` (closed form).

    The tolerance is one cell width of perimeter, :math:`I(\\mu(M_r))\\Delta`.
    """
    if not isinstance(s.density, RadialDensity):
        raise PreconditionError("parallel containment needs a RadialDensity")
    m = grid_measure(s)
    lhs = grid_measure(parallel_set(s, r))
    rhs = float(s.density.H(s.density.H_inv(m) + r))
    tol = float(s.density.I(lhs)) * s.spec.delta
    return ComparisonReport('verify_parallel_containment', lhs, rhs,
                            tolerance=tol, metadata=_metadata(s, r=r, measure=m))


def singular_minkowski_check(d, s, r=None, tol=0.02):
    """
    :math:`\\int_{\\partial M} |x|^{1-n} e^{a(|x|)} \\ge n\\omega_n e^{a(R)}`
    with :math:`\\mu(B_R) = \\mu(M)`, for a 2-D boolean star-shaped set.

    :param SingularRadialDensity d: the singular density
    :param GridSet s: boolean set whose density is ``d``
    :param float r: radius of the ball about the origin that must lie in
        ``s``; default four cells
    """
    if s.spec.n != 2 or not s.boolean:
        raise PreconditionError("singular_minkowski_check needs a boolean 2-D set")
    if s.density is not d:
        s = GridSet(s.spec, s.occ, d, boolean=True, report=s.report)
    r = 4 * s.spec.delta if r is None else r
    near = np.broadcast_to(sum(x**2 for x in s.spec.centers()) < r**2, s.spec.shape)
    if not np.all(s.occ[near] == 1):
        raise PreconditionError(
            "the set must contain a neighborhood of the origin; B_{0} is not "
            "inside".format(r))
    m = grid_measure(s)
    R = d.ball_radius(m)
    lhs = perimeter_boundary_integral(s)
    rhs = d.ball_perimeter(R)
    return ComparisonReport('singular_minkowski_check', lhs, rhs,
                            tolerance=tol * rhs,
                            metadata=_metadata(s, radius=R, measure=m))


# ---------------------------------------------------------------------------
# Random sets

def star_indicator(center, radius, amplitudes, frequencies, phases, directions):
    """Indicator of :math:`|x - c| < R(u)` with
    :math:`R(u) = R_0 (1 + \\sum_k a_k \\cos(f_k\\, u \\cdot v_k + \\phi_k))`."""
    def inside(coords):
        rel = [x - c for x, c in zip(coords, center)]
        dist = np.sqrt(sum(x**2 for x in rel))
        safe = np.where(dist > 0, dist, 1.0)
        R = 1.0
        for a, f, p, v in zip(amplitudes, frequencies, phases, directions):
            proj = sum(x * vi for x, vi in zip(rel, v)) / safe
            R = R + a * np.cos(f * proj + p)
        return dist < radius * R
    return inside


def random_star(rng, spec, radius_range=(0.4, 1.0), max_amplitude=0.25,
                centered=False):
    """Parameters of a random star-shaped body inside ``[-0.8L, 0.8L]^n``."""
    R0 = rng.uniform(*radius_range) * spec.L / 2.5
    k = int(rng.integers(1, 4))
    amplitudes = rng.uniform(0, max_amplitude / k, k)
    frequencies = rng.uniform(1.0, 4.0, k)
    phases = rng.uniform(0, 2 * np.pi, k)
    directions = rng.normal(size=(k, spec.n))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    reach = R0 * (1 + amplitudes.sum())
    room = max(0.8 * spec.L - reach, 0.0)
    center = np.zeros(spec.n) if centered else rng.uniform(-room, room, spec.n)
    if reach > 0.8 * spec.L:
        R0 *= 0.8 * spec.L / reach
    return star_indicator(center, R0, amplitudes, frequencies, phases, directions)


def random_blob(rng, spec, density, components=None, centered=False):
    """Union of 1 to 3 random star-shaped bodies."""
    k = int(rng.integers(1, 4)) if components is None else components
    stars = [random_star(rng, spec, centered=centered) for _ in range(k)]

    def inside(coords):
        out = False
        for star in stars:
            out = out | star(coords)
        return out

    return GridSet.from_indicator(spec, density, inside,
                                  "Random blob of {0} star-shaped bodies.".format(k))


def random_polyhedral_set(rng, spec, density, max_boxes=4):
    """Union of cell-aligned rectangles inside ``[-0.8L, 0.8L]^2``."""
    k = int(rng.integers(2, max_boxes + 1))
    occ = np.zeros(spec.shape)
    lim = int(0.1 * spec.N)
    for _ in range(k):
        lo = rng.integers(lim, spec.N - lim - 2, spec.n)
        size = rng.integers(2, max(3, spec.N // 4), spec.n)
        hi = np.minimum(lo + size, spec.N - lim)
        occ[tuple(slice(a, b) for a, b in zip(lo, hi))] = 1.0
    return GridSet(spec, occ, density, boolean=True,
                   report=["Random union of {0} cell-aligned boxes.".format(k)])


def random_star_about_origin(rng, spec, density, R=1.0, amplitude=0.2):
    """Star-shaped set about the origin: a perturbed ball of radius ``R``."""
    k = int(rng.integers(1, 4))
    amplitudes = rng.uniform(0, amplitude / k, k)
    frequencies = rng.uniform(1.0, 4.0, k)
    phases = rng.uniform(0, 2 * np.pi, k)
    directions = rng.normal(size=(k, spec.n))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    inside = star_indicator(np.zeros(spec.n), R, amplitudes, frequencies,
                            phases, directions)
    return GridSet.from_indicator(spec, density, inside,
                                  "Star-shaped set about the origin.")


# ---------------------------------------------------------------------------
# Suites

def _isond_case(args):
    kind, spec, density, param = args
    if kind == "disk":
        s = GridSet.disk(spec, density, param)
        return [verify_iso_nd(s, tol_disc=0.01, equality=True)]
    s = random_blob(np.random.default_rng(param), spec, density)
    return [verify_iso_nd(s), verify_parallel_containment(s, 0.2)]


def isond_suite(c=1.0, n=2, L=2.5, N=512, blobs=200, seed=0, threads=None):
    """Isoperimetric inequality for centered balls and random blobs."""
    spec = GridSpec(n, L, N)
    density = RadialDensity(n, c)
    jobs = [("disk", spec, density, k / 10.0) for k in range(3, 16, 2)]
    seeds = np.random.default_rng(seed).integers(0, 2**63 - 1, blobs)
    jobs += [('blob', spec, density, int(sd)) for sd in seeds]
    cases = []
    for reports in parallel_map(_isond_case, jobs, threads):
        cases.extend(reports)
    return SuiteReport('isond', cases, OrderedDict([
        ('density', density.config()), ('grid', spec.config()),
        ('blobs', blobs), ('seed', seed)]))


def _steiner_case(args):
    kind, spec, density, seed = args
    rng = np.random.default_rng(seed)
    if kind == 'blob':
        s = random_blob(rng, spec, density)
        return [verify_steiner_perimeter(s)]
    return [steiner_deficit_bound(random_polyhedral_set(rng, spec, density))]


def steiner_suite(cs=(0.0, 1.0), L=2.5, N=512, blobs=200, polyhedra=50, seed=0,
                  threads=None):
    """Perimeter monotonicity and the deficit bound under Steiner
    symmetrization."""
    spec = GridSpec(2, L, N)
    rng = np.random.default_rng(seed)
    jobs = []
    for c in cs:
        density = RadialDensity(2, c)
        jobs += [('blob', spec, density, int(sd))
                 for sd in rng.integers(0, 2**63 - 1, blobs)]
        jobs += [('poly', spec, density, int(sd))
                 for sd in rng.integers(0, 2**63 - 1, polyhedra)]
    cases = []
    for reports in parallel_map(_steiner_case, jobs, threads):
        cases.extend(reports)
    return SuiteReport('steiner', cases, OrderedDict([
        ('c', list(cs)), ('grid', spec.config()), ('blobs', blobs),
        ('polyhedra', polyhedra), ('seed', seed)]))


def singular_suite(a=None, L=2.5, N=512, R=1.0, perturbations=20, seed=0,
                   threads=None):
    """The ball inequality for :math:`|x|^{-1} e^{a(|x|)}` in the plane."""
    d = density_from_config({'kind': 'singular-radial', 'n': 2,
                             'a': a or {'kind': 'affine',
                                        'coefficients': [0.0, 1.0]}})
    spec = GridSpec(2, L, N)
    rng = np.random.default_rng(seed)
    seeds = [int(sd) for sd in rng.integers(0, 2**63 - 1, perturbations)]

    def case(sd):
        if sd is None:
            return singular_minkowski_check(d, GridSet.disk(spec, d, R), tol=0.01)
        s = random_star_about_origin(np.random.default_rng(sd), spec, d, R)
        return singular_minkowski_check(d, s)

    cases = parallel_map(case, [None] + seeds, threads)
    return SuiteReport('singular', cases, OrderedDict([
        ('density', d.config()), ('grid', spec.config()), ('R', R),
        ('seed', seed)]))
