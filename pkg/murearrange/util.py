#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# util.py
# Helpers shared by the symmetrization modules: number formatting,
# exceptions, deterministic thread pools and small file utilities.

from __future__ import division, print_function, absolute_import
import math
import datetime
import errno
import os
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

THREADS_ENV = 'MU_REARRANGE_THREADS'


class MuRearrangeError(Exception):
    """Base class of every error raised by the package."""


class DomainError(MuRearrangeError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ParameterError(MuRearrangeError, ValueError):
    """Numerical parameter outside its admissible range."""


class PreconditionError(MuRearrangeError, ValueError):
    """A hypothesis required by an inequality does not hold."""


class WindowError(MuRearrangeError, ValueError):
    """Set support touches, or would escape, the computational window."""


class QuadratureError(MuRearrangeError, RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, message, achieved=None):
        super(QuadratureError, self).__init__(message)
        self.achieved = achieved


class RangeError(MuRearrangeError, RuntimeError):
    """Bracket expansion failed while inverting a monotone transform."""

    def __init__(self, message, target=None):
        super(RangeError, self).__init__(message)
        self.target = target


class ConvergenceError(MuRearrangeError, RuntimeError):
    """Iterative solver stopped before meeting its tolerance."""

    def __init__(self, message, history=None):
        super(ConvergenceError, self).__init__(message)
        self.history = list(history) if history is not None else []


class AccuracyWarning(UserWarning):
    """Result computed, but with reduced accuracy."""


def warn(message):
    warnings.warn(message, AccuracyWarning, stacklevel=3)


# Modified from http://code.activestate.com/recipes/578238-engineering-notation/

def powerise10(x):
    """Return x as a * 10 ^ b with 1 <= |a| < 10"""
    if x == 0:
        return 0, 0
    neg = x < 0
    if neg:
        x = -x
    b = int(math.floor(math.log10(x)))
    a = x / 10**b
    if neg:
        a = -a
    return a, b


def eng(x):
    """Return a string representing x in an engineer-friendly notation"""
    if not np.isfinite(x):
        return str(x)
    a, b = powerise10(x)
    if -3 < b < 3:
        return "%.4g" % x
    a = a * 10**(b % 3)
    b = b - b % 3
    return "%.4gE%s" % (a, b)


def silent_remove(filename):
    """If ``filename`` exists, delete it. Otherwise, return nothing.
       See http://stackoverflow.com/q/10840533/2823213."""
    try:
        os.remove(filename)
    except OSError as e:
        if e.errno != errno.ENOENT:
            raise


def timestamp():
    """ISO-8601 wall-clock time, kept out of compared report bodies."""
    return datetime.datetime.now().strftime("%Y-%m-%dT%H:%M:%S")


def infer_step(x):
    """Spacing of evenly spaced coordinates ``x``."""
    dx_array = np.diff(np.asarray(x, dtype=float))
    if dx_array.size == 0:
        raise ValueError("Need at least two grid points to infer a step.")
    dx_range = dx_array.max() / dx_array.min()
    if dx_range > 1.01 or dx_range < 0:
        raise ValueError("Grid points must be evenly spaced.")
    else:
        return dx_array.mean()


def thread_count():
    """Worker cap from ``MU_REARRANGE_THREADS`` (default: all cores)."""
    value = os.environ.get(THREADS_ENV)
    if value is None or value.strip() == '':
        return os.cpu_count() or 1
    try:
        n = int(value)
    except ValueError:
        raise ParameterError(
            "{0}={1!r} is not an integer".format(THREADS_ENV, value))
    if n < 1:
        raise ParameterError(
            "{0} must be >= 1, got {1}".format(THREADS_ENV, n))
    return n


def parallel_map(fcn, items, threads=None):
    """Map ``fcn`` over ``items`` on a thread pool.

    Results come back in input order, so any reduction the caller performs
    afterwards is independent of the worker count."""
    items = list(items)
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fcn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fcn, items))


def format_report(title, report):
    """Render a report list the way every object's ``__repr__`` does."""
    temp = []
    temp.append("")
    temp.append(title)
    temp.append("=" * len(title))
    temp.append("\n\n".join(["* " + msg for msg in report]))
    return '\n'.join(temp)
