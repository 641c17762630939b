# -*- coding: utf-8 -*-
from __future__ import division, print_function, absolute_import
from murearrange.density import Density1D, RadialDensity, ProductDensity, SingularRadialDensity
from murearrange.rearrange1d import IntervalSet
from murearrange.gridsets import GridSpec, GridSet
from murearrange.rearrangefn import GridFunction, LayerProfile
from murearrange.ellipticcompare import EllipticProblem
from murearrange.report import ComparisonReport, SuiteReport
from murearrange.tests import main as test
from murearrange.hdf5.hdf5_util import h5ls
