#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# cli.py

"""

Batch front end.

::

    murearrange verify iso1d --c 1 --cases 10000 --seed 7 --out reports
    murearrange profile --density gauss --c 1 --n 2 --m-max 20
    murearrange symmetrize --mode schwarz --in blob.mugrid --output ball.mugrid
    murearrange solve --config problem.json --out solution
    murearrange report reports/*.json --output summary.csv

Every subcommand takes ``--config FILE`` (JSON) and the inline flags
``--c --n --N --L --p --q --seed --tol --cases --out``; inline flags win
over the file.  Suite reports are written as ``<suite>.json`` with a
``<suite>.meta.json`` sidecar holding the wall-clock timestamp, so two runs
with the same configuration produce byte-identical reports.

Exit status: 0 when every checked inequality holds, 1 when a report fails
its tolerance, 2 for a usage or configuration error, 3 for a numerical
failure.

"""

from __future__ import division, print_function, absolute_import
import argparse
import json
import os
import sys
from argparse import RawTextHelpFormatter
from collections import OrderedDict

import numpy as np

from murearrange import io
from murearrange.density import (
    Density1D,
    RadialDensity,
    density_from_config,
    iso_fn_J,
    one_d_profile,
)
from murearrange.report import ComparisonReport, dumps
from murearrange.util import MuRearrangeError, ParameterError, timestamp

SUITES = ('iso1d', 'isond', 'steiner', 'properties', 'polya', 'comparison',
          'rayleigh', 'singular')

INLINE = (('c', float), ('n', int), ('N', int), ('L', float), ('p', float),
          ('q', float), ('seed', int), ('tol', float), ('cases', int),
          ('out', str))

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3


class RunConfig(object):

    def __init__(self, command, options=None):
        """
        Settings of one run.

        :param str command: subcommand name
        :param dict options: merged configuration; grid fields ``n, L, N``
            and ``density`` may be nested or given inline
        """
        self.command = command
        self.options = OrderedDict(options or {})
        self.validate()

    @classmethod
    def from_args(cls, args):
        """Merge ``--config`` with the inline flags; inline flags win."""
        options = OrderedDict()
        if getattr(args, 'config', None):
            try:
                with open(args.config) as f:
                    loaded = json.load(f, object_pairs_hook=OrderedDict)
            except (IOError, OSError) as e:
                raise ParameterError("config: cannot read {0}: {1}".format(
                    args.config, e))
            except ValueError as e:
                raise ParameterError("config: {0} is not valid JSON: {1}".format(
                    args.config, e))
            if not isinstance(loaded, dict):
                raise ParameterError("config: top level must be a JSON object")
            options.update(loaded)
            grid = options.pop('grid', {})
            for key in ('n', 'L', 'N'):
                if key in grid:
                    options.setdefault(key, grid[key])
        for key, _ in INLINE:
            value = getattr(args, key, None)
            if value is not None:
                options[key] = value
        for key, value in vars(args).items():
            if key not in options and key not in ('config', 'command') and \
                    value is not None:
                options[key] = value
        return cls(args.command, options)

    def get(self, key, default=None):
        value = self.options.get(key)
        return default if value is None else value

    def validate(self):
        o = self.options
        for key in ('tol',):
            if key in o and o[key] is not None and not o[key] >= 0:
                raise ParameterError("config.{0} must be >= 0, got {1}".format(key, o[key]))
        if o.get('seed') is not None and int(o['seed']) < 0:
            raise ParameterError("config.seed must be an unsigned integer, got {0}".format(
                o['seed']))
        if o.get('N') is not None and (int(o['N']) <= 0 or int(o['N']) % 2):
            raise ParameterError("config.grid.N must be a positive even integer, "
                                 "got {0}".format(o['N']))
        if o.get('n') is not None and int(o['n']) < 1:
            raise ParameterError("config.grid.n must be >= 1, got {0}".format(o['n']))
        if o.get('L') is not None and not o['L'] > 0:
            raise ParameterError("config.grid.L must be > 0, got {0}".format(o['L']))
        if o.get('cases') is not None and int(o['cases']) < 0:
            raise ParameterError("config.cases must be >= 0, got {0}".format(o['cases']))

    def to_dict(self):
        data = OrderedDict([('command', self.command)])
        data.update((k, v) for k, v in self.options.items() if k != 'out')
        return data


# ---------------------------------------------------------------------------
# Output

def _out_dir(config):
    out = config.get('out')
    if out is not None and not os.path.isdir(out):
        os.makedirs(out)
    return out


def write_report(config, name, report):
    """Write ``<name>.json`` and ``<name>.meta.json`` into ``--out``."""
    out = _out_dir(config)
    report.metadata['config'] = config.to_dict()
    text = report.to_json()
    if out is None:
        return None
    path = os.path.join(out, name + '.json')
    with open(path, 'w') as f:
        f.write(text)
    with open(os.path.join(out, name + '.meta.json'), 'w') as f:
        f.write(dumps(OrderedDict([('timestamp', timestamp()),
                                   ('report', name + '.json')])))
    return path


def _status(report):
    if report.passed:
        return EXIT_PASS
    failures = report.failures() if isinstance(report, ComparisonReport) else \
        [c for c in report.cases if not c.passed]
    print("FAILED: {0} report(s) miss their tolerance; first:".format(len(failures)))
    print(failures[0].to_json())
    return EXIT_FAIL


# ---------------------------------------------------------------------------
# Subcommands

def run_verify(config):
    from murearrange import (ellipticcompare, gridsets, rearrange1d,
                             rearrangefn, spectral)
    suite = config.get('suite')
    seed = config.get('seed', 0)
    cases = config.get('cases')
    c = config.get('c')
    p = config.get('p')

    def pick(value, default):
        return default if value is None else value

    def listed(value, default):
        return default if value is None else [value]

    if suite == 'iso1d':
        report = rearrange1d.iso1d_suite(
            cs=listed(c, (0.0, 0.5, 1.0)),
            cases=pick(cases, 10000), seed=seed)
    elif suite == 'isond':
        report = gridsets.isond_suite(
            c=pick(c, 1.0), n=config.get('n', 2), L=config.get('L', 2.5),
            N=config.get('N', 512), blobs=pick(cases, 200), seed=seed)
    elif suite == 'steiner':
        report = gridsets.steiner_suite(
            cs=listed(c, (0.0, 1.0)),
            L=config.get('L', 2.5), N=config.get('N', 512),
            blobs=pick(cases, 200), seed=seed)
    elif suite == 'properties':
        report = rearrangefn.properties_suite(
            c=pick(c, 1.0), n=config.get('n', 2), L=config.get('L', 2.5),
            N=config.get('N', 128), pairs=pick(cases, 100), seed=seed)
    elif suite == 'polya':
        report = rearrangefn.polya_suite(
            cs=listed(c, (0.0, 1.0)),
            ps=listed(p, (1.0, 2.0, 3.0)),
            n=config.get('n', 2), L=config.get('L', 2.5),
            N=config.get('N', 128), bumps=pick(cases, 50), seed=seed)
    elif suite == 'comparison':
        report = ellipticcompare.comparison_suite(
            cs=listed(c, (0.0, 1.0)),
            ps=listed(p, (2.0, 1.5)),
            N=config.get('N', 256), L=config.get('L', 1.25), seed=seed)
    elif suite == 'rayleigh':
        report = spectral.rayleigh_suite(
            c=pick(c, 1.0), n=config.get('n', 2), L=config.get('L', 4.0),
            N=config.get('N', 512), bumps=pick(cases, 100), seed=seed,
            tol=config.get('tol', 0.02))
    elif suite == 'singular':
        density = config.get('density')
        a = density.get('a') if isinstance(density, dict) else None
        report = gridsets.singular_suite(
            a=a, L=config.get('L', 2.5), N=config.get('N', 512),
            perturbations=pick(cases, 20), seed=seed)
    else:
        raise ParameterError("config.suite must be one of {0}, got {1!r}".format(
            ", ".join(SUITES), suite))
    write_report(config, suite, report)
    s = report.summary()
    print("{0}: {1} cases, {2} failed, worst deficit {3}".format(
        suite, s['cases'], s['failed'],
        s['worst']['deficit'] if s['worst'] else 'n/a'))
    return _status(report)


def profile_table(config):
    """Rows ``m, J(m), I1(m), r, I(m)`` for ``m`` in ``[0, m_max]``."""
    c = config.get('c', 0.0)
    n = config.get('n', 2)
    m_max = config.get('m_max', 20.0)
    num = config.get('num', 200)
    kind = config.get('density_kind', 'gauss')
    if kind == 'gauss':
        line = Density1D('gauss', c)
    else:
        cfg = config.get('density')
        if not isinstance(cfg, dict):
            raise ParameterError("config.density must describe the tabulated density")
        line = density_from_config(cfg)
    radial = RadialDensity(n, c) if kind == 'gauss' and n >= 2 else None
    m = np.linspace(0.0, m_max, num + 1)
    J = iso_fn_J(line, m)
    I1 = one_d_profile(line, m)
    if radial is not None:
        r, I = radial.H_inv(m), radial.I(m)
    else:
        r, I = np.full(m.shape, np.nan), np.full(m.shape, np.nan)
    return np.column_stack([m, J, I1, r, I])


def run_profile(config):
    rows = profile_table(config)
    columns = ['m', 'J', 'I1', 'r', 'I']
    comment = "profile density={0} c={1} n={2}".format(
        config.get('density_kind', 'gauss'), config.get('c', 0.0), config.get('n', 2))
    out = _out_dir(config)
    dest = os.path.join(out, 'profile.csv') if out else sys.stdout
    io.write_table(dest, columns, rows, comment)
    return EXIT_PASS


def run_symmetrize(config):
    from murearrange.gridsets import GridSet, schwarz_symmetrize_set, steiner_symmetrize_set
    from murearrange.rearrangefn import schwarz_symmetrize_fn, steiner_symmetrize_fn
    src = config.get('input')
    if src is None:
        raise ParameterError("config.input: symmetrize needs --in FILE")
    obj = io.read_grid(src)
    mode = config.get('mode', 'schwarz')
    if mode not in ('schwarz', 'steiner'):
        raise ParameterError("config.mode must be 'schwarz' or 'steiner', got {0!r}".format(mode))
    if isinstance(obj, GridSet):
        new = schwarz_symmetrize_set(obj) if mode == 'schwarz' else \
            steiner_symmetrize_set(obj, axis=config.get('axis', 0))
    else:
        new = schwarz_symmetrize_fn(obj) if mode == 'schwarz' else \
            steiner_symmetrize_fn(obj)
    dest = config.get('output')
    if dest is None:
        out = _out_dir(config)
        base = os.path.splitext(os.path.basename(src))[0]
        dest = os.path.join(out or '.', "{0}.{1}.mugrid".format(base, mode))
    io.write_grid(new, dest)
    print("{0} symmetral written to {1}".format(mode, dest))
    return EXIT_PASS


def run_solve(config):
    from murearrange.ellipticcompare import (compare, problem_from_config,
                                             solve_weighted_plaplace)
    cfg = OrderedDict()
    for key in ('domain', 'f', 'density', 'solver'):
        if config.get(key) is not None:
            cfg[key] = config.get(key)
    cfg['p'] = config.get('p', 2.0)
    cfg['grid'] = OrderedDict([('n', config.get('n', 2)), ('L', config.get('L', 1.25)),
                               ('N', config.get('N', 256))])
    if config.get('c') is not None:
        density = OrderedDict(cfg.get('density', {'kind': 'gauss'}))
        density['c'] = config.get('c')
        cfg['density'] = density
    prob = problem_from_config(cfg)
    qs = [config.get('q')] if config.get('q') is not None else None
    report = compare(prob, qs=qs, tol=config.get('tol'))
    out = _out_dir(config)
    if out is not None:
        io.write_grid(solve_weighted_plaplace(prob), os.path.join(out, 'solution.mugrid'))
    write_report(config, 'solve', report)
    print("solve: max(u* - v) = {0:.4g}, passed = {1}".format(report.lhs, report.passed))
    return _status(report)


def summary_rows(paths):
    """One row per suite and operation of the given JSON reports."""
    rows = []
    for path in paths:
        data = io.read_json(path)
        if 'by_operation' in data:
            for op, entry in data['by_operation'].items():
                rows.append([data['suite'], op, entry['cases'], entry['failed'],
                             entry['min_deficit'], entry['max_deficit']])
        elif 'operation' in data:
            rows.append([os.path.basename(path), data['operation'], 1,
                         0 if data['passed'] else 1, data['deficit'], data['deficit']])
        else:
            raise ParameterError("config.reports: {0} is not a report".format(path))
    return rows


def run_report(config):
    paths = config.get('reports') or []
    if not paths:
        raise ParameterError("config.reports: report needs at least one JSON file")
    rows = [[r[0], r[1], str(r[2]), str(r[3]), repr(float(r[4])), repr(float(r[5]))]
            for r in summary_rows(paths)]
    dest = config.get('output') or sys.stdout
    io.write_table(dest, ['suite', 'operation', 'cases', 'failed', 'min_deficit',
                          'max_deficit'], rows)
    failed = any(r[3] != '0' for r in rows)
    return EXIT_FAIL if failed else EXIT_PASS


COMMANDS = OrderedDict([
    ('verify', run_verify),
    ('profile', run_profile),
    ('symmetrize', run_symmetrize),
    ('solve', run_solve),
    ('report', run_report),
])


def run(config):
    """Dispatch a :class:`RunConfig`; returns the exit status."""
    return COMMANDS[config.command](config)


# ---------------------------------------------------------------------------
# Parser

def _common():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--config', help='JSON configuration file')
    for key, kind in INLINE:
        parent.add_argument('--' + key, type=kind, default=None)
    return parent


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog='murearrange',
        formatter_class=RawTextHelpFormatter,
        description="Weighted symmetrization and its inequalities.\n"
        "Example usage:\n"
        "    murearrange verify iso1d --c 1 --cases 10000 --seed 7\n\n",
    )
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('verify', parents=[common], help='run a verification suite')
    p.add_argument('suite', choices=SUITES)

    p = sub.add_parser('profile', parents=[common], help='tabulate J, I1, H and I')
    p.add_argument('--density', dest='density_kind', default='gauss',
                   choices=['gauss', 'tabulated'])
    p.add_argument('--m-max', dest='m_max', type=float, default=20.0)
    p.add_argument('--num', type=int, default=200)

    p = sub.add_parser('symmetrize', parents=[common], help='symmetrize a grid file')
    p.add_argument('--mode', default='schwarz', choices=['schwarz', 'steiner'])
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--output', default=None)
    p.add_argument('--axis', type=int, default=None)

    sub.add_parser('solve', parents=[common], help='solve and compare an elliptic problem')

    p = sub.add_parser('report', parents=[common], help='merge JSON reports into CSV')
    p.add_argument('reports', nargs='+')
    p.add_argument('--output', default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        config = RunConfig.from_args(args)
        return run(config)
    except MuRearrangeError as e:
        print("error: {0}".format(e), file=sys.stderr)
        return EXIT_NUMERICAL if isinstance(e, RuntimeError) else EXIT_USAGE
    except (IOError, OSError, ValueError, KeyError, TypeError) as e:
        print("usage error: {0}".format(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
