#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# report.py

"""
Structured records of verified inequalities.

A :class:`ComparisonReport` keeps both sides of one inequality, the deficit
``lhs - rhs`` exactly as computed, the absolute tolerance and the metadata
needed to reproduce the evaluation (operation, density, grid, seed).  A
:class:`SuiteReport` aggregates the reports of a verification suite.

The relation is one of ``'>='``, ``'<='`` or ``'=='``; the *slack* is the
signed distance to failure, so a report passes iff ``slack >= 0``.

"""

from __future__ import division, print_function, absolute_import
import json
from collections import OrderedDict

import numpy as np

from murearrange.util import format_report, eng

RELATIONS = ('>=', '<=', '==')


def _plain(value):
    """Convert numpy scalars and arrays into JSON-friendly python values."""
    if isinstance(value, dict):
        return OrderedDict((str(k), _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if not np.isfinite(value):
            return repr(value)
        return value
    return value


def dumps(obj):
    """Deterministic JSON text: sorted keys, fixed indentation."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


class ComparisonReport(object):

    def __init__(self, operation, lhs, rhs, tolerance=0.0, relation='>=',
                 metadata=None, details=None):
        """
        One evaluated inequality.

        :param str operation: name of the operation that produced the report
        :param float lhs: left-hand side
        :param float rhs: right-hand side
        :param float tolerance: absolute tolerance, >= 0
        :param str relation: expected relation between lhs and rhs
        :param dict metadata: density, grid, seed and free-form extras
        :param list details: sub-reports (e.g. one per exponent q)
        """
        if relation not in RELATIONS:
            raise ValueError(
                "relation must be one of {0}, got {1!r}".format(
                    RELATIONS, relation))
        if not tolerance >= 0:
            raise ValueError(
                "tolerance must be >= 0, got {0}".format(tolerance))
        self.operation = operation
        self.lhs = float(lhs)
        self.rhs = float(rhs)
        self.deficit = self.lhs - self.rhs
        self.tolerance = float(tolerance)
        self.relation = relation
        self.metadata = OrderedDict(metadata or {})
        self.details = list(details or [])

    @property
    def slack(self):
        if self.relation == '>=':
            return self.deficit + self.tolerance
        elif self.relation == '<=':
            return self.tolerance - self.deficit
        return self.tolerance - abs(self.deficit)

    @property
    def passed(self):
        return bool(self.slack >= 0) and all(d.passed for d in self.details)

    def failures(self):
        """This report and its sub-reports that miss their tolerance."""
        failed = [] if self.slack >= 0 else [self]
        for d in self.details:
            failed.extend(d.failures())
        return failed

    def to_dict(self):
        return OrderedDict([
            ('operation', self.operation),
            ('lhs', self.lhs),
            ('rhs', self.rhs),
            ('deficit', self.deficit),
            ('relation', self.relation),
            ('tolerance', self.tolerance),
            ('passed', self.passed),
            ('metadata', self.metadata),
            ('details', [d.to_dict() for d in self.details]),
        ])

    @classmethod
    def from_dict(cls, data):
        return cls(data['operation'], data['lhs'], data['rhs'],
                   tolerance=data.get('tolerance', 0.0),
                   relation=data.get('relation', '>='),
                   metadata=data.get('metadata'),
                   details=[cls.from_dict(d) for d in data.get('details', [])])

    def to_json(self):
        return dumps(self.to_dict())

    def __repr__(self):
        temp = []
        temp.append("{0}: lhs = {1}, rhs = {2}, deficit = {3}".format(
            self.operation, eng(self.lhs), eng(self.rhs), eng(self.deficit)))
        temp.append("expected lhs {0} rhs within {1}: {2}".format(
            self.relation, eng(self.tolerance),
            'passed' if self.passed else 'FAILED'))
        for d in self.details:
            temp.append(repr(d))
        return format_report("Comparison report", temp)


class SuiteReport(object):

    def __init__(self, name, cases, metadata=None):
        """
        Aggregate of the reports of one verification suite.

        :param str name: suite name (``iso1d``, ``isond``, ...)
        :param list cases: :class:`ComparisonReport` objects
        :param dict metadata: configuration, seed, grid and tolerances
        """
        self.name = name
        self.cases = list(cases)
        self.metadata = OrderedDict(metadata or {})

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def worst(self):
        """The case with the smallest slack, or None for an empty suite."""
        if not self.cases:
            return None
        slacks = np.array([c.slack for c in self.cases])
        return self.cases[int(np.argmin(slacks))]

    def summary(self):
        worst = self.worst()
        by_operation = OrderedDict()
        for c in self.cases:
            entry = by_operation.setdefault(
                c.operation, OrderedDict([('cases', 0), ('failed', 0),
                                          ('min_deficit', np.inf),
                                          ('max_deficit', -np.inf)]))
            entry['cases'] += 1
            entry['failed'] += 0 if c.passed else 1
            entry['min_deficit'] = min(entry['min_deficit'], c.deficit)
            entry['max_deficit'] = max(entry['max_deficit'], c.deficit)
        return OrderedDict([
            ('suite', self.name),
            ('cases', len(self.cases)),
            ('failed', sum(0 if c.passed else 1 for c in self.cases)),
            ('passed', self.passed),
            ('by_operation', by_operation),
            ('worst', worst.to_dict() if worst is not None else None),
        ])

    def to_dict(self):
        data = self.summary()
        data['metadata'] = self.metadata
        data['failures'] = [c.to_dict() for c in self.cases if not c.passed]
        return data

    def to_json(self):
        return dumps(self.to_dict())

    def __repr__(self):
        s = self.summary()
        temp = ["{0}: {1} cases, {2} failed".format(
            self.name, s['cases'], s['failed'])]
        for op, entry in s['by_operation'].items():
            temp.append("{0}: deficit in [{1}, {2}]".format(
                op, eng(entry['min_deficit']), eng(entry['max_deficit'])))
        return format_report("Suite report", temp)
