# -*- coding: utf-8 -*-
"""
Text formats for grids and reports.

A MUGRID file starts with the header line::

    MUGRID v1 [FN] n N L density-id

where ``FN`` marks a function (otherwise the values are set occupancies)
and ``density-id`` is the whitespace-free JSON of
:func:`murearrange.density.density_id`.  The :math:`N^n` values follow as
text floats, one line per run along the last axis, in row-major order.
The CSV variant puts the header after ``# `` and separates values with
commas.

"""

from __future__ import division, print_function, absolute_import
import json

import numpy as np
import six

from murearrange.density import density_from_config, density_id
from murearrange.gridsets import GridSet, GridSpec
from murearrange.rearrangefn import GridFunction
from murearrange.report import dumps

MAGIC = 'MUGRID'
VERSION = 'v1'


def _read_text(src):
    if isinstance(src, six.string_types):
        with open(src) as f:
            return f.read()
    return src.read()


def _write_text(dest, text):
    if isinstance(dest, six.string_types):
        with open(dest, 'w') as f:
            f.write(text)
    else:
        dest.write(text)


def header(obj):
    """The MUGRID header line of a GridSet or GridFunction."""
    spec = obj.spec
    tag = ['FN'] if isinstance(obj, GridFunction) else []
    fields = [MAGIC, VERSION] + tag + [str(spec.n), str(spec.N), repr(float(spec.L)),
                                       density_id(obj.density)]
    return " ".join(fields)


def parse_header(line):
    """``(is_function, GridSpec, density config)`` from a header line."""
    fields = line.strip().lstrip('#').split()
    if len(fields) < 2 or fields[0] != MAGIC:
        raise ValueError("not a MUGRID header: {0!r}".format(line[:60]))
    if fields[1] != VERSION:
        raise ValueError("unsupported MUGRID version {0!r}".format(fields[1]))
    is_function = len(fields) > 2 and fields[2] == 'FN'
    rest = fields[3:] if is_function else fields[2:]
    if len(rest) != 4:
        raise ValueError("MUGRID header needs n N L density-id, got {0!r}".format(
            " ".join(rest)))
    n, N, L = int(rest[0]), int(rest[1]), float(rest[2])
    return is_function, GridSpec(n, L, N), json.loads(rest[3])


def format_grid(obj, sep=' '):
    """Header and value lines of a grid object as one string."""
    values = obj.values if isinstance(obj, GridFunction) else obj.occ
    rows = np.asarray(values).reshape(-1, obj.spec.N)
    lines = [sep.join(repr(float(v)) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_grid(obj, dest, fmt=None):
    """
    Write a GridSet or GridFunction.

    :param dest: path or writable handle
    :param str fmt: ``'mugrid'`` or ``'csv'``; taken from a ``.csv``
        extension when ``None``
    """
    if fmt is None:
        fmt = 'csv' if isinstance(dest, six.string_types) and dest.endswith('.csv') \
            else 'mugrid'
    if fmt == 'mugrid':
        text = header(obj) + "\n" + format_grid(obj)
    elif fmt == 'csv':
        text = "# " + header(obj) + "\n" + format_grid(obj, sep=',')
    else:
        raise ValueError("fmt must be 'mugrid' or 'csv', got {0!r}".format(fmt))
    _write_text(dest, text)


def read_grid(src, density=None):
    """
    Read a MUGRID or CSV grid file.

    :param src: path or readable handle
    :param density: override the density named in the header
    :return: GridSet, or GridFunction for ``FN`` files
    """
    text = _read_text(src)
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty grid file")
    is_function, spec, cfg = parse_header(lines[0])
    if density is None:
        density = density_from_config(cfg)
    body = " ".join(lines[1:]).replace(',', ' ')
    values = np.array(body.split(), dtype=float)
    if values.size != spec.N**spec.n:
        raise ValueError("expected {0} values for {1}, found {2}".format(
            spec.N**spec.n, spec, values.size))
    values = values.reshape(spec.shape)
    sentence = "Read from {0}.".format(src if isinstance(src, six.string_types)
                                      else 'a stream')
    if is_function:
        compact = not np.any(values[spec.boundary_mask()] > 0)
        return GridFunction(spec, values, density, compact=compact,
                            report=[sentence])
    return GridSet(spec, values, density, report=[sentence])


def write_json(obj, dest):
    """Write a report (anything with ``to_dict``) or a plain mapping."""
    data = obj.to_dict() if hasattr(obj, 'to_dict') else obj
    _write_text(dest, dumps(data))


def read_json(src):
    return json.loads(_read_text(src))


def write_table(dest, columns, rows, comment=None):
    """CSV table with a header row and an optional ``#`` comment line."""
    lines = [] if comment is None else ["# " + comment]
    lines.append(",".join(columns))
    lines += [",".join(v if isinstance(v, six.string_types) else repr(float(v))
                       for v in row) for row in rows]
    _write_text(dest, "\n".join(lines) + "\n")
