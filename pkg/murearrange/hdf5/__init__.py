"""
Attribute conventions for grids stored in HDF5_ files.

HDF5 Format Specification
-------------------------

A set or a function on an :math:`N^n` grid is stored as

::

    /
    attributes: {'date': '2026-10-17',
                 'time': '13:00:00',
                 'hdf5_version': 'murearrange-v1',
                 'kind': 'set',  # or 'function'
                 'density': '{"c":1.0,"kind":"gauss","n":2}',
                 'help': 'What is this grid?'}
        x1
        attributes: {'name': 'x1',
                     'unit': '1',
                     'label': 'x1 [1]',
                     'label_latex': r'$x1 \\: [\\mathrm{1}]$',
                     'initial': -2.4951171875,
                     'step': 0.009765625,
                     'help': 'Cell centers along axis 0.'}
            [-2.4951171875, ..., 2.4951171875]

        x2
            (same attributes, axis 1)

        y
        attributes: {'name': 'occupancy',  # or 'value'
                     'unit': '1',
                     'label': 'occupancy [1]',
                     'label_latex': r'$occupancy \\: [\\mathrm{1}]$',
                     'abscissa': 'x1,x2',
                     'help': 'Occupancy per cell.'}
            [[0, 0, ...], ...]

Only ``name`` and ``unit`` are required; labels and ``initial`` are inferred
when missing.  The cell width is recovered from the coordinates themselves.

.. _HDF5: http://www.hdfgroup.org/HDF5/

"""

from __future__ import division, print_function, absolute_import


def update_attrs(h5_attrs, attrs):
    """Update the attributes in ``h5_attrs``, an ``h5py`` group or dataset,
    by adding attributes in the dictionary attrs.

    This will overwrite existing attributes.
    """
    for key, val in attrs.items():
        h5_attrs[key] = val


def attr_dict_options(setting):
    """Shorthand for describing possible combinations of required attributes
    for a grid dataset.

    permissive
        Only require name, unit; other attributes can be inferred."""
    attr_dict_settings = {
        'permissive': {u'name', u'unit'},
        'label': {u'name', u'unit', u'label'},
        'latex': {u'name', u'unit', u'label', u'label_latex'},
        'grid_y': {u'name', u'unit', u'label', u'label_latex', u'abscissa'},
        'pedantic_y': {u'name', u'unit', u'label', u'label_latex', u'abscissa', u'help'},
        'permissive_x': {u'name', u'unit'},
        'grid_x': {u'name', u'unit', u'label', u'label_latex', u'initial'},
        'pedantic_x': {u'name', u'unit', u'step', u'label', u'label_latex',
                       u'initial', u'help'},
    }
    if setting not in attr_dict_settings:
        raise ValueError("unknown attribute setting {0!r}; choose from {1}".format(
            setting, ", ".join(sorted(attr_dict_settings))))
    return attr_dict_settings[setting]


def check_minimum_attrs(attrs, setting='permissive'):
    required_attrs = attr_dict_options(setting)
    missing = required_attrs - set(attrs)
    if missing:
        raise ValueError(
            "dataset missing required attributes: {0}".format(
                ", ".join(sorted(missing))))


def infer_labels(attrs):
    name = attrs['name']
    unit = attrs['unit']
    label_dict = {'label': '{0} [{1}]'.format(name, unit),
                  'label_latex': '${0} \\: [\\mathrm{{{1}}}]$'.format(name, unit)}
    label_dict.update(dict(attrs.items()))
    update_attrs(attrs, label_dict)


def add_attrs_if_missing(h5_attrs, **kwargs):
    kwargs.update(dict(h5_attrs.items()))
    update_attrs(h5_attrs, kwargs)


def infer_missing_attrs(attrs, dataset_type=None, abscissa=None, initial=0.0):
    infer_labels(attrs)
    if dataset_type == 'x':
        add_attrs_if_missing(attrs, initial=initial)
    elif dataset_type == 'y':
        if abscissa is not None:
            add_attrs_if_missing(attrs, abscissa=abscissa)
        else:
            raise ValueError('abscissa must be specified')
