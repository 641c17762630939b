"""
Saving and loading grid objects with h5py
"""
import datetime
import json

import numpy as np
import six
import h5py

from murearrange.density import density_from_config, density_id
from murearrange.gridsets import GridSet, GridSpec
from murearrange.hdf5 import (
    check_minimum_attrs,
    infer_missing_attrs,
    update_attrs,
)
from murearrange.rearrangefn import GridFunction
from murearrange.util import infer_step

HDF5_VERSION = 'murearrange-v1'


def _save_grid(obj, f, help_text):
    spec = obj.spec
    is_function = isinstance(obj, GridFunction)
    now = datetime.datetime.now()
    update_attrs(f.attrs, {
        'date': now.strftime("%Y-%m-%d"),
        'time': now.strftime("%H:%M:%S"),
        'hdf5_version': HDF5_VERSION,
        'kind': 'function' if is_function else 'set',
        'density': density_id(obj.density),
        'L': spec.L,
        'help': help_text,
    })
    x = spec.axis_centers()
    names = ['x{0}'.format(k + 1) for k in range(spec.n)]
    for k, name in enumerate(names):
        dset = f.create_dataset(name, data=x)
        update_attrs(dset.attrs, {
            'name': name,
            'unit': '1',
            'step': spec.delta,
            'help': 'Cell centers along axis {0}.'.format(k),
        })
        infer_missing_attrs(dset.attrs, dataset_type='x', initial=x[0])

    values = obj.values if is_function else obj.occ
    dset = f.create_dataset('y', data=np.asarray(values))
    update_attrs(dset.attrs, {
        'name': 'value' if is_function else 'occupancy',
        'unit': '1',
        'help': 'Function value per cell.' if is_function
                else 'Occupancy per cell.',
    })
    infer_missing_attrs(dset.attrs, dataset_type='y', abscissa=",".join(names))
    f.create_dataset('report', data=np.array(
        [s.encode('utf-8') for s in obj.report] or [b''], dtype='S'))


def save_grid_hdf5(obj, f_dst, overwrite=False, help_text=''):
    """Write a GridSet or GridFunction.

    :param f_dst: destination filename or h5py file or group object
    :param overwrite: If True, overwrite an existing file with the filename
        f_dst.
    """
    if isinstance(f_dst, six.string_types):
        mode = 'w' if overwrite else 'w-'
        with h5py.File(f_dst, mode=mode) as f:
            _save_grid(obj, f, help_text)
    else:
        _save_grid(obj, f_dst, help_text)


def _load_grid(f, density):
    kind = f.attrs['kind']
    kind = kind.decode() if isinstance(kind, bytes) else kind
    y = f['y']
    check_minimum_attrs(y.attrs, 'grid_y')
    abscissa = y.attrs['abscissa']
    abscissa = abscissa.decode() if isinstance(abscissa, bytes) else abscissa
    names = abscissa.split(',')
    steps = []
    for name in names:
        check_minimum_attrs(f[name].attrs, 'permissive_x')
        steps.append(infer_step(f[name][:]))
    N = f[names[0]].shape[0]
    delta = steps[0]
    if not np.allclose(steps, delta, rtol=1e-9):
        raise ValueError("axes have different steps: {0}".format(steps))
    L = float(f.attrs['L']) if 'L' in f.attrs else N * delta / 2
    if not np.isclose(L, N * delta / 2, rtol=1e-9):
        raise ValueError("window half-width {0} disagrees with the step {1}".format(L, delta))
    spec = GridSpec(len(names), L, N)
    if density is None:
        did = f.attrs['density']
        did = did.decode() if isinstance(did, bytes) else did
        density = density_from_config(json.loads(did))
    values = np.array(y[:], dtype=float)
    report = ["Loaded from {0}.".format(f.file.filename)]
    if kind == 'function':
        compact = not np.any(values[spec.boundary_mask()] > 0)
        return GridFunction(spec, values, density, compact=compact, report=report)
    return GridSet(spec, values, density, report=report)


def load_grid_hdf5(f_src, density=None):
    """Read a GridSet or GridFunction written by :func:`save_grid_hdf5`.

    :param f_src: source filename or h5py file object
    :param density: override the density recorded in the file
    """
    if isinstance(f_src, six.string_types):
        with h5py.File(f_src, mode='r') as f:
            return _load_grid(f, density)
    return _load_grid(f_src, density)


def h5ls_str(g, offset='', print_types=True):
    """Prints the input file/group/dataset (g) name and begin iterations on its
    content."""
    string = []
    if isinstance(g, h5py.File):
        string.append(offset + repr(g.file))
    elif isinstance(g, h5py.Dataset):
        if print_types:
            string.append(offset + g.name + '  ' + repr(g.shape) + '  ' + (g.dtype.str))
        else:
            string.append(offset + g.name + '  ' + repr(g.shape))
    elif isinstance(g, h5py.Group):
        string.append(offset + g.name)
    else:
        raise ValueError('unknown item in HDF5 file: ' + g.name)
    if isinstance(g, h5py.File) or isinstance(g, h5py.Group):
        for key, subg in dict(g).items():
            string.append(h5ls_str(subg, offset + '    ',
                                   print_types=print_types))
    return "\n".join(string)


def h5ls(*args):
    """List the contents of an HDF5 file object or group.
    Accepts a file / group handle, or a string interpreted as the hdf5
    file path."""
    for arg in args:
        if isinstance(arg, six.string_types):
            with h5py.File(arg, mode='r') as fh:
                print(h5ls_str(fh))
        else:
            print(h5ls_str(arg))
