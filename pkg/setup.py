#!/usr/bin/env python
# Enables the package to be used in develop mode
# See http://pythonhosted.org/setuptools/setuptools.html#development-mode
import io
import os

from setuptools import setup

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

# On readthedocs, we can't install packages with compiled code
if on_rtd:
    install_requires = ['six']
else:
    install_requires = ['numpy', 'scipy>=1.12', 'h5py', 'six', 'lmfit']

description = """Weighted symmetrization of sets and functions under the measures exp(c|x|^2) dx, and numerical checks of the inequalities it satisfies."""

readme = io.open('README.rst', mode='r', encoding='utf-8').read()

doclink = """
Documentation
-------------

Build the documentation with ``sphinx-build docs docs/_build``."""

history = (
    io.open('HISTORY.rst', mode='r', encoding='utf-8')
    .read()
    .replace('.. :changelog:', '')
)

setup(
    name='MuRearrange',
    version='0.1.0',
    description=description,
    long_description=readme + '\n\n' + doclink + '\n\n' + history,
    license='GPLv3',
    packages=['murearrange', 'murearrange.hdf5', 'murearrange.tests'],
    install_requires=install_requires,
    tests_require=['hypothesis'],
    extras_require={'test': ['hypothesis']},
    zip_safe=False,
    include_package_data=True,
    test_suite='murearrange.tests.discover',
    entry_points={
        'console_scripts': ['murearrange=murearrange.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
