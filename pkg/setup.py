#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""BaxterPy - exact cohomology for Rota-Baxter 3-Lie algebras.

BaxterPy verifies Rota-Baxter operators and representations on 3-Lie
algebras given by structure constants, builds the three cochain complexes
and their cohomology over the rationals, and works with deformations,
abelian extensions, skeletal and strict 3-Lie 2-algebras and crossed
modules.
"""
from setuptools import setup


classifiers = """
Development Status :: 4 - Beta
Intended Audience :: Science/Research
License :: OSI Approved :: GNU General Public License v2 (GPLv2)
Natural Language :: English
Operating System :: OS Independent
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
"""


doclines = __doc__.split('\n')


setup(
    name = 'BaxterPy',
    version = '0.3',
    description = doclines[0],
    license = 'GPL License',
    packages = ['baxter', 'baxter.lib', 'baxter.algebra', 'baxter.models',
                'baxter.session', 'baxter.workbench', ],
    install_requires = ['jsonschema>=3.2'],
    extras_require = {'tests': ['pytest', 'sympy']},
    entry_points = {'console_scripts': ['baxter = baxter.workbench.main:main']},
    python_requires = '>=3.8',
    classifiers = [c for c in classifiers.split('\n') if c],
    long_description = '\n'.join(doclines[2:]),
    platforms = ['any'],
)
