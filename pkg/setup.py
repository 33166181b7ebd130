#!/usr/bin/env python

try:
    from setuptools import setup, find_packages
except ImportError:
    from distutils.core import setup, find_packages

from splitforms import __version__

setup(
    name='splitforms',
    version=__version__,
    packages=find_packages(),
    package_data={
        '': ['*.yaml', '*.cfg']
    },
    python_requires='>=3.9',
    install_requires=[
        'PyYAML',
        'sympy',
    ],
    extras_require={
        'test': ['hypothesis'],
    },
    tests_require=[
        'hypothesis',
    ],
    entry_points={
        'console_scripts': [
            'splitforms = splitforms.cli.commands:main',
        ]
    },
    description='Exact exterior calculus on R^n: split exact forms, Poincare witnesses and Nambu flows',
)
