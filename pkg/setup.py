#!/usr/bin/env python

from io import open # python 2 compatibility
from setuptools import setup

with open('./requirements.txt') as f:
    requirements = f.read().splitlines()

setup(
    name='posetforge',
    version='0.1.0',
    description='Edge-subgraph posets, bond lattices and their reconstruction',
    long_description=open('README.md', 'r', newline='', encoding='utf-8').read(),
    long_description_content_type="text/markdown",
    install_requires=requirements,
    tests_require=[
        'coverage',
    ],
    classifiers=[
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
    ],
    entry_points={
        'console_scripts': [
            'posetforge=posetforge.harness.cli:main',
        ],
    },
    test_suite='posetforge',
    packages=[
        'posetforge',
        'posetforge.base',
        'posetforge.base.tests',
        'posetforge.graphs',
        'posetforge.graphs.tests',
        'posetforge.counting',
        'posetforge.counting.tests',
        'posetforge.posets',
        'posetforge.posets.tests',
        'posetforge.families',
        'posetforge.families.tests',
        'posetforge.reconstruct',
        'posetforge.reconstruct.tests',
        'posetforge.harness',
        'posetforge.harness.tests',
        'posetforge.utils',
        'posetforge.utils.tests',
    ],
)
