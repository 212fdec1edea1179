#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


# Standard library imports
from setuptools import find_packages, setup

# Local imports
import privcorr


with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = ['numpy>=1.22', 'scipy>=1.9', 'pandas>=1.4']
test_requirements = []

setup(
    author=privcorr.__author__,
    author_email=privcorr.__email__,

    # https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=sorted([
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "Natural Language :: English",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",

        # Supported Python versions
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12"
    ]),

    description=privcorr.__shortdescription__,
    entry_points={
        'console_scripts': ['privcorr = privcorr.cli:main'],
    },
    include_package_data=True,
    install_requires=requirements,
    keywords="differential privacy gaussian copula correlation",
    license=privcorr.__license__,
    long_description="{readme}\n\n{changelog}".format(
      readme=readme, changelog=history
    ),
    name="privcorr",
    package_data={'privcorr.core.config': ['samples/*.cfg']},
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.9',
    test_suite='tests',
    tests_require=test_requirements,
    version=privcorr.__version__,
)
