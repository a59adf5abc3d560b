#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Install ringrank."""

from __future__ import unicode_literals

from setuptools import setup
from setuptools import find_packages


setup(
    name="ringrank",
    version="0.1.0",
    description=(
        "Exact ranks of orders and finite rings: conductors, singular "
        "primes, multiplicities and a brute-force oracle."
    ),
    long_description=open("README.rst").read(),
    keywords=[
        "commutative algebra",
        "orders",
        "number fields",
        "finite rings",
        "ideals",
        "generators",
        "Hermite normal form",
    ],
    license="MIT",
    packages=find_packages(exclude=["tests", "docs", "examples"]),
    python_requires=">=3.8",
    install_requires=["sympy >= 1.12"],
    tests_require=["pytest >= 3.2", "hypothesis >= 6"],
    extras_require={"test": ["pytest >= 3.2", "hypothesis >= 6"]},
    entry_points={"console_scripts": ["ringrank = ringrank.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
