#!/usr/bin/env python

from setuptools import setup

setup(
    name="localscore",
    version="0.1",
    description="Distribution of the local score of Markovian sequences",
    packages=[
        "localscore",
        "localscore.cli",
        "localscore.distributions",
        "localscore.ladder",
        "localscore.model",
        "localscore.montecarlo",
        "localscore.spectral",
        "localscore.utils",
    ],
    package_data={"localscore": ["schema/*.json"]},
    install_requires=[
        "jsonschema<3",
        "mypy_extensions",
        "numpy",
        "progressbar",
        "pyyaml",
        "scipy",
    ],
    entry_points={"console_scripts": ["localscore=localscore.cli:main"]},
)
