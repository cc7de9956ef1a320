# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

try:
    with open("README.md", "r", encoding="utf-8") as f:
        long_description = f.read()
except IOError:
    long_description = ""


PACKAGES = find_packages(exclude=("tests.*", "tests"))

setup(
    name="nsshift",
    version="0.1.0",
    description="Non-singular Bernoulli shifts: Kakutani distances, zero type "
    "classification and an exact level construction.",
    license="apache-2.0",
    packages=PACKAGES,
    install_requires=[
        "torch>=1.8.0",
        "numpy>=1.18.1",
        "mpmath>=1.1.0",
    ],
    entry_points={"console_scripts": ["nsshift=nsshift.cli:main"]},
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
)
