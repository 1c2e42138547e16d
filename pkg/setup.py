#!/usr/bin/env python
# -*- coding: utf-8 -*-
import os
import re

from setuptools import find_packages, setup


def get_version(*file_paths):
    """Retrieves the version from the main app __init__.py"""
    filename = os.path.join(os.path.dirname(__file__), *file_paths)
    with open(filename) as version_file:
        version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", version_file.read(), re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError('Unable to find version string.')


def load_requirements(*requirements_path):
    """
    Load all requirements from the specified requirements files
    Returns a list of requirement strings.
    """
    requirements = set()
    for path in requirements_path:
        with open(path) as reqs:
            requirements.update(
                line.split('#')[0].strip() for line in reqs
                if is_requirement(line.strip())
            )
    return list(requirements)


def is_requirement(line):
    """
    Return True if the requirement line is a package requirement;
    that is, it is not blank, a comment, a URL, or an included file.
    """
    return line and not line.startswith(('-r', '#', '-e', 'git+', '-c'))


setup(
    name="ssnn-roots",
    python_requires='>=3.8',
    version=get_version("ssnn_roots", "__init__.py"),
    description="Roots of SSNN and Ehrhart polynomials given by delta-vectors: solving, certification and checks",
    long_description="",
    classifiers=[
        'Framework :: Django :: 3.2',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=load_requirements('requirements/base.in'),
    extras_require={
        "test": load_requirements('requirements/test.in'),
    },
    license="AGPL",
    platforms=["any"],
    zip_safe=False,
    packages=find_packages(exclude=['*.tests']),
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "ssnn-roots = ssnn_roots.cli:main",
        ],
    }
)
