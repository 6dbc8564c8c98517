# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from setuptools import find_packages
from setuptools import setup

from ctmap import __description__
from ctmap import __package__ as __distribution__


with open('requirements.txt') as f:
    required = [x for x in f.read().splitlines() if x and not x.startswith("#")]


def version_scheme(version):
    import setuptools_scm.version
    if version.exact:
        return setuptools_scm.version.guess_next_simple_semver(
            version.tag,
            retain=setuptools_scm.version.SEMVER_LEN,
            increment=False
        )
    else:
        return version.format_next_version(
            setuptools_scm.version.guess_next_simple_semver,
            retain=setuptools_scm.version.SEMVER_MINOR
        )


setup(
    name=__distribution__,
    use_scm_version={
        "version_scheme": version_scheme,
        "local_scheme": "dirty-tag",
        "fallback_version": "0.1.0",
    },
    setup_requires=[
        'setuptools_scm'
    ],
    packages=find_packages(exclude=['tests.*', 'tests']),
    package_data={
        'ctmap.config': ['*.json'],
    },
    description=__description__,
    license='BSD-3-Clause',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    python_requires='>=3.8, <4',
    entry_points="""
        [console_scripts]
        ctmap=ctmap.ctmap:ctmap
        """,
    keywords=['hyperbolic groups', 'trees of spaces', 'cannon-thurston'],
    tests_require=['pytest', 'ddt'],
    zip_safe=False,
    install_requires=required,
    include_package_data=True
)
