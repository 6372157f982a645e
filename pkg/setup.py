#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages


deps = {
    'pachinko': [
        "eth-utils>=1.0.0,<2.0.0",
        "numpy>=1.20",
        "scipy>=1.7",
        "scikit-learn>=1.0",
        "statsmodels>=0.13",
        "pandas>=1.5",
    ],
    'test': [
        "pytest>=6.2",
        "pytest-mock>=3.6",
    ],
    'lint': [
        "mypy>=0.910",
        "flake8>=3.9",
    ],
}


deps['dev'] = (
    deps['pachinko'] +
    deps['test'] +
    deps['lint']
)

install_requires = deps['pachinko']

setup(
    name='pachinko',
    version='0.0.1-alpha.1',
    description='Civil-unrest event probabilities per day and city from filtered social-media postings',
    packages=find_packages(
        exclude=[
            "tests",
            "tests.*",
        ]
    ),
    python_requires='>=3.8',
    extras_require=deps,
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    include_package_data=True,
    zip_safe=False,
    classifiers=[
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
    ],
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'pachinko=pachinko.cli.main:main',
        ],
    },
)
