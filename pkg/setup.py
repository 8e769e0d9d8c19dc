#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages


def calculate_version():
    initpy = open('icnc/_version.py').read().split('\n')
    version = list(filter(lambda x: '__version__' in x, initpy))[0].split('\'')[1]
    return version


package_version = calculate_version()

setup(
    name='ICNC',
    version=package_version,
    author='ICNC developers',
    packages=find_packages(exclude=['tests']),
    license='GNU/LGPLv3',
    entry_points={'console_scripts': ['icnc=icnc:main', ]},
    description=('Index Coding through Network Coding'),
    long_description='''
A Python tool that builds optimal linear index codes for side-information graphs
with three cycles' worth of feedback vertices by solving the dual network coding
problem, and checks the bounds and duality claims behind the construction.

Command line: icnc bounds | transform | classify | solve | verify | gen | sweep
''',
    zip_safe=True,
    install_requires=['numpy>=1.16.3',
                    'scikit-learn>=0.22.0',
                    'networkx>=2.3',
                    'update_checker>=0.16',
                    'tqdm>=4.36.1',
                    'stopit>=1.1.1',
                    'pandas>=0.24.2',
                    'joblib>=0.13.2'],
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)',
        'Programming Language :: Python :: 3.5',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    keywords=['index coding', 'network coding', 'side information', 'minrank', 'feedback vertex set',
              'linear codes'],
)
