# Copyright (C) IBM Corporation 2019
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
"""

# Always prefer setuptools over distutils
from setuptools import setup, find_packages
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='mecgame',  # Required

    version='0.1',  # Required

    description='MecGame: power control and resource allocation game for dense MEC networks',

    long_description=long_description,  # Optional
    long_description_content_type='text/markdown',  # Optional

    license='Apache 2.0',

    classifiers=[  # Optional
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',

        'License :: OSI Approved :: Apache Software License',

        'Programming Language :: Python :: 3',

        'Operating System :: POSIX :: Linux',
        'Topic :: Scientific/Engineering'
    ],

    # Note that this is a string of words separated by whitespace, not a list.
    keywords='mobile edge computing potential game particle swarm power control',  # Optional

    packages=find_packages(exclude=['docs', 'configs', 'build', 'experiments', 'scripts', 'tests']),  # Required

    python_requires='>=3.8',
    # Should not pin down version
    install_requires=[
        'tqdm',
        'numpy',
        'scipy',
        'pandas',
        'PyYAML'
        ],

    extras_require={  # Optional
        # 'test': ['coverage'],
    },

    package_data={},

    include_package_data=True,

    # Command line entry points.
    entry_points={  # Optional
         'console_scripts': [
             'mecgame-sweep=mecgame.workers.sweeper:main',
         ]
     },
)
