import os

from setuptools import find_packages
from setuptools import setup

setup_requires = []
install_requires = [
    'joblib',
    'numpy',
    'pandas',
    'scipy',
    'sympy >=1.13',
    'tqdm',
]
tests_require = [
    'pytest',
]


here = os.path.abspath(os.path.dirname(__file__))
# Get __version__ variable
exec(open(os.path.join(here, 'gospace', '_version.py')).read())

setup(name='gospace',
      version=__version__,  # NOQA
      description='gospace: exact analysis of geodesic orbit and related '
                  'properties of homogeneous pseudo-riemannian spaces',
      packages=find_packages(exclude=('tests', 'tests.*')),
      license='MIT',
      setup_requires=setup_requires,
      install_requires=install_requires,
      tests_require=tests_require,
      extras_require={'test': tests_require},
      entry_points={
          'console_scripts': ['gospace=gospace.cli.main:main'],
      },
      )
