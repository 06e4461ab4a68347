from setuptools import setup, find_namespace_packages

with open('requirements.txt') as f:
    install_requires = [line.strip() for line in f if line.strip()]

packages = [a for a in find_namespace_packages(where='.') if a[:6]=='sigma7']

setup(name = 'sigma7',
      version = '0.1.0',
      description = 'Suspension splittings of simply connected closed 7-manifolds away from 2',
      license = 'BSD 3-Clause License',
      python_requires = '>=3.8',
      packages=packages,
      package_data={'sigma7.corpus': ['golden.json']},
      install_requires = install_requires,
      entry_points = {'console_scripts': ['sigma7=sigma7.cli:main']},
      extras_require = dict(
        docs = ['sphinx>=1.6','sphinx-rtd-theme>=0.5'],
        test = ['pytest>=6', 'hypothesis>=6'],
        )
    )
