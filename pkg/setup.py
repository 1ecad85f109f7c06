from setuptools import setup, find_packages

from bicliquecount import __version__

setup(name='bicliquecount',
      version=__version__,
      description='Exact (p,q)-biclique counting in bipartite graphs',
      license='BSD-3-Clause',
      packages=find_packages(exclude=['tests', 'tests.*']),
      zip_safe=True,
      python_requires='>=3.9',
      install_requires=[
          "numpy",
          "tqdm<=4.29.1",
          "unittest-xml-reporting",
          "psutil",
          "colorlog==2.10.0",
          "pytz",
      ],
      classifiers=[
          "Programming Language :: Python :: 3",
          "Operating System :: OS Independent",
          "License :: OSI Approved :: BSD License",
      ],
      entry_points={
          'console_scripts': ['bicliquecount = bicliquecount.application:main',
                              'biclique_tests = bicliquecount.testing.test_infra:default_main',
                              ],
      },
      )
