
import setuptools
import os

setuptools.setup(
    name='hardpaths',
    version='0.1',
    description='Gadgets, reductions and an exhaustive oracle for edge-disjoint paths with few demand classes.',
    package_dir={'hardpaths': os.path.curdir},
    packages=['hardpaths'] + ['.'.join(['hardpaths', p]) for p in setuptools.find_packages(os.path.curdir, exclude=['examples', 'examples.*'])],
    install_requires=[
        'networkx',
        'ortools',
    ],
    extras_require={
        'test': ['hypothesis'],
    },
    entry_points={
        'console_scripts': ['hardpaths = hardpaths.cli:cli_main'],
    },
)
