from setuptools import setup, find_packages

setup(
    name='camocodec',
    version='1.0.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'camocodec': ['resources/*.ini', 'resources/*.json']},
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.20.0',
        'scipy>=1.6.0'
    ],
    extras_require={
        'test': ['pytest>=6.0', 'scikit-learn>=0.24']
    },
    entry_points={
        'console_scripts': ['camocodec=camocodec.cli:main']
    }
)
