from setuptools import setup, find_packages

setup(
    name="alm-morph",
    version="0.1.0",
    description="Active Learning Method modeling with morphological narrow paths and string-matrix norms",
    author="ALM Morph Team",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.24.0",
        "pyyaml>=6.0",
        "scipy>=1.10.0",
    ],
    python_requires=">=3.10",
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.80.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "alm-morph=alm_morph.cli:main",
        ],
    },
)
