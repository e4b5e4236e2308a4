"""
Setup script for sphere-embed package
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="sphere-embed",
    version="0.1.0",
    author="Sphere Embed Team",
    author_email="team@sphere-embed.dev",
    description=(
        "Exact embeddability decisions and certified placements "
        "for small simplicial complexes"
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/sphere-embed/sphere-embed",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.6",
        "sympy>=1.9",
        "pytest>=6.0",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0",
            "hypothesis>=6.0",
            "black",
            "flake8",
            "mypy",
        ],
    },
    entry_points={
        "console_scripts": [
            "sphere-embed=sphere_embed.cli:main",
            # Acceptance runner
            "sphere-embed-acceptance=sphere_embed.acceptance:main",
        ],
    },
)
