from setuptools import setup

# Metadata goes in pyproject.toml. These are here for GitHub's dependency graph.

setup(
    name="habitat-explain",
    install_requires=[
        "jsonschema>=4.18",
        "networkx>=3.0",
        "numpy>=1.24",
        "pandas>=2.0",
        "rasterio>=1.3",
        "requests>=2.28",
        "scipy>=1.10",
        "shapely>=2.0",
    ],
)
