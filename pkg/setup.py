from setuptools import setup, find_packages

setup(
    name="ecci-digraph",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    description="Eccentric connectivity index of strongly connected digraphs",
    python_requires=">=3.10",
    package_data={"ecci_digraph.formats": ["report.schema.json"]},
    install_requires=[
        "numpy==1.26.4",
        "orjson==3.9.15",
        "pydantic==2.8.2",
        "scipy==1.13.1",
        "tqdm==4.66.5",
    ],
    extras_require={
        "test": [
            "jsonschema==4.23.0",
            "networkx==3.3",
            "pytest==8.3.3",
        ],
    },
    entry_points={
        "console_scripts": [
            "ecci=ecci_digraph.cli:main",
        ],
    },
)
