from setuptools import setup, find_packages

setup(
    name="kontsevich-intersections",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "fastapi",
        "uvicorn",
        "pydantic>=2.4.0",
        "pydantic-settings",
        "python-dotenv",
        "loguru",
    ],
    extras_require={
        "test": ["pytest", "httpx"],
    },
    entry_points={
        "console_scripts": [
            "mbar=src.cli:main",
        ],
    },
)
