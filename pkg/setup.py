import re
from pathlib import Path
from typing import List

from setuptools import setup, find_packages

ROOT = Path(__file__).parent


def read_requirements(name: str) -> List[str]:
    lines = (line.strip() for line in (ROOT / name).read_text(encoding="utf-8").splitlines())
    return [line for line in lines if line and not line.startswith("#")]


def get_version():
    file = ROOT / "hilbert_depth" / "__init__.py"
    return re.search(
        r'^__version__ *= *[\'"]([^\'"]*)[\'"]', file.read_text(encoding="utf-8"), re.M
    )[1]


setup(
    name="hilbert_depth",
    version=get_version(),
    description="Exact Hilbert depth of squarefree monomial ideals and their quotient rings",
    long_description=(ROOT / "README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    zip_safe=False,
    packages=find_packages(exclude=("tests", "tests.*", "examples", "examples.*")),
    python_requires=">=3.10",
    install_requires=read_requirements("requirements.txt"),
    extras_require={"test": read_requirements("requirements-test.txt")},
    entry_points={"console_scripts": ["hdepth=hilbert_depth.__main__:main"]},
)
