"""Wheel build for the emodyn extension.

Compiles the C++ core together with the pybind11 bindings (the CMake build
remains the canonical path for the CLI and test suites). The vendored
single-header dependencies are looked up in ./vendor, then /opt/vendor.
"""

import os
from pathlib import Path

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).resolve().parent

vendor = ROOT / "vendor"
if not (vendor / "json.hpp").exists() and Path("/opt/vendor/json.hpp").exists():
    vendor = Path("/opt/vendor")

core_sources = sorted(str(p.relative_to(ROOT)) for p in (ROOT / "src").glob("*.cpp"))

ext = Pybind11Extension(
    "emodyn._emodyn",
    sources=core_sources + ["python/bindings.cpp"],
    include_dirs=[str(ROOT / "include"), str(ROOT / "src"), str(vendor)],
    cxx_std=20,
)

ParallelCompile("EMODYN_NUM_BUILD_JOBS", default=os.cpu_count() or 1).install()

setup(
    packages=["emodyn"],
    package_dir={"": "python"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    zip_safe=False,
)
