import os
from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include() -> str:
    candidates = [
        os.environ.get("EIGEN3_INCLUDE_DIR"),
        "/usr/include/eigen3",
        "/usr/local/include/eigen3",
    ]
    for c in candidates:
        if c and os.path.isdir(c):
            return c
    raise RuntimeError("Eigen headers not found; set EIGEN3_INCLUDE_DIR")


ext = Pybind11Extension(
    "hspin._core",
    sorted(glob("src/*.cpp")) + ["python/module.cpp"],
    include_dirs=["include", "vendor", eigen_include()],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
