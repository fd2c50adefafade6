import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The extension compiles the C++ core directly; no separate library build is
# needed. GMP provides the exact rational arithmetic.
ext = Pybind11Extension(
    "laukit",
    sorted(glob.glob("src/*.cpp")) + ["python/laukit_module.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
