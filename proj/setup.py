from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "acor._acor",
    sources=[
        "python/bindings.cpp",
        "src/sieve.cpp",
        "src/oracle.cpp",
        "src/constants.cpp",
        "src/correlations.cpp",
        "src/patterns.cpp",
        "src/config.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
