from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core = Pybind11Extension(
    "riset._core",
    sources=[
        "src/graph.cpp",
        "src/forest.cpp",
        "src/graph_io.cpp",
        "src/family.cpp",
        "src/sparsity.cpp",
        "src/mbound.cpp",
        "src/oracle.cpp",
        "src/extract.cpp",
        "src/json_io.cpp",
        "src/bindings/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(
    packages=["riset"],
    package_dir={"riset": "python/riset"},
    ext_modules=[core],
    cmdclass={"build_ext": build_ext},
)
