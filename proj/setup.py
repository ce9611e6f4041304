from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "dnbpy",
    sources=[
        "bindings/module.cpp",
        "src/board.cpp",
        "src/evolution.cpp",
        "src/genome.cpp",
        "src/harness.cpp",
        "src/network.cpp",
        "src/players.cpp",
        "src/supervised.cpp",
        "src/util.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
