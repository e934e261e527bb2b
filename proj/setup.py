from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "ltnorm._ltnorm",
    sources=[
        "src/regex.cpp",
        "src/rule_engine.cpp",
        "src/tags.cpp",
        "src/lexicon.cpp",
        "src/rulepack_lt.cpp",
        "src/eval.cpp",
        "bindings/py_module.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
