from setuptools import setup

# The GF(p) elimination kernel is optional: without Cython (or a working C
# compiler) the package installs anyway and falls back to the numpy
# implementation in hcv._gfelim_py, selected at import time by hcv._kernel.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/hcv/_gfelim.pyx"], language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
