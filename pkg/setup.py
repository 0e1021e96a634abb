"""Build script: compiles the optional fast kernel extension.

The package works without the extension (a pure-Python kernel module with the
same interface is selected at import time), so a missing or failing Cython
toolchain only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("trisep._kernels_c", ["src/trisep/_kernels_c.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
