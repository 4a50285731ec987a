"""Build script for the compiled orbit-partition kernel.

The extension is optional: when Cython (or a C compiler) is unavailable
the package installs without it and selects the pure-Python kernel at
import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("wreathvote._orbitcore", ["src/wreathvote/_orbitcore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
