"""Build script: compiles the nested-walk kernels when Cython is available.

The package is fully functional without the extension (a pure-Python
implementation of the same walkers is selected at import time), so a
missing Cython or C compiler only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "mpart._walkers",
                ["src/mpart/_walkers.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
