"""Build script for the optional compiled convolution kernels.

The extension is marked optional: if Cython is missing or the compiler
fails, the install still succeeds and ``symchar.ring`` falls back to the
pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "symchar._ring_core",
                ["src/symchar/_ring_core.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
