"""Build script: compiles the optional exact-elimination extension when Cython is present.

The package is fully functional without the extension (a pure-Python twin of
the row-reduction engine is selected at import time), so the build must never
fail just because Cython or a C compiler is missing.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/confsym/_core/_speed.pyx",
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
