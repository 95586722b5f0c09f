"""Build script: compiles the optional Cython enumeration kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so the build degrades gracefully
when Cython or a C compiler is unavailable.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("quotmotives._enum_cy", ["src/quotmotives/_enum_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
