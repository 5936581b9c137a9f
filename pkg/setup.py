"""Builds the optional compiled canonical-labeling kernel.

The package works without it (bbraag.kernel falls back to the pure-Python
twin), so the extension is marked optional: a missing C compiler or Cython
only costs speed, never functionality.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bbraag._canon_cy",
                ["src/bbraag/_canon_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
