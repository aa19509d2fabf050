"""Builds the optional compiled respelling kernel.

The package works without it: ladinomt.orthography falls back to the pure
Python engine when the extension is absent. Set LADINOMT_PURE_PYTHON=1 to
skip compilation entirely.
"""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None and not os.environ.get("LADINOMT_PURE_PYTHON"):
    extensions = cythonize(
        [Extension("ladinomt._kernel", ["src/ladinomt/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
