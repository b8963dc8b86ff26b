"""Build script: compiles the optional segmentation speedup extension.

The package works without the extension (a pure-Python twin is selected at
import time), so a missing compiler or Cython merely skips the build.
Set SKETCHREC_PURE=1 to force the pure-Python kernels.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SKETCHREC_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sketchrec._speedups", ["src/sketchrec/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
