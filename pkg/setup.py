"""Build script: compiles the optional accelerated kernel extension.

The package works without the extension (a pure-numpy fallback is selected
at import time), so a failed compilation only costs speed.  Set
BANACHMODULI_NO_EXT=1 to skip the extension build entirely.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("BANACHMODULI_NO_EXT", "0") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "banachmoduli._kernels_cy",
                    ["src/banachmoduli/_kernels_cy.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError as exc:  # pragma: no cover - depends on build env
        sys.stderr.write(
            "banachmoduli: Cython/numpy unavailable (%s); "
            "building without the accelerated kernels.\n" % exc
        )

setup(ext_modules=ext_modules)
