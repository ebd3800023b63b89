"""Build script: compiles the optional echelon kernel extension.

The package is fully functional without the extension (the pure-Python
kernel is selected at import); a failed or skipped extension build must
therefore never fail the install. Set PICALB_PURE_BUILD=1 to skip the
extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PICALB_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("picalb._echelon_c", ["src/picalb/_echelon_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
