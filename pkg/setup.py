"""Build script for the optional compiled scanner.

The package works without the extension; unipy.lexer falls back to the
pure-Python scanner when the compiled module is absent. Set UNIPY_NO_EXT=1
to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("UNIPY_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("unipy._scanner_c", ["src/unipy/_scanner_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
