import os
import sys

from setuptools import setup, Extension

# The compiled kernel is an optimization, not a requirement: the package
# falls back to the pure-Python twin in sympadic._kernel_py at import time.
ext_modules = []
if os.environ.get("SYMPADIC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sympadic._kernel_c", ["src/sympadic/_kernel_c.pyx"])],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover
        sys.stderr.write(f"skipping compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
