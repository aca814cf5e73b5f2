"""Build script for the optional compiled search kernel.

The package is fully functional without compilation (a pure-Python kernel is
selected at import time).  Building the extension makes the exhaustive sweeps
roughly two orders of magnitude faster.

Usage:
    pip install -e . --no-build-isolation     # builds the extension if Cython is present
    python3 setup.py build_ext --inplace      # explicit in-place build

Verify with:
    python3 -c "from irrlab import kernel; print(kernel.BACKEND)"
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                name="irrlab._speedups",
                sources=["src/irrlab/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
except ImportError:
    # No Cython: install the pure-Python package only.
    pass

setup(ext_modules=ext_modules)
