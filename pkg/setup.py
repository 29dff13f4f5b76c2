"""Builds the optional compiled kernel.

The package works without it: csgroups.kernel falls back to the pure-Python
twin when the extension is absent.  Build in place with

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "csgroups._kernel_c",
                ["src/csgroups/_kernel_c.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
