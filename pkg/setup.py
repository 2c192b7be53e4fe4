"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python twin of the
kernels is selected at import time), so the extension is marked
``optional``: a missing compiler degrades to the fallback instead of
failing the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "slowmode._kernels",
                ["src/slowmode/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
