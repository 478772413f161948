"""Build script: compiles the optional fast-kernel extension when Cython is
available.  The package works without it (a pure-Python backend is selected
at import time), so any failure here downgrades to a source-only install."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "crystalg._kernels_cy",
                ["src/crystalg/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
