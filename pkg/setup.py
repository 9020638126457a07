"""Build script: compiles the optional Cython evaluation kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the compiled kernel just makes bulk circuit
evaluation much faster.  Build with ``pip install -e . --no-build-isolation``.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/aopsynth/_kernel.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
