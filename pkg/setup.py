"""Build script: compiles the optional mod-p linear algebra speedups.

The package works without the extension (galtan.kernels falls back to a
NumPy implementation), so a failed compile is not fatal to installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("galtan._speedups", ["src/galtan/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
