"""Build script: compiles the optional arithmetic kernel.

The package works without the extension (a pure-Python kernel with the
same interface is selected at import time), so the extension is marked
optional and any build failure degrades to the pure backend.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "so5cg._kernel._fast",
                ["src/so5cg/_kernel/_fast.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
