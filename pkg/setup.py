"""Build script for the optional compiled kernel extension.

The package works without the extension: ptmoments._backend falls back to
the numpy implementation in ptmoments._kernels_py when the compiled module
is missing. Building with Cython is therefore best-effort.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools.extension import Extension
    except ImportError as exc:
        print(f"ptmoments: skipping compiled kernels ({exc})", file=sys.stderr)
        return []
    ext = Extension(
        "ptmoments._kernels",
        ["src/ptmoments/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


class OptionalBuildExt(build_ext):
    """Carry on with the pure-python fallback if compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"ptmoments: compiled kernels unavailable ({exc}); "
                  "installing with the pure-python backend", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"ptmoments: failed to build {ext.name} ({exc})",
                  file=sys.stderr)


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
