"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension; any build failure
downgrades to the pure-Python kernels with a warning.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"skipping accelerator extension: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping accelerator extension {ext.name}: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("machinpi._kernels", ["src/machinpi/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
