"""Build script for the optional compiled box-fitting core.

The package is fully functional without the extension: ``lrd._backend``
falls back to the vectorized NumPy implementation when the compiled
module is absent.  The extension build is therefore allowed to fail
(no compiler, no Cython) without failing the install.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

try:
    import numpy
except ImportError:
    numpy = None


class optional_build_ext(build_ext):
    """Build the accelerator if possible, warn and continue if not."""

    def run(self):
        try:
            build_ext.run(self)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: compiled core not built ({exc}); "
                  "falling back to the pure NumPy implementation")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: {ext.name} not built ({exc}); "
                  "falling back to the pure NumPy implementation")


if cythonize is not None and numpy is not None:
    extensions = cythonize(
        [
            Extension(
                "lrd._boxfit",
                ["src/lrd/_boxfit.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
else:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
