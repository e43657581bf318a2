"""Build script: compiles the optional kernel extension when Cython and a C
compiler are available, and falls back to the pure-Python kernel otherwise.

Set PERMCHAR_PURE=1 to skip the extension entirely.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the permchar kernel extension failed; "
            "the pure-Python kernel will be used instead.\n  %s" % (exc,),
            file=sys.stderr,
        )


PYX = "src/permchar/_kernel/_ckern.pyx"

ext_modules = []
cmdclass = {}
if os.environ.get("PERMCHAR_PURE") != "1" and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("permchar._kernel._ckern", [PYX])],
            language_level="3",
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print(
            "WARNING: Cython not available; installing with the pure-Python "
            "kernel only.",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass=cmdclass)
