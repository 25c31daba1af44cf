"""Build script: compiles the optional Cython ortholattice core.

The package is fully functional without the extension (folproof.olcore
falls back to the pure-Python twin at import time), so a missing compiler
or Cython must not fail the install.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping optional extension build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name}: {exc}")


def extensions():
    import os

    src = "src/folproof/olcore/_speed.pyx"
    if not os.path.exists(src):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available, building pure-Python folproof")
        return []
    from setuptools.extension import Extension

    ext = Extension(
        "folproof.olcore._speed",
        [src],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
