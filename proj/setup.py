"""Builds the _core extension by delegating to the CMake project.

Everything else about the package is declared in pyproject.toml; this file
only exists because the extension comes out of CMake rather than a plain
Extension() compile.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = out_dir.parent.resolve()
        config = "Debug" if int(os.environ.get("DEBUG", "0")) else "Release"
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}{os.sep}",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={config}",
            "-DMVIS_BUILD_CLI=OFF",
            "-DMVIS_BUILD_TESTS=OFF",
        ]
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "mvis_core", "--parallel"],
            cwd=build_temp,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("mvis._core")],
    cmdclass={"build_ext": CMakeBuild},
)
