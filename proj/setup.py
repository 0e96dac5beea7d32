"""Build the pybind11 extension by delegating to the CMake project.

Requires the cmake (and preferably ninja) binaries on PATH plus an installed
pybind11; metadata lives in pyproject.toml.
"""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DNILSEM_PYTHON_OUTPUT_DIR={extdir}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DNILSEM_BUILD_PYTHON=ON",
            "-DNILSEM_BUILD_TESTS=OFF",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass
        if shutil.which("ninja"):
            cmake_args += ["-G", "Ninja"]

        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", f"-j{os.cpu_count() or 2}"],
            cwd=build_temp,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("nilsem._core")],
    cmdclass={"build_ext": CMakeBuild},
)
