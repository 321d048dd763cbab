"""CMake-driven build of the _qecbounds extension for setuptools.

The canonical build system is CMake; this shim lets `pip install -e .`
configure and build the pybind11 module (and the CLI binary bundled under
qecbounds/bin) without duplicating the build rules.
"""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        pkg_dir = ext_path.parent
        pkg_dir.mkdir(parents=True, exist_ok=True)

        import pybind11

        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DQECB_BUILD_PYTHON=ON",
                "-DQECB_BUILD_TESTS=OFF",
                "-DCMAKE_BUILD_TYPE=Release",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPYTHON_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "-j", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )

        built = next(build_dir.glob("_qecbounds*.so"))
        shutil.copy2(built, ext_path)
        targets = [pkg_dir / "bin"]
        if getattr(self, "editable_mode", False):
            targets.append(source_dir / "python" / "qecbounds" / "bin")
        for bin_dir in targets:
            bin_dir.mkdir(parents=True, exist_ok=True)
            shutil.copy2(build_dir / "qecbounds", bin_dir / "qecbounds")


setup(
    packages=["qecbounds"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("qecbounds._qecbounds")],
    cmdclass={"build_ext": CMakeBuild},
)
