"""Build script.

The compiled extension is optional: if Cython (or a C compiler) is missing the
package installs anyway and falls back to the numpy/scipy implementation of the
same kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/slc6j/_mbcore.pyx",
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.extra_compile_args = ["-O3"]
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"slc6j: building without compiled core ({exc})")

setup(ext_modules=ext_modules)
