import numpy
from setuptools import Extension, setup

# The compiled kernel is optional: if the toolchain is unavailable the
# package falls back to the numpy implementation selected at import time.
ext_modules = []
try:
    from Cython.Build import cythonize

    core = Extension(
        "turanbounds.kernels._core",
        ["src/turanbounds/kernels/_core.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
    )
    core.optional = True
    ext_modules = cythonize(
        [core],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
