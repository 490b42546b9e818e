"""Build the optional compiled kernels; the package falls back to numpy
versions when the extension is unavailable."""
import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("PYJAMA_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "pyjama._kernels",
                [os.path.join("src", "pyjama", "_kernels.pyx")],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                # no FMA contraction and no fast-math: results must match numpy
                extra_compile_args=["-O3", "-ffp-contract=off", "-fno-fast-math"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
