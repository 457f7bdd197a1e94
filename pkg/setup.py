import numpy as np
from setuptools import setup
from setuptools.extension import Extension

from Cython.Build import cythonize

ext = Extension(
    "designlab._gram",
    ["src/designlab/_gram.pyx"],
    include_dirs=[np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)

setup(ext_modules=cythonize([ext], compiler_directives={"language_level": 3}))
