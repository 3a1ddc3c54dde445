from Cython.Build import cythonize
from setuptools import Extension, setup

ext_modules = cythonize(
    [Extension("stpath._kernels._ckernels", ["src/stpath/_kernels/_ckernels.pyx"])],
    compiler_directives={"language_level": "3"},
)

setup(ext_modules=ext_modules)
