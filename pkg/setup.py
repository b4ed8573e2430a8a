"""Build the optional compiled kernels; the package works without them."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qlrinv._kernels._ckernels",
                   ["src/qlrinv/_kernels/_ckernels.pyx"],
                   optional=True)],
        language_level=3,
    )

setup(ext_modules=ext_modules)
