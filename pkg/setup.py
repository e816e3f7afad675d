import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QDVOLUMES_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("qdvolumes._ckernels", ["src/qdvolumes/_ckernels.pyx"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
