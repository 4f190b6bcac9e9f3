import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GRAPHIDEALS_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("graphideals._kernels_cy", ["src/graphideals/_kernels_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
