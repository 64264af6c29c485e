import os

from setuptools import setup

ext_modules = []
if not os.environ.get("INDCOUNT_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("indcount._kernel", ["src/indcount/_kernel.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the pure-Python kernel is used
        ext_modules = []

setup(ext_modules=ext_modules)
