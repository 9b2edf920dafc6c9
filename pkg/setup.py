import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package is fully
# functional with the pure-Python fallback in overq._qkern_py.  Set
# OVERQ_NO_EXT=1 to skip the extension entirely.
ext_modules = []
if os.environ.get("OVERQ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("overq._qkern", ["src/overq/_qkern.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
