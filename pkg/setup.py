"""Build script for the optional compiled kernel.

The package is pure Python except for qdiv._kernels, a Cython module holding
the truncated-convolution hot loops.  The extension is marked optional: if it
fails to build (no compiler, no Cython), installation still succeeds and the
package falls back to qdiv._kernels_py at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qdiv._kernels", ["src/qdiv/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

for ext in ext_modules:
    ext.optional = True

setup(ext_modules=ext_modules)
