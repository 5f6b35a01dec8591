from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    # without Cython the package runs on the pure Python kernels
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("schurkit._kernels", sources=["src/schurkit/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
