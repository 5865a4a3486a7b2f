from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernel is optional: residuedet.exact_matrix falls back to the
# vectorized numpy implementation when the extension is absent.
ext = Extension(
    "residuedet._detmod",
    ["src/residuedet/_detmod.pyx"],
    extra_compile_args=["-O3"],
    optional=True,
)

setup(ext_modules=cythonize([ext], language_level=3))
