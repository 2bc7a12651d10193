from setuptools import setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        ["src/boundance/_gf2core.pyx"],
        language_level="3",
    ),
)
