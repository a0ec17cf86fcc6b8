import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hullstab/_chain_cy.pyx"],
        language_level="3",
    )
except ImportError:
    warnings.warn(
        "Cython not available; installing with the pure-Python chain kernel only."
    )
    ext_modules = []

setup(ext_modules=ext_modules)
