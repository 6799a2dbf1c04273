from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "canalrec._kernel._cyterms",
                ["src/canalrec/_kernel/_cyterms.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback is selected at import time; the compiled
    # kernel is an accelerator, never a requirement.
    ext_modules = []

setup(ext_modules=ext_modules)
