import os

from setuptools import Extension, setup

# The census kernel is the only compiled piece; SDCODES_NO_EXT=1 installs the
# pure-Python package (a slower fallback kernel is selected at import).
extensions = []
if not os.environ.get("SDCODES_NO_EXT"):
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "sdcodes._census",
                ["src/sdcodes/_census.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
