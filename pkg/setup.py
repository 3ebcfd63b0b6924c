from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "dncat._maxcliques_cy",
                ["src/dncat/_maxcliques_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package runs on the pure-Python kernel without the extension
    ext_modules = []

setup(ext_modules=ext_modules)
