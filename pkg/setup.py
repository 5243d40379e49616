from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernel bit-identical to the pure
# Python fallback (no fused multiply-add), which the parity tests rely on.
ext_modules = [
    Extension(
        "tscalc._kernel._core",
        ["src/tscalc/_kernel/_core.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    ),
]

setup(ext_modules=cythonize(ext_modules, language_level="3"))
