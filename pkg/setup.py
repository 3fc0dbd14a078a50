from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/drinl/_kernel_cy.pyx"],
        language_level=3,
    )
except Exception as exc:  # no compiler / no Cython: pure fallback still works
    print(f"building without compiled kernel: {exc}")

setup(ext_modules=ext_modules)
