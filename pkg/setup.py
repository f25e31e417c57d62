"""Build script: optionally compiles the normalization kernel with Cython.

The kernel source of truth is src/encodability/_nf.py.  At build time it
is copied to a scratch directory and compiled as the extension module
encodability._nf_c; at import time the package prefers the compiled
module and falls back to the pure-Python original.  If Cython or a C
compiler is unavailable the build proceeds without the extension.
"""

import shutil
from pathlib import Path

from setuptools import setup

HERE = Path(__file__).resolve().parent
KERNEL_SRC = HERE / "src" / "encodability" / "_nf.py"


def _accelerator_extensions():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    gen_dir = HERE / "build" / "cython_gen"
    gen_dir.mkdir(parents=True, exist_ok=True)
    gen = gen_dir / "_nf_c.py"
    shutil.copyfile(KERNEL_SRC, gen)
    ext = Extension("encodability._nf_c", [str(gen.relative_to(HERE))])
    try:
        return cythonize([ext], language_level="3", quiet=True)
    except Exception:
        return []


setup(ext_modules=_accelerator_extensions())
