"""Backend selection for the construction kernels.

The compiled Cython module is used when it imports; otherwise (or when
``LYNDEX_PURE_PYTHON`` is set) the pure-Python twin is used.
"""

import os

from lyndex import _pykernels

python_backend = _pykernels

try:
    from lyndex import _ckernels as cython_backend
except ImportError:  # extension not built
    cython_backend = None

if cython_backend is not None and not os.environ.get("LYNDEX_PURE_PYTHON"):
    active = cython_backend
    BACKEND = "cython"
else:
    active = _pykernels
    BACKEND = "python"

lyndon_tree = active.lyndon_tree
lyndon_slp = active.lyndon_slp
fingerprints = active.fingerprints

__all__ = ["BACKEND", "lyndon_tree", "lyndon_slp", "fingerprints",
           "python_backend", "cython_backend"]
