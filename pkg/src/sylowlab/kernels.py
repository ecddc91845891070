"""Kernel selection: the compiled backend when built, else pure Python.

Set ``SYLOWLAB_PURE=1`` to force the pure-Python backend.
"""
import os

if os.environ.get("SYLOWLAB_PURE", "") not in ("", "0"):
    from ._pykernels import *  # noqa: F401,F403
    from ._pykernels import BACKEND
else:
    try:
        from ._ckernels import *  # noqa: F401,F403
        from ._ckernels import BACKEND
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        from ._pykernels import BACKEND

__all__ = [
    "BACKEND", "identity", "compose", "invert", "is_identity", "first_moved",
    "conjugate", "conjugate_key", "perm_order", "power", "sift",
    "orbit_transversal", "bfs_closure", "product_enumerate",
]
