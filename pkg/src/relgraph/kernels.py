"""Selects the compiled subset kernel when it is importable.

Set ``RELGRAPH_PURE=1`` to force the pure-Python implementation.
"""
import os

from . import _cutkernel_py

pure = _cutkernel_py

if os.environ.get("RELGRAPH_PURE") == "1":
    compiled = None
else:
    try:
        from . import _cutkernel as compiled
    except ImportError:
        compiled = None

backend = compiled if compiled is not None else pure
HAVE_COMPILED = compiled is not None
