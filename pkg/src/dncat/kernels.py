"""Kernel selection: compiled maximal-clique enumerator when available,
pure-Python fallback otherwise.  Set DNCAT_PURE=1 to force the fallback."""

from __future__ import annotations

import os

if os.environ.get("DNCAT_PURE"):
    from . import _maxcliques_py as _impl
else:
    try:
        from . import _maxcliques_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _maxcliques_py as _impl

maximal_cliques = _impl.maximal_cliques
BACKEND: str = _impl.BACKEND
