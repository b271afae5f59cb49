"""Arithmetic kernel selection.

Prefers the compiled extension; falls back to the pure-Python module with
the identical interface. Set SO5CG_BACKEND=pure to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("SO5CG_BACKEND", "").strip().lower() == "pure":
    from . import pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND = _impl.BACKEND_NAME
squarefree_split = _impl.squarefree_split
add_terms = _impl.add_terms
mul_terms = _impl.mul_terms
scale_terms = _impl.scale_terms
neg_terms = _impl.neg_terms
