"""Backend selection for the iteration-heavy kernels.

The compiled Cython core is used when importable; otherwise the pure
numpy implementation takes over.  Set NNSOLVE_BACKEND=pure or
NNSOLVE_BACKEND=compiled to force a choice (forcing "compiled" raises if
the extension is missing).
"""
from __future__ import annotations

import os

from . import _pure

_forced = os.environ.get("NNSOLVE_BACKEND")

if _forced == "pure":
    _active = _pure
elif _forced == "compiled":
    from . import _core as _active  # type: ignore[no-redef]
elif _forced is None:
    try:
        from . import _core as _active  # type: ignore[no-redef]
    except ImportError:
        _active = _pure
else:
    raise ImportError(
        f"NNSOLVE_BACKEND={_forced!r} is not valid; use 'pure' or 'compiled'"
    )

kernels = _active


def active_backend() -> str:
    """Name of the backend in use: 'compiled' or 'pure'."""
    return kernels.BACKEND_NAME
