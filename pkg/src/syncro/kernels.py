"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy fallback.
Set ``SYNCRO_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SYNCRO_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "compiled"


def get_backend(name=None):
    """Return the kernel module for ``name`` ("compiled", "python", or None for active)."""
    if name is None:
        return _impl
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")


def compiled_available():
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        return False
    return True


def subset_images(column, n):
    return _impl.subset_images(column, n)


def bfs(succ, start):
    return _impl.bfs(succ, start)


def refine(succ, init):
    return _impl.refine(succ, init)


def set_backend(name):
    """Switch the active backend; returns the previous backend name."""
    global _impl, BACKEND
    previous = BACKEND
    _impl = get_backend(name)
    BACKEND = name
    return previous
