"""Kernel backend selection.

The compiled ``_kernels`` module is used when importable; otherwise the
numpy twin in ``_kernels_py``.  Set ``PYJAMA_BACKEND=python`` to force the
fallback, ``PYJAMA_BACKEND=cython`` to require the extension.
"""

import os

from . import _kernels_py


def load(name: str | None = None):
    if name == "python":
        return _kernels_py
    try:
        from . import _kernels
    except ImportError:
        if name == "cython":
            raise
        return _kernels_py
    return _kernels


def available() -> list[str]:
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


kernels = load(os.environ.get("PYJAMA_BACKEND") or None)
BACKEND = kernels.NAME
