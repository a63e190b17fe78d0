"""Hot-kernel backend selection.

The compiled Cython module is used when it built successfully; otherwise
the numpy implementation takes over.  Set FUSKIT_BACKEND=python to force
the fallback (e.g. to compare backends, see benchmarks/bench_kernels.py).
"""

import os

from . import _pykernels

if os.environ.get("FUSKIT_BACKEND", "").lower() == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

associativity_witness = _impl.associativity_witness
power_iteration = _impl.power_iteration


def get_backend(name: str):
    """Explicit backend module by name ("compiled" or "python")."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list:
    out = ["python"]
    try:
        from . import _ckernels  # noqa: F401

        out.insert(0, "compiled")
    except ImportError:
        pass
    return out
