"""Kernel backend selection.

The scalar kernels (erfcx, Faddeeva, phi, and the phi-solver) exist in
two interchangeable forms: a compiled Cython extension and a pure-Python
twin.  The compiled form is preferred when importable; setting the
environment variable ``SLOWMODE_PURE_PYTHON`` to a non-empty value other
than ``0`` forces the pure-Python twin.
"""

import os

_force_pure = os.environ.get("SLOWMODE_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

erfcx = _impl.erfcx
faddeeva = _impl.faddeeva
phi = _impl.phi
solve_phi = _impl.solve_phi


def backend() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"python"``."""
    return _impl.BACKEND_KIND
