"""Kernel backend selection.

The compiled extension (``_ckern``, built by setup.py when Cython and a C
compiler are present) and the pure-Python module (``pykernel``) implement
the same ``TildeKernel`` API with bit-identical outputs. The extension is
preferred when available.

PERMCHAR_KERNEL=py forces the pure-Python kernel; PERMCHAR_KERNEL=c
demands the compiled one and raises if it is missing.
"""

import os

from . import pykernel

_choice = os.environ.get("PERMCHAR_KERNEL", "auto").strip().lower() or "auto"
if _choice not in ("auto", "c", "py", "python"):
    raise ImportError("PERMCHAR_KERNEL must be one of auto|c|py, got %r" % (_choice,))

_impl = pykernel
if _choice in ("auto", "c"):
    try:
        from . import _ckern as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "c":
            raise ImportError(
                "PERMCHAR_KERNEL=c but the compiled kernel is not built; "
                "reinstall with Cython available or use PERMCHAR_KERNEL=py"
            )


def backend_name() -> str:
    """'c' when the compiled kernel is active, 'python' otherwise."""
    return "python" if _impl is pykernel else "c"


def make_tilde_kernel(l, n, ng, gmul, ginv, sigma):
    return _impl.TildeKernel(l, n, ng, gmul, ginv, sigma)


def get_module(name):
    """Fetch a specific backend module: 'py' always works, 'c' may return
    None when the extension is not built. Used by the benchmark."""
    if name in ("py", "python"):
        return pykernel
    if name == "c":
        try:
            from . import _ckern

            return _ckern
        except ImportError:
            return None
    raise ValueError("unknown kernel backend %r" % (name,))
