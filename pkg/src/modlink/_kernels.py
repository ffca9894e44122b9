"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
reference. Set ``MODLINK_PURE=1`` to force the fallback.
"""
import os

if os.environ.get("MODLINK_PURE"):
    from . import _purepy as _impl
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        from . import _purepy as _impl

BACKEND = "cython" if _impl.__name__.endswith("_speedups") else "python"

TRANSITIONS = _impl.TRANSITIONS
mechanical_xy = _impl.mechanical_xy
substitute = _impl.substitute
linear_witness = _impl.linear_witness
trace_states = _impl.trace_states
winding_turns = _impl.winding_turns

__all__ = [
    "BACKEND",
    "TRANSITIONS",
    "mechanical_xy",
    "substitute",
    "linear_witness",
    "trace_states",
    "winding_turns",
]
