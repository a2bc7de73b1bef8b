"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a drop-in
fallback.  Set EVENTPAIRS_PURE_KERNELS=1 to force the fallback (used by the
parity tests and the benchmark).
"""

import os

from . import pure

if os.environ.get("EVENTPAIRS_PURE_KERNELS") == "1":
    _impl = pure
else:
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
pair_keys = _impl.pair_keys
total_window_pairs = _impl.total_window_pairs
match_sum = _impl.match_sum
pair_match_sum = _impl.pair_match_sum


def get_backend(name: str):
    """Return a specific backend module by name ('pure' or 'compiled')."""
    if name == "pure":
        return pure
    if name == "compiled":
        from . import _ckern  # raises ImportError if not built

        return _ckern
    raise ValueError(f"unknown kernel backend {name!r}")
