"""numba switch.

Set ``EVOALG_DISABLE_JIT=1`` to force the pure numpy code paths (also used
automatically when numba is not importable).
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("EVOALG_DISABLE_JIT", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    JIT_ENABLED = True
except ImportError:
    JIT_ENABLED = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(f):
            return f

        return wrap
