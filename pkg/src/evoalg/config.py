"""Size bounds for the exhaustive and numeric searches.

``EVOALG_SIZE_BOUND`` overrides both defaults when set.
"""

from __future__ import annotations

import os

from .errors import SizeBoundExceeded

EXACT_SIZE_BOUND = 12
NUMERIC_SIZE_BOUND = 10


def _env_bound() -> int | None:
    raw = os.environ.get("EVOALG_SIZE_BOUND")
    if not raw:
        return None
    return int(raw)


def exact_bound() -> int:
    env = _env_bound()
    return EXACT_SIZE_BOUND if env is None else env


def numeric_bound() -> int:
    env = _env_bound()
    return NUMERIC_SIZE_BOUND if env is None else env


def check_size(n: int, bound: int | None) -> None:
    """Raise SizeBoundExceeded when ``n > bound``; ``bound=None`` disables the check."""
    if bound is not None and n > bound:
        raise SizeBoundExceeded(n, bound)
