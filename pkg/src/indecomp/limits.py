"""Global order cap and its environment override."""

from __future__ import annotations

import os

ORDER_CAP = 512

ENV_CAP = "INDECOMP_MAX_ORDER"


class OrderCapError(RuntimeError):
    """Raised when a requested computation exceeds the effective order cap."""


def effective_cap() -> int:
    """Return the order cap, lowered (never raised) by INDECOMP_MAX_ORDER."""
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return ORDER_CAP
    try:
        value = int(raw)
    except ValueError:
        return ORDER_CAP
    if value < 1:
        return ORDER_CAP
    return min(ORDER_CAP, value)
