"""Size guard for operations whose cost is decided by a closed formula.

Anything that would materialize more than ``DEFAULT_MAX_CELLS`` cells is
refused up front with a ``SizeCapError`` naming the offending quantity, so a
runaway parameter fails in microseconds instead of hours.  Callers can raise
the cap explicitly.
"""

from __future__ import annotations

DEFAULT_MAX_CELLS = 10_000_000


class SizeCapError(RuntimeError):
    def __init__(self, quantity: str, value: int, cap: int):
        self.quantity = quantity
        self.value = value
        self.cap = cap
        super().__init__(
            f"refusing: {quantity} = {value} exceeds the size cap {cap}"
        )


def check_cap(quantity: str, value: int, cap: int = DEFAULT_MAX_CELLS) -> None:
    if value > cap:
        raise SizeCapError(quantity, value, cap)
