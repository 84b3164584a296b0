"""Cooperative wall-clock budgets for interruptible computations.

Long-running invariant computers call ``budget.check()`` inside their inner
loops. The call is cheap (a counter decrement most of the time) and raises
:class:`ComputationInterrupted` once the deadline passes or the budget is
cancelled from another thread.
"""

from __future__ import annotations

import time

from .errors import ComputationInterrupted

# Number of check() calls between actual clock reads. Inner loops do little
# enough work per call that this keeps clock polls well under the 10ms
# responsiveness contract.
_STRIDE = 64


class Budget:
    """Deadline plus cancellation flag, polled cooperatively."""

    __slots__ = ("deadline", "clock", "_cancelled", "_countdown")

    def __init__(self, seconds: float | None = None, clock=time.monotonic):
        self.clock = clock
        self.deadline = None if seconds is None else clock() + seconds
        self._cancelled = False
        self._countdown = _STRIDE

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def remaining(self) -> float | None:
        if self.deadline is None:
            return None
        return self.deadline - self.clock()

    def check(self) -> None:
        """Raise ComputationInterrupted if cancelled or past the deadline."""
        if self._cancelled:
            raise ComputationInterrupted("computation cancelled")
        self._countdown -= 1
        if self._countdown <= 0:
            self._countdown = _STRIDE
            if self.deadline is not None and self.clock() > self.deadline:
                raise ComputationInterrupted("budget exhausted")


NO_BUDGET = Budget()
