"""Working-precision handling for the interval backend.

A single process-wide precision is captured when a run starts (the CLI sets it
once before any computation); all enclosures stay valid at any precision, only
their tightness changes.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import iv, mp

_MIN_BITS = 53
_DEFAULT_BITS = 128


@dataclass(frozen=True)
class Precision:
    """Working precision in bits for ball arithmetic (>= 53)."""

    bits: int = _DEFAULT_BITS

    def __post_init__(self) -> None:
        if self.bits < _MIN_BITS:
            raise ValueError(f"precision must be >= {_MIN_BITS} bits, got {self.bits}")


_current = Precision(_DEFAULT_BITS)


def set_precision(bits: int | Precision) -> Precision:
    """Set the process-wide working precision; returns the previous one."""
    global _current
    prev = _current
    prec = bits if isinstance(bits, Precision) else Precision(int(bits))
    _current = prec
    iv.prec = prec.bits
    # mp is used for decimal printing and root hints; give it guard bits.
    mp.prec = prec.bits + 16
    return prev


def get_precision() -> Precision:
    return _current


# Initialize the backend contexts on import.
set_precision(_DEFAULT_BITS)
