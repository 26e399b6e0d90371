"""Rigorous enclosures for highest cusped traveling waves of fractional KdV.

The library certifies, for subintervals of alpha in (-1, 0), enclosures of the
three constants (n, delta, D) controlling the contraction argument
delta < (1 - D)^2 / (4 n) and assembles them into machine-checkable reports.
"""

from wavecert.enclosure import Ball, ComplexBall, Precision, set_precision, get_precision

__all__ = [
    "Ball",
    "ComplexBall",
    "Precision",
    "set_precision",
    "get_precision",
]
