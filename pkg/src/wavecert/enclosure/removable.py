"""Certified evaluation of f(x)/x^n across the removable singularity at 0.

For f analytic with a zero of order n at 0, and g = f/x^n,

    g^(p)(x) = sum_{k=0}^{m} ((k+p)!/k!) f_{k+n+p}(0) x^k
             + ((m+p+1)!/(m+1)!) f_{m+n+p+1}(xi) x^{m+1}

for some xi between 0 and x, where f_j(y) = f^(j)(y)/j! is the j-th Taylor
coefficient of f at y.  Enclosing the Taylor coefficients at the exact point
0 and the remainder coefficient over hull(0, x) gives a certified value even
when the input ball straddles 0.
"""

from __future__ import annotations

import math
from typing import Callable

from wavecert.enclosure.ball import Ball, DOMAIN_ERROR, hull

__all__ = ["eval_removable"]

DerivativeOracle = Callable[[Ball, int], Ball]


def eval_removable(f: DerivativeOracle, n: int, x: Ball, m: int = 8, p: int = 0) -> Ball:
    """Enclosure of the p-th derivative of f(x)/x^n.

    ``f(ball, k)`` must return an enclosure of f^(k) on ``ball``; ``n`` is the
    zero order of f at 0 (sanity-checked by containment), ``m`` the expansion
    degree.  Returns a domain error if a required derivative enclosure is
    unavailable.
    """
    if x.is_error or n < 0 or m < 0 or p < 0:
        return DOMAIN_ERROR
    zero = Ball(0)
    for j in range(n):
        fj = f(zero, j)
        if fj.is_error or not fj.contains(0):
            return DOMAIN_ERROR
    acc = Ball(0)
    pw = Ball(1)
    for k in range(m + 1):
        order = k + n + p
        fk = f(zero, order)
        if fk.is_error:
            return DOMAIN_ERROR
        coeff = math.factorial(k + p) // math.factorial(k)
        acc = acc + (Ball(coeff) * fk / Ball(math.factorial(order))) * pw
        pw = pw * x
    xi = hull([zero, x])
    order = m + n + p + 1
    fr = f(xi, order)
    if fr.is_error:
        return DOMAIN_ERROR
    coeff = math.factorial(m + p + 1) // math.factorial(m + 1)
    return acc + (Ball(coeff) * fr / Ball(math.factorial(order))) * pw
