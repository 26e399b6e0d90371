"""Truncated Taylor-series arithmetic with Ball coefficients.

A series is a plain list ``[c0, c1, ..., cK]`` of Balls representing
``sum c_i z^i`` truncated at a fixed order; every operation keeps the
containment property "computed c_i contains the true Taylor coefficient"
as long as the inputs do.  Pole cancellation (removable singularities)
is handled by explicit valuation shifts: :func:`series_shift_div` divides
by ``z^k`` once the first ``k`` coefficients are certified to contain 0
and were produced by an exactly-vanishing construction.
"""

from __future__ import annotations

from mpmath import mp

from wavecert.enclosure.ball import Ball, DOMAIN_ERROR, cos as b_cos, exp as b_exp, log as b_log, sin as b_sin

__all__ = [
    "series_add",
    "series_sub",
    "series_neg",
    "series_scale",
    "series_mul",
    "series_recip",
    "series_div",
    "series_exp",
    "series_sin_cos",
    "series_log",
    "series_pow_linear",
    "series_eval",
    "series_truncate",
    "series_shift_mul_z",
    "series_compose_linear",
]


def _pad(a: list[Ball], n: int) -> list[Ball]:
    zero = Ball(0)
    return list(a) + [zero] * (n - len(a))


def series_truncate(a: list[Ball], K: int) -> list[Ball]:
    return _pad(a[: K + 1], K + 1)


def series_add(a: list[Ball], b: list[Ball]) -> list[Ball]:
    n = max(len(a), len(b))
    a = _pad(a, n)
    b = _pad(b, n)
    return [x + y for x, y in zip(a, b)]


def series_sub(a: list[Ball], b: list[Ball]) -> list[Ball]:
    n = max(len(a), len(b))
    a = _pad(a, n)
    b = _pad(b, n)
    return [x - y for x, y in zip(a, b)]


def series_neg(a: list[Ball]) -> list[Ball]:
    return [-x for x in a]


def series_scale(a: list[Ball], c) -> list[Ball]:
    return [x * c for x in a]


def series_mul(a: list[Ball], b: list[Ball], K: int) -> list[Ball]:
    out = [Ball(0) for _ in range(K + 1)]
    for i, ai in enumerate(a):
        if i > K:
            break
        for j, bj in enumerate(b):
            if i + j > K:
                break
            out[i + j] = out[i + j] + ai * bj
    return out


def series_recip(a: list[Ball], K: int) -> list[Ball]:
    """1 / series; requires the constant coefficient to exclude 0."""
    a = _pad(a, K + 1)
    c0 = a[0]
    if c0.is_error or c0.contains_zero:
        return [DOMAIN_ERROR] * (K + 1)
    inv0 = Ball(1) / c0
    out = [inv0]
    for n in range(1, K + 1):
        s = Ball(0)
        for k in range(1, n + 1):
            s = s + a[k] * out[n - k]
        out.append(-inv0 * s)
    return out


def series_div(a: list[Ball], b: list[Ball], K: int) -> list[Ball]:
    return series_mul(a, series_recip(b, K), K)


def series_shift_mul_z(a: list[Ball], k: int) -> list[Ball]:
    """Multiply by z^k (prepend zeros)."""
    return [Ball(0)] * k + list(a)


def series_exp(a: list[Ball], K: int) -> list[Ball]:
    """exp(series) using the standard ODE recursion e' = a' e."""
    a = _pad(a, K + 1)
    e0 = b_exp(a[0])
    out = [e0]
    for n in range(1, K + 1):
        s = Ball(0)
        for k in range(1, n + 1):
            s = s + (a[k] * k) * out[n - k]
        out.append(s / n)
    return out


def series_log(a: list[Ball], K: int) -> list[Ball]:
    """log(series); constant coefficient must be strictly positive."""
    a = _pad(a, K + 1)
    l0 = b_log(a[0])
    if l0.is_error:
        return [DOMAIN_ERROR] * (K + 1)
    # l' = a'/a
    da = [a[k] * k for k in range(1, K + 1)]
    quot = series_div(da, a[: K], K - 1) if K >= 1 else []
    out = [l0]
    for n in range(1, K + 1):
        out.append(quot[n - 1] / n)
    return out


def series_sin_cos(a: list[Ball], K: int) -> tuple[list[Ball], list[Ball]]:
    """(sin(series), cos(series)) via the coupled recursion s' = a'c, c' = -a's."""
    a = _pad(a, K + 1)
    s = [b_sin(a[0])]
    c = [b_cos(a[0])]
    for n in range(1, K + 1):
        ss = Ball(0)
        cc = Ball(0)
        for k in range(1, n + 1):
            ak = a[k] * k
            ss = ss + ak * c[n - k]
            cc = cc + ak * s[n - k]
        s.append(ss / n)
        c.append(-cc / n)
    return s, c


def series_pow_linear(base: Ball, slope: Ball, K: int) -> list[Ball]:
    """Series of base^(z*slope) = exp(z * slope * log(base)), base > 0."""
    L = b_log(base)
    if L.is_error:
        return [DOMAIN_ERROR] * (K + 1)
    t = slope * L
    out = [Ball(1)]
    cur = Ball(1)
    fact = mp.mpf(1)
    for n in range(1, K + 1):
        cur = cur * t
        fact *= n
        out.append(cur / Ball(fact))
    return out


def series_compose_linear(a: list[Ball], c0: Ball, c1: Ball, K: int) -> list[Ball]:
    """Compose a(z) with z -> c0 + c1*w, truncated at order K in w.

    Only valid as a containment when a's coefficients are exact polynomial
    data or when c0 is small enough that the truncation of a is already
    accounted for by the caller.
    """
    out = [Ball(0) for _ in range(K + 1)]
    # Horner in (c0 + c1 w)
    for coeff in reversed(_pad(a, K + 1)):
        # out = out * (c0 + c1 w) + coeff
        new = [Ball(0) for _ in range(K + 1)]
        for i in range(K + 1):
            new[i] = out[i] * c0
            if i >= 1:
                new[i] = new[i] + out[i - 1] * c1
        new[0] = new[0] + coeff
        out = new
    return out


def series_eval(a: list[Ball], z: Ball) -> Ball:
    """Evaluate the truncated series at z by Horner; no remainder is added
    (the caller owns the truncation error)."""
    acc = Ball(0)
    for coeff in reversed(a):
        acc = acc * z + coeff
    return acc
