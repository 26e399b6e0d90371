"""Certified special functions over balls.

Everything here carries explicit truncation/tail bounds:

* Hurwitz zeta (values, s-derivatives, Taylor series in s, deflated variant,
  complex second argument) via Euler-Maclaurin with the classical periodic-
  Bernoulli remainder bound |B~_m(t)| <= 4 m!/(2 pi)^m.
* gamma/log-gamma via argument shift plus Stirling with the Binet remainder
  (first omitted term, real positive argument).
* digamma/polygamma via the same machinery (polygamma k>=1 reduces to
  Hurwitz zeta at integer s).
* Stieltjes constants as Taylor coefficients of the deflated zeta at s=1.
* Upper incomplete gamma at integer order (finite closed form), Lerch
  transcendent and Gauss 2F1 by direct series with certified geometric or
  alternating tails.
"""

from __future__ import annotations

import math

from mpmath import bernfrac, iv, mp

from wavecert.enclosure.ball import (
    Ball,
    ComplexBall,
    DOMAIN_ERROR,
    cpow_real,
    exp as b_exp,
    hull,
    log as b_log,
    pow_ball,
)
from wavecert.enclosure.series import series_exp, series_mul

__all__ = [
    "bernoulli_ball",
    "hurwitz_series",
    "hurwitz_zeta",
    "deflated_zeta",
    "zeta",
    "zeta_deriv",
    "stieltjes",
    "euler_gamma_ball",
    "lgamma",
    "gamma",
    "gamma_series_pos",
    "digamma",
    "polygamma",
    "incomplete_gamma_upper",
    "lerch_phi",
    "hyp2f1",
    "exp_minus_one_over",
    "expm1_over_series",
    "hurwitz_zeta_complex",
]

_bern_cache: dict[tuple[int, int], Ball] = {}


def bernoulli_ball(n: int) -> Ball:
    key = (mp.prec, n)
    out = _bern_cache.get(key)
    if out is None:
        p, q = bernfrac(n)
        out = Ball(int(p)) / Ball(int(q))
        _bern_cache[key] = out
    return out


# ----------------------------------------------------------------------
# Euler-Maclaurin Hurwitz zeta engine
# ----------------------------------------------------------------------

def _em_parameters(s_ball: Ball, a_lo, bits: int, rho) -> tuple[int, int]:
    """Truncation (N) and correction (J) orders for the Euler-Maclaurin sum."""
    s_low = float(s_ball.lo) - float(rho)
    s_mag = float(s_ball.mag) + float(rho)
    J = max(12, (2 * bits) // 9 + 6, int((4.0 - s_low) / 2.0) + 8)
    N = max(6, (2 * bits) // 13, int(0.22 * (s_mag + 2 * J) - float(a_lo)) + 1)
    return N, J


def _em_remainder_bound(s_mag_plus_rho, s_lo_minus_rho, a_lo, N: int, J: int) -> Ball:
    """|R_{N,J}| <= 4 |(s)_{2J+1}| (a+N)^(-(sigma+2J)) / ((2 pi)^(2J+1) (sigma+2J)),
    uniform over the s-disk and over real a' >= a_lo (complex a: a_lo = Re a)."""
    sigma = Ball(s_lo_minus_rho)
    denom_exp = sigma + (2 * J)
    if not denom_exp.is_positive:
        return DOMAIN_ERROR
    ss = Ball(s_mag_plus_rho)
    poch = Ball(1)
    for i in range(2 * J + 1):
        poch = poch * (ss + i)
    base = Ball(a_lo) + N
    two_pi = Ball(_raw=2 * iv.pi)
    val = (Ball(4) * poch) / (pow_ball(two_pi, Ball(2 * J + 1)) * denom_exp)
    val = val * pow_ball(base, -denom_exp)
    return abs(val)


def expm1_over_series(t0: Ball, K: int) -> list[Ball]:
    """Taylor coefficients of E1(t) = (e^t - 1)/t at the (possibly wide) center t0.

    out[i] contains E1^(i)(t)/i! for every t in t0; E1 is entire with
    E1^(i)(t0)/i! = sum_{n>=0} C(n+i, i) t0^n / (n+i+1)!."""
    T = t0.mag
    tol = mp.mpf(2) ** (-mp.prec - 8)
    out = []
    for i in range(K + 1):
        acc = Ball(0)
        coeff = Ball(1) / Ball(math.factorial(i + 1))
        power = Ball(1)
        n = 0
        while True:
            term = coeff * power
            acc = acc + term
            ratio_num = T * (n + i + 1)
            ratio_den = mp.mpf((n + 1) * (n + i + 2))
            if n > 4 and ratio_num < ratio_den / 2:
                tail_mag = abs(term).hi * (ratio_num / ratio_den) * 2
                if tail_mag < tol * (abs(acc).hi + 1):
                    acc = acc + Ball.midrad(0, tail_mag)
                    break
            n += 1
            coeff = coeff * Ball(n + i) / (Ball(n) * Ball(n + i + 1))
            power = power * t0
            if n > 1000:
                return [DOMAIN_ERROR] * (K + 1)
        out.append(acc)
    return out


def hurwitz_series(
    s: Ball,
    a: Ball,
    K: int = 0,
    *,
    deflate: bool = False,
    rho=None,
) -> list[Ball]:
    """Taylor coefficients (in s) of the Hurwitz zeta function.

    Returns ``[c_0, ..., c_K]`` with the containment: for every s' in ``s``
    and a' in ``a``, ``c_i`` contains ``(d/ds)^i f(s', a') / i!`` where
    ``f = zeta(., a')`` or, when ``deflate``, ``zeta(., a') + 1/(1-s)``.
    The deflated path accepts s-balls containing 1.
    """
    if s.is_error or a.is_error or a.lo <= 0:
        return [DOMAIN_ERROR] * (K + 1)
    bits = mp.prec
    if rho is None:
        rho = mp.mpf(0) if K == 0 else mp.mpf("0.5")
    if not deflate and s.contains(1):
        return [DOMAIN_ERROR] * (K + 1)
    N, J = _em_parameters(s, a.lo, bits, rho)

    neg_s = -s
    acc = [Ball(0) for _ in range(K + 1)]
    for k in range(N):
        L = b_log(a + k)
        term = b_exp(neg_s * L)
        negL = -L
        for i in range(K + 1):
            acc[i] = acc[i] + term
            if i < K:
                term = term * negL / (i + 1)

    aN = a + N
    L = b_log(aN)
    negL = -L
    expprof = [Ball(1)]
    cur = Ball(1)
    for i in range(1, K + 1):
        cur = cur * negL / i
        expprof.append(cur)

    if deflate:
        # ((a+N)^{1-s} - 1)/(s-1) + 1/(1-s)-deflation folded in: -L*E1((1-s)L)
        t0 = (Ball(1) - s) * L
        e1 = expm1_over_series(t0, K)
        pole = [e1[j] * (negL ** j) * (-L) for j in range(K + 1)]
    else:
        # (a+N)^{1-s-z}/(s-1+z) by long division with the linear denominator
        scalar_top = b_exp((Ball(1) - s) * L)
        top = [scalar_top * expprof[i] for i in range(K + 1)]
        d0 = s - 1
        if d0.contains_zero:
            return [DOMAIN_ERROR] * (K + 1)
        pole = []
        prev = Ball(0)
        for i in range(K + 1):
            num = top[i] - prev
            ci = num / d0
            pole.append(ci)
            prev = ci
    for i in range(K + 1):
        acc[i] = acc[i] + pole[i]

    half_scalar = b_exp(neg_s * L) / 2
    for i in range(K + 1):
        acc[i] = acc[i] + half_scalar * expprof[i]

    # Bernoulli corrections: sum_j B_{2j}/(2j)! (s)_{2j-1} (a+N)^{-s-2j+1}
    poch = [Ball(0) for _ in range(K + 1)]
    poch[0] = s
    if K >= 1:
        poch[1] = Ball(1)
    scalar = b_exp((Ball(1) - s) * L)
    inv2 = Ball(1) / (aN * aN)
    bsum = [Ball(0) for _ in range(K + 1)]
    for j in range(1, J + 1):
        scalar = scalar * inv2
        cj = bernoulli_ball(2 * j) / Ball(math.factorial(2 * j))
        w = cj * scalar
        for i in range(K + 1):
            bsum[i] = bsum[i] + w * poch[i]
        if j < J:
            for shift in (2 * j - 1, 2 * j):
                c0 = s + shift
                new = [Ball(0) for _ in range(K + 1)]
                for i in range(K + 1):
                    new[i] = poch[i] * c0
                    if i >= 1:
                        new[i] = new[i] + poch[i - 1]
                poch = new
    conv = series_mul(bsum, expprof, K)
    for i in range(K + 1):
        acc[i] = acc[i] + conv[i]

    if K == 0:
        R = _em_remainder_bound(s.mag, s.lo, a.lo, N, J)
        if R.is_error:
            return [DOMAIN_ERROR]
        acc[0] = acc[0] + Ball.midrad(0, R.hi)
    else:
        R = _em_remainder_bound(s.mag + rho, s.lo - rho, a.lo, N, J)
        if R.is_error:
            return [DOMAIN_ERROR] * (K + 1)
        inv_rho = Ball(1) / Ball(rho)
        pad = Ball(R.hi)
        for i in range(K + 1):
            acc[i] = acc[i] + Ball.midrad(0, pad.hi)
            pad = pad * inv_rho
    return acc


def hurwitz_zeta(s: Ball, a: Ball, deriv: int = 0) -> Ball:
    """(d/ds)^deriv zeta(s, a); s-balls containing 1 are a domain error
    (use deflated_zeta there)."""
    out = hurwitz_series(s, a, deriv)
    c = out[deriv]
    if c.is_error:
        return DOMAIN_ERROR
    return c * Ball(math.factorial(deriv))


def deflated_zeta(s: Ball, a: Ball, deriv: int = 0) -> Ball:
    """zeta(s, a) + 1/(1-s); accepts s-balls containing 1."""
    out = hurwitz_series(s, a, deriv, deflate=True)
    c = out[deriv]
    if c.is_error:
        return DOMAIN_ERROR
    return c * Ball(math.factorial(deriv))


def zeta(s: Ball) -> Ball:
    return hurwitz_zeta(s, Ball(1))


def zeta_deriv(s: Ball, k: int) -> Ball:
    return hurwitz_zeta(s, Ball(1), k)


_stieltjes_cache: dict[tuple[int, int], Ball] = {}


def stieltjes(n: int) -> Ball:
    """The Stieltjes constant gamma_n, read off the deflated zeta at s=1:
    deflated zeta(s,1) = sum (-1)^n gamma_n (s-1)^n / n!."""
    key = (mp.prec, n)
    out = _stieltjes_cache.get(key)
    if out is None:
        coeffs = hurwitz_series(Ball(1), Ball(1), n, deflate=True)
        out = coeffs[n] * Ball(math.factorial(n)) * ((-1) ** n)
        _stieltjes_cache[key] = out
    return out


def euler_gamma_ball() -> Ball:
    return stieltjes(0)


# ----------------------------------------------------------------------
# gamma family
# ----------------------------------------------------------------------

def _stirling_lgamma(z: Ball) -> Ball:
    logz = b_log(z)
    out = (z - Ball("0.5")) * logz - z + b_log(Ball(_raw=2 * iv.pi)) / 2
    z2 = z * z
    pw = z
    j = 1
    target = mp.mpf(2) ** (-mp.prec - 8)
    while True:
        term = bernoulli_ball(2 * j) / (Ball(2 * j) * Ball(2 * j - 1) * pw)
        out = out + term
        nxt = abs(bernoulli_ball(2 * j + 2) / (Ball(2 * j + 2) * Ball(2 * j + 1) * (pw * z2))).hi
        if nxt < target or j >= 80:
            out = out + Ball.midrad(0, nxt)
            break
        pw = pw * z2
        j += 1
    return out


def _shift_target() -> int:
    return max(8, int(0.16 * mp.prec))


def lgamma(x: Ball) -> Ball:
    """log Gamma on strictly positive balls."""
    if x.is_error or x.lo <= 0:
        return DOMAIN_ERROR
    Z0 = _shift_target()
    n = max(0, int(mp.ceil(Z0 - x.lo)))
    out = _stirling_lgamma(x + n)
    for i in range(n):
        out = out - b_log(x + i)
    return out


def gamma(x: Ball) -> Ball:
    """Gamma on balls avoiding nonpositive integers (else domain error)."""
    if x.is_error:
        return DOMAIN_ERROR
    if x.lo > 0:
        return b_exp(lgamma(x))
    n = int(mp.ceil(1 - x.lo))
    denom = Ball(1)
    for i in range(n):
        f = x + i
        if f.contains_zero:
            return DOMAIN_ERROR
        denom = denom * f
    top = gamma(x + n)
    if top.is_error:
        return DOMAIN_ERROR
    return top / denom


def digamma(x: Ball) -> Ball:
    if x.is_error or x.lo <= 0:
        return DOMAIN_ERROR
    Z0 = _shift_target()
    n = max(0, int(mp.ceil(Z0 - x.lo)))
    z = x + n
    out = b_log(z) - Ball(1) / (2 * z)
    z2 = z * z
    pw = z2
    j = 1
    target = mp.mpf(2) ** (-mp.prec - 8)
    while True:
        term = bernoulli_ball(2 * j) / (Ball(2 * j) * pw)
        out = out - term
        nxt = abs(bernoulli_ball(2 * j + 2) / (Ball(2 * j + 2) * (pw * z2))).hi
        if nxt < target or j >= 80:
            out = out + Ball.midrad(0, nxt)
            break
        pw = pw * z2
        j += 1
    for i in range(n):
        out = out - Ball(1) / (x + i)
    return out


def polygamma(k: int, x: Ball) -> Ball:
    """psi^(k)(x) for x > 0."""
    if k == 0:
        return digamma(x)
    sign = Ball((-1) ** (k + 1))
    return sign * Ball(math.factorial(k)) * hurwitz_zeta(Ball(k + 1), x)


def gamma_series_pos(c: Ball, K: int) -> list[Ball]:
    """Taylor coefficients of Gamma(c+z) at a strictly positive center ball c
    (exp of the log-gamma series whose coefficients are polygamma values)."""
    if c.is_error or c.lo <= 0:
        return [DOMAIN_ERROR] * (K + 1)
    lg = [lgamma(c)]
    for i in range(1, K + 1):
        lg.append(polygamma(i - 1, c) / Ball(math.factorial(i)))
    return series_exp(lg, K)


# ----------------------------------------------------------------------
# miscellaneous certified functions
# ----------------------------------------------------------------------

def incomplete_gamma_upper(n: int, z: Ball) -> Ball:
    """Gamma(n, z) for integer n >= 1 and z > 0 (finite closed form)."""
    if n < 1 or z.is_error or z.lo <= 0:
        return DOMAIN_ERROR
    s = Ball(0)
    term = Ball(1)
    for k in range(n):
        if k > 0:
            term = term * z / k
        s = s + term
    return Ball(math.factorial(n - 1)) * b_exp(-z) * s


def exp_minus_one_over(t: Ball) -> Ball:
    """(e^t - 1)/t with value 1 at t=0; increasing in t, so endpoint evaluation."""
    if t.is_error:
        return DOMAIN_ERROR

    def _point(v) -> Ball:
        b = Ball(v)
        if abs(b).hi < mp.mpf("0.5"):
            return expm1_over_series(b, 0)[0]
        return (b_exp(b) - 1) / b

    lo_v = _point(t.lo)
    hi_v = _point(t.hi)
    return Ball.interval(lo_v.lo, hi_v.hi)


def lerch_phi(z: Ball, s: Ball, a: Ball) -> Ball:
    """Lerch transcendent sum_{m>=0} z^m (a+m)^{-s} for 0 <= z < 1, a > 0,
    real s (used with s <= 0)."""
    if z.is_error or s.is_error or a.is_error:
        return DOMAIN_ERROR
    if z.lo < 0 or z.hi >= 1 or a.lo <= 0:
        return DOMAIN_ERROR
    zhi = Ball(z.hi)
    rho_target = ((zhi + 1) / 2).hi
    tol = mp.mpf(2) ** (-mp.prec - 8)
    acc = Ball(0)
    m = 0
    power = Ball(1)
    while True:
        term = power * pow_ball(a + m, -s)
        acc = acc + term
        grow = pow_ball(1 + Ball(1) / (a + m), abs(s).upper_ball())
        ratio = zhi * grow
        if m >= 2 and ratio.hi < rho_target:
            tail = abs(term) * ratio / (1 - ratio)
            if tail.hi < tol * (abs(acc).hi + 1):
                return acc + Ball.midrad(0, tail.hi)
        power = power * z
        m += 1
        if m > 20000:
            return DOMAIN_ERROR


def _hyp2f1_series(a: Ball, b: Ball, c: Ball, z: Ball) -> Ball:
    """Direct Gauss series with a certified geometric tail; needs |z| < 1."""
    zmag = abs(z).hi
    if zmag >= 1:
        return DOMAIN_ERROR
    # term ratio f(m) z with f(m) = (a+m)(b+m)/((c+m)(1+m)) = 1 + (Am+B)/((c+m)(1+m));
    # the correction envelope (|A|m+|B|)/((c+m)(1+m)) is decreasing once m^2 >= c.
    A = a + b - c - 1
    B = a * b - c
    tol = mp.mpf(2) ** (-mp.prec - 8)
    acc = Ball(0)
    term = Ball(1)
    n = 0
    while True:
        acc = acc + term
        m0 = n + 1
        if n >= 6 and (c + m0).is_positive and mp.mpf(m0) ** 2 >= c.hi:
            g = (abs(A) * m0 + abs(B)) / ((c + m0) * Ball(1 + m0))
            ratio = Ball(zmag) * (1 + g)
            if ratio.hi < 1:
                nxt = abs(term * (a + n) * (b + n) / ((c + n) * Ball(n + 1)) * z)
                tail = nxt / (1 - ratio)
                if tail.hi < tol * (abs(acc).hi + 1):
                    return acc + Ball.midrad(0, tail.hi)
        step = (a + n) * (b + n) / ((c + n) * Ball(n + 1)) * z
        if step.is_error:
            return DOMAIN_ERROR
        term = term * step
        n += 1
        if n > 20000:
            return DOMAIN_ERROR


def hyp2f1(a: Ball, b: Ball, c: Ball, z: Ball) -> Ball:
    """Gauss hypergeometric for real parameter balls and -1 <= z < 1.

    Nonpositive z (including exactly -1) goes through the Pfaff map
    z -> z/(z-1) into [0, 1/2], where the series converges geometrically;
    z = +1 is a domain error, as is c touching a nonpositive integer."""
    for v in (a, b, c, z):
        if v.is_error:
            return DOMAIN_ERROR
    if z.hi >= 1 or z.lo < -1:
        return DOMAIN_ERROR
    if c.hi <= 0 or (c.wid < 1 and c.contains(mp.ceil(c.lo)) and mp.ceil(c.lo) <= 0):
        return DOMAIN_ERROR
    if z.lo >= 0:
        return _hyp2f1_series(a, b, c, z)
    if z.hi <= 0:
        w = z / (z - 1)
        pref = pow_ball(1 - z, -a)
        return pref * _hyp2f1_series(a, c - b, c, w)
    return hull([hyp2f1(a, b, c, Ball.interval(z.lo, 0)),
                 hyp2f1(a, b, c, Ball.interval(0, z.hi))])


# ----------------------------------------------------------------------
# complex Hurwitz zeta (value only)
# ----------------------------------------------------------------------

def hurwitz_zeta_complex(s: Ball, a: ComplexBall) -> ComplexBall:
    """zeta(s, a) for a real s-ball (1 excluded) and complex a with Re a > 0."""
    err = ComplexBall(DOMAIN_ERROR, DOMAIN_ERROR)
    if s.is_error or a.is_error or not a.re.is_positive:
        return err
    if s.contains(1):
        return err
    N, J = _em_parameters(s, a.re.lo, mp.prec, 0)
    neg_s = -s
    acc = ComplexBall(Ball(0), Ball(0))
    for k in range(N):
        acc = acc + cpow_real(a + ComplexBall(Ball(k)), neg_s)
    aN = a + ComplexBall(Ball(N))
    acc = acc + cpow_real(aN, Ball(1) - s) / ComplexBall(s - 1)
    acc = acc + cpow_real(aN, neg_s) * ComplexBall(Ball("0.5"))
    poch = s
    pw = cpow_real(aN, -(s + 1))
    inv2 = ComplexBall(Ball(1)) / (aN * aN)
    for j in range(1, J + 1):
        cj = bernoulli_ball(2 * j) / Ball(math.factorial(2 * j))
        w = cj * poch
        acc = acc + ComplexBall(pw.re * w, pw.im * w)
        if j < J:
            poch = poch * (s + (2 * j - 1)) * (s + (2 * j))
            pw = pw * inv2
    R = _em_remainder_bound(s.mag, s.lo, a.re.lo, N, J)
    if R.is_error:
        return err
    pad = Ball.midrad(0, R.hi)
    return ComplexBall(acc.re + pad, acc.im + pad)
