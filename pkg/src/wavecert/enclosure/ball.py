"""Midpoint-radius real and complex enclosures on top of directed interval arithmetic.

A :class:`Ball` represents a set of reals; every operation returns a ball
containing the image of the input sets (containment invariant).  Domain errors
(division by a set containing zero, log of a set reaching zero, ...) are values
rather than exceptions so that branch-and-bound drivers can treat "could not
evaluate" as "must bisect".
"""

from __future__ import annotations

from typing import Iterable, Sequence

from mpmath import iv, mp

__all__ = [
    "Ball",
    "ComplexBall",
    "DOMAIN_ERROR",
    "hull",
    "intersect",
    "sqrt",
    "exp",
    "log",
    "sin",
    "cos",
    "atan",
    "pi_ball",
    "two_pi_ball",
    "log_two_pi_ball",
]

_ivmpf = type(iv.mpf(0))


def _to_iv(x):
    """Coerce ints/floats/strings/mpf/Ball to an interval scalar."""
    if isinstance(x, _ivmpf):
        return x
    if isinstance(x, Ball):
        if x._v is None:
            return None
        return x._v
    return iv.mpf(x)


class Ball:
    """A rigid enclosure of a real number (or of a set of reals).

    Internally stored as a directed-rounded interval; ``mid``/``rad`` are
    derived views satisfying [mid - rad, mid + rad] >= stored interval.
    """

    __slots__ = ("_v",)

    def __init__(self, value=None, *, _raw=None):
        if _raw is not None:
            self._v = _raw
            return
        if value is None:
            self._v = None
            return
        if isinstance(value, Ball):
            self._v = value._v
            return
        self._v = iv.mpf(value)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @staticmethod
    def point(x) -> "Ball":
        return Ball(x)

    @staticmethod
    def interval(lo, hi) -> "Ball":
        a = iv.mpf(lo)
        b = iv.mpf(hi)
        if a.a > b.b:
            raise ValueError(f"interval endpoints out of order: {lo} > {hi}")
        return Ball(_raw=iv.mpf([mp.make_mpf(a.a._mpi_[0]), mp.make_mpf(b.b._mpi_[1])]))

    @staticmethod
    def midrad(mid, rad) -> "Ball":
        m = iv.mpf(mid)
        r = iv.mpf(rad)
        return Ball(_raw=m + iv.mpf([-1, 1]) * r)

    @staticmethod
    def domain_error() -> "Ball":
        return DOMAIN_ERROR

    @staticmethod
    def whole_line() -> "Ball":
        return Ball(_raw=iv.mpf([mp.ninf, mp.inf]))

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def is_error(self) -> bool:
        return self._v is None

    @property
    def lo(self):
        """Certified lower endpoint as an mpf (rounded down)."""
        return mp.make_mpf(self._v._mpi_[0])

    @property
    def hi(self):
        """Certified upper endpoint as an mpf (rounded up)."""
        return mp.make_mpf(self._v._mpi_[1])

    @property
    def mid(self):
        lo, hi = self._v._mpi_
        return (mp.make_mpf(lo) + mp.make_mpf(hi)) / 2

    @property
    def rad(self):
        lo, hi = self._v._mpi_
        m = (mp.make_mpf(lo) + mp.make_mpf(hi)) / 2
        return max(abs(m - mp.make_mpf(lo)), abs(mp.make_mpf(hi) - m)) * (1 + mp.mpf(2) ** (-30))

    @property
    def wid(self):
        """Upper bound on the diameter."""
        lo, hi = self._v._mpi_
        return mp.make_mpf(hi) - mp.make_mpf(lo)

    @property
    def mag(self):
        """Upper bound on sup |x| over the ball."""
        return max(abs(self.lo), abs(self.hi))

    @property
    def mig(self):
        """Lower bound on inf |x| over the ball."""
        if self.contains_zero:
            return mp.mpf(0)
        return min(abs(self.lo), abs(self.hi))

    @property
    def contains_zero(self) -> bool:
        lo, hi = self._v._mpi_
        return mp.make_mpf(lo) <= 0 <= mp.make_mpf(hi)

    @property
    def is_positive(self) -> bool:
        return (not self.is_error) and self.lo > 0

    @property
    def is_negative(self) -> bool:
        return (not self.is_error) and self.hi < 0

    @property
    def is_nonnegative(self) -> bool:
        return (not self.is_error) and self.lo >= 0

    @property
    def is_finite(self) -> bool:
        if self.is_error:
            return False
        return mp.isfinite(self.lo) and mp.isfinite(self.hi)

    @property
    def is_point(self) -> bool:
        lo, hi = self._v._mpi_
        return lo == hi

    def contains(self, x) -> bool:
        if self.is_error:
            return False
        if isinstance(x, Ball):
            return self.lo <= x.lo and x.hi <= self.hi
        xm = mp.mpf(x)
        return self.lo <= xm <= self.hi

    def overlaps(self, other: "Ball") -> bool:
        if self.is_error or other.is_error:
            return False
        return not (self.hi < other.lo or other.hi < self.lo)

    def lower_ball(self) -> "Ball":
        return Ball(self.lo)

    def upper_ball(self) -> "Ball":
        return Ball(self.hi)

    def split(self, at=None) -> tuple["Ball", "Ball"]:
        m = mp.mpf(at) if at is not None else self.mid
        return Ball.interval(self.lo, m), Ball.interval(m, self.hi)

    # ------------------------------------------------------------------
    # certified comparisons (False means "could not certify")
    # ------------------------------------------------------------------
    def lt(self, other) -> bool:
        o = other if isinstance(other, Ball) else Ball(other)
        if self.is_error or o.is_error:
            return False
        return self.hi < o.lo

    def gt(self, other) -> bool:
        o = other if isinstance(other, Ball) else Ball(other)
        if self.is_error or o.is_error:
            return False
        return self.lo > o.hi

    def le(self, other) -> bool:
        o = other if isinstance(other, Ball) else Ball(other)
        if self.is_error or o.is_error:
            return False
        return self.hi <= o.lo

    def ge(self, other) -> bool:
        o = other if isinstance(other, Ball) else Ball(other)
        if self.is_error or o.is_error:
            return False
        return self.lo >= o.hi

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other):
        o = _to_iv(other)
        if self._v is None or o is None:
            return DOMAIN_ERROR
        return Ball(_raw=self._v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _to_iv(other)
        if self._v is None or o is None:
            return DOMAIN_ERROR
        return Ball(_raw=self._v - o)

    def __rsub__(self, other):
        o = _to_iv(other)
        if self._v is None or o is None:
            return DOMAIN_ERROR
        return Ball(_raw=o - self._v)

    def __mul__(self, other):
        o = _to_iv(other)
        if self._v is None or o is None:
            return DOMAIN_ERROR
        return Ball(_raw=self._v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, Ball) else Ball(other)
        if self._v is None or o._v is None or o.contains_zero:
            return DOMAIN_ERROR
        return Ball(_raw=self._v / o._v)

    def __rtruediv__(self, other):
        return Ball(other) / self

    def __neg__(self):
        if self._v is None:
            return DOMAIN_ERROR
        return Ball(_raw=-self._v)

    def __abs__(self):
        if self._v is None:
            return DOMAIN_ERROR
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Ball.interval(0, self.mag)

    def __pow__(self, n):
        if self._v is None:
            return DOMAIN_ERROR
        if isinstance(n, int):
            if n == 0:
                return Ball(1)
            if n < 0:
                return Ball(1) / (self ** (-n))
            if n % 2 == 0 and self.contains_zero:
                # even power of a zero-straddling set
                m = self.mag
                return Ball.interval(0, Ball(m).__pow__(n).hi)
            return Ball(_raw=self._v ** n)
        return pow_ball(self, n)

    def __repr__(self):
        if self.is_error:
            return "Ball(<domain error>)"
        return f"Ball([{mp.nstr(self.lo, 20)}, {mp.nstr(self.hi, 20)}])"

    # ------------------------------------------------------------------
    # hashing / pickling (needed for memo caches and worker processes)
    # ------------------------------------------------------------------
    def _key(self):
        if self._v is None:
            return ("err",)
        lo, hi = self._v._mpi_
        return (int(lo[0]), int(lo[1]), int(lo[2]), int(hi[0]), int(hi[1]), int(hi[2]))

    def __hash__(self):
        return hash(self._key())

    def __eq__(self, other):
        if not isinstance(other, Ball):
            return NotImplemented
        return self._key() == other._key()

    def __reduce__(self):
        if self._v is None:
            return (_unpickle_ball, (None,))
        lo, hi = self._v._mpi_
        return (_unpickle_ball, (((int(lo[0]), int(lo[1]), int(lo[2]), int(lo[3])),
                                  (int(hi[0]), int(hi[1]), int(hi[2]), int(hi[3]))),))


def _unpickle_ball(raw):
    if raw is None:
        return DOMAIN_ERROR
    from mpmath.libmp import from_man_exp

    (s0, m0, e0, _), (s1, m1, e1, _) = raw
    lo = mp.make_mpf(from_man_exp((-1) ** s0 * m0, e0))
    hi = mp.make_mpf(from_man_exp((-1) ** s1 * m1, e1))
    return Ball.interval(lo, hi)


DOMAIN_ERROR = Ball(_raw=None)
DOMAIN_ERROR._v = None


# ----------------------------------------------------------------------
# elementary functions
# ----------------------------------------------------------------------

def sqrt(x: Ball) -> Ball:
    x = x if isinstance(x, Ball) else Ball(x)
    if x._v is None or x.lo < 0:
        return DOMAIN_ERROR
    return Ball(_raw=iv.sqrt(x._v))


def exp(x: Ball) -> Ball:
    x = x if isinstance(x, Ball) else Ball(x)
    if x._v is None:
        return DOMAIN_ERROR
    return Ball(_raw=iv.exp(x._v))


def log(x: Ball, *, allow_zero: bool = False) -> Ball:
    """Natural log; requires a strictly positive set unless ``allow_zero``
    (in which case a lower endpoint of 0 yields an unbounded-below enclosure)."""
    x = x if isinstance(x, Ball) else Ball(x)
    if x._v is None:
        return DOMAIN_ERROR
    if x.lo < 0 or (x.lo == 0 and not allow_zero):
        return DOMAIN_ERROR
    if x.lo == 0:
        return Ball(_raw=iv.mpf([mp.ninf, iv.log(Ball(x.hi)._v).b._mpi_[1]]))
    return Ball(_raw=iv.log(x._v))


def sin(x: Ball) -> Ball:
    x = x if isinstance(x, Ball) else Ball(x)
    if x._v is None:
        return DOMAIN_ERROR
    return Ball(_raw=iv.sin(x._v))


def cos(x: Ball) -> Ball:
    x = x if isinstance(x, Ball) else Ball(x)
    if x._v is None:
        return DOMAIN_ERROR
    return Ball(_raw=iv.cos(x._v))


def atan(x: Ball) -> Ball:
    """Monotone endpoint evaluation with guard padding."""
    x = x if isinstance(x, Ball) else Ball(x)
    if x._v is None:
        return DOMAIN_ERROR
    pad = mp.mpf(2) ** (-mp.prec + 6)
    lo = mp.atan(x.lo)
    hi = mp.atan(x.hi)
    return Ball.interval(lo - pad, hi + pad)


def pow_ball(x: Ball, y) -> Ball:
    """x^y for a real exponent ball; requires x > 0 (or exact-integer y)."""
    y = y if isinstance(y, Ball) else Ball(y)
    if x._v is None or y._v is None:
        return DOMAIN_ERROR
    if y.is_point:
        ym = y.mid
        if mp.isint(ym):
            return x ** int(ym)
    if x.lo < 0:
        return DOMAIN_ERROR
    if x.lo == 0:
        # x^y on [0, hi]: monotone in x for fixed y sign; use sup piece and 0 limit
        if y.lo > 0:
            upper = pow_ball(x.upper_ball(), y)
            if upper.is_error:
                return DOMAIN_ERROR
            return Ball.interval(0, upper.hi)
        return DOMAIN_ERROR
    return exp(y * log(x))


def hull(balls: Iterable[Ball]) -> Ball:
    items = [b for b in balls]
    if not items or any(b.is_error for b in items):
        return DOMAIN_ERROR
    lo = min(b.lo for b in items)
    hi = max(b.hi for b in items)
    return Ball.interval(lo, hi)


def intersect(a: Ball, b: Ball) -> Ball:
    if a.is_error:
        return b
    if b.is_error:
        return a
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return DOMAIN_ERROR
    return Ball.interval(lo, hi)


def pi_ball() -> Ball:
    return Ball(_raw=+iv.pi)


def two_pi_ball() -> Ball:
    return Ball(_raw=2 * iv.pi)


def log_two_pi_ball() -> Ball:
    return log(two_pi_ball())


# ----------------------------------------------------------------------
# complex rectangles
# ----------------------------------------------------------------------

class ComplexBall:
    """Rectangular complex enclosure with Ball real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = re if isinstance(re, Ball) else Ball(re)
        self.im = im if isinstance(im, Ball) else Ball(im)

    @property
    def is_error(self) -> bool:
        return self.re.is_error or self.im.is_error

    def __add__(self, other):
        o = other if isinstance(other, ComplexBall) else ComplexBall(other)
        return ComplexBall(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, ComplexBall) else ComplexBall(other)
        return ComplexBall(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = other if isinstance(other, ComplexBall) else ComplexBall(other)
        return o - self

    def __mul__(self, other):
        o = other if isinstance(other, ComplexBall) else ComplexBall(other)
        return ComplexBall(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, ComplexBall) else ComplexBall(other)
        den = o.re * o.re + o.im * o.im
        if den.is_error or den.contains_zero:
            return ComplexBall(DOMAIN_ERROR, DOMAIN_ERROR)
        return ComplexBall((self.re * o.re + self.im * o.im) / den,
                           (self.im * o.re - self.re * o.im) / den)

    def __neg__(self):
        return ComplexBall(-self.re, -self.im)

    def conjugate(self):
        return ComplexBall(self.re, -self.im)

    def abs2(self) -> Ball:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"ComplexBall({self.re!r}, {self.im!r})"


def cexp(z: ComplexBall) -> ComplexBall:
    r = exp(z.re)
    return ComplexBall(r * cos(z.im), r * sin(z.im))


def clog(z: ComplexBall) -> ComplexBall:
    """Principal log on the right half-plane (re > 0 required)."""
    if not z.re.is_positive:
        return ComplexBall(DOMAIN_ERROR, DOMAIN_ERROR)
    mod2 = z.abs2()
    return ComplexBall(log(mod2) * Ball("0.5"), atan(z.im / z.re))


def cpow_real(z: ComplexBall, y: Ball) -> ComplexBall:
    """z^y for real ball exponent, z in the right half-plane."""
    return cexp(ComplexBall(y, Ball(0)) * clog(z))
