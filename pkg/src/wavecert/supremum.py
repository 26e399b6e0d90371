"""Rigorous extremum enclosure by adaptive bisection.

Encloses sup/inf of a ball-valued function over an interval, or certifies a
threshold bound, by best-first bisection with pruning against the running
lower bound.  Optional refinements: a degree-k Taylor expansion on a leaf
(sup of the polynomial via root isolation of its derivative, plus the
remainder), and a derivative-sign monotonicity shortcut.  A leaf whose
objective returns a domain error is always split further; if it survives to
max_depth the run reports failure rather than an unsound bound.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from mpmath import mp

from wavecert.enclosure import Ball, DOMAIN_ERROR, hull

__all__ = ["BoundTask", "BoundResult", "bound_extremum", "prove_positive", "prove_negative"]

Objective = Callable[[Ball], Ball]
# expansion(X) -> (coeffs at the midpoint of X, remainder ball R) with
# f(x) in sum coeffs[i] (x-x0)^i + R for all x in X, or None if unavailable.
Expansion = Callable[[Ball], Optional[tuple[list[Ball], Ball]]]


@dataclass(frozen=True)
class BoundTask:
    objective: Objective
    interval: tuple
    mode: str = "enclose_max"  # enclose_max | enclose_min | certify_below | certify_above
    threshold: Optional[Ball] = None
    tol: float = 1e-3
    max_depth: int = 30
    bisection: str = "midpoint"  # midpoint | geometric
    degree: int = 0
    derivative: Optional[Objective] = None
    expansion: Optional[Expansion] = None
    max_leaves: int = 200_000


@dataclass
class BoundResult:
    enclosure: Ball
    certified: Optional[bool] = None
    leaves_examined: int = 0
    depth_reached: int = 0
    failure_leaves: int = 0
    failure_intervals: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if self.certified is not None:
            return self.certified
        return self.failure_leaves == 0 and not self.enclosure.is_error


def _split(lo, hi, geometric: bool):
    if geometric and lo > 0:
        mid = mp.sqrt(lo * hi)
    else:
        mid = (lo + hi) / 2
    if not (lo < mid < hi):
        mid = (lo + hi) / 2
    return (lo, mid), (mid, hi)


def _poly_derivative(coeffs: list[Ball]) -> list[Ball]:
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def _poly_eval(coeffs: list[Ball], t: Ball) -> Ball:
    acc = Ball(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _poly_sup(coeffs: list[Ball], t_lo, t_hi, depth: int = 12) -> Ball:
    """Upper bound of a ball-coefficient polynomial on [t_lo, t_hi]:
    endpoint values plus values on subintervals where the derivative may
    vanish (isolated by bisection)."""
    deriv = _poly_derivative(coeffs)
    cands = [_poly_eval(coeffs, Ball(t_lo)), _poly_eval(coeffs, Ball(t_hi))]
    stack = [(t_lo, t_hi, 0)]
    while stack:
        lo, hi, d = stack.pop()
        seg = Ball.interval(lo, hi)
        dv = _poly_eval(deriv, seg)
        if dv.is_error:
            cands.append(_poly_eval(coeffs, seg))
            continue
        if not dv.contains_zero:
            continue  # monotone here; endpoints cover it
        if d >= depth:
            cands.append(_poly_eval(coeffs, seg))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid, d + 1))
        stack.append((mid, hi, d + 1))
        cands.append(_poly_eval(coeffs, Ball(mid)))
    return hull(cands)


def _leaf_upper(task: BoundTask, lo, hi) -> Ball:
    """Enclosure of sup f on [lo, hi] using the best available method."""
    seg = Ball.interval(lo, hi)
    if task.derivative is not None:
        dv = task.derivative(seg)
        if not dv.is_error and not dv.contains_zero:
            end = Ball(hi) if dv.is_positive else Ball(lo)
            return task.objective(end)
    if task.degree >= 1 and task.expansion is not None:
        got = task.expansion(seg)
        if got is not None:
            coeffs, R = got
            if not R.is_error and all(not c.is_error for c in coeffs):
                x0 = seg.mid
                p_sup = _poly_sup(coeffs, mp.mpf(lo) - x0, mp.mpf(hi) - x0)
                direct = task.objective(seg)
                out = p_sup + R
                if not direct.is_error:
                    hi_bound = min(out.hi, direct.hi)
                    lo_bound = max(
                        out.lo, task.objective(Ball(seg.mid)).lo
                    )
                    if lo_bound <= hi_bound:
                        return Ball.interval(lo_bound, hi_bound)
                return out
    return task.objective(seg)


def _run_max(task: BoundTask) -> BoundResult:
    lo0 = mp.mpf(task.interval[0])
    hi0 = mp.mpf(task.interval[1])
    certify = task.mode == "certify_below"
    tau = task.threshold
    geometric = task.bisection == "geometric"
    tol = mp.mpf(task.tol)

    counter = itertools.count()
    best_lo = mp.mpf("-inf")
    val0 = _leaf_upper(task, lo0, hi0)
    heap = []

    def push(lo, hi, depth, val):
        nonlocal best_lo
        if not val.is_error:
            best_lo = max(best_lo, val.lo)
            key = -val.hi
        else:
            key = mp.mpf("-inf")  # explore unknown leaves first
        heapq.heappush(heap, (key, next(counter), lo, hi, depth, val))

    push(lo0, hi0, 0, val0)
    done: list[Ball] = []
    failures: list[tuple] = []
    leaves = 0
    depth_reached = 0

    while heap:
        _, _, lo, hi, depth, val = heapq.heappop(heap)
        leaves += 1
        depth_reached = max(depth_reached, depth)
        if leaves > task.max_leaves:
            failures.append((lo, hi))
            continue
        if not val.is_error:
            if certify:
                if val.hi < tau.lo:
                    continue  # below threshold: discard
                if val.lo >= tau.hi:
                    return BoundResult(
                        val, certified=False, leaves_examined=leaves,
                        depth_reached=depth, failure_intervals=[(lo, hi)],
                    )
            else:
                if val.hi < best_lo:
                    continue  # cannot contain the max
                scale = max(1, abs(val.mid))
                if val.wid <= tol * scale:
                    done.append(val)
                    continue
        if depth >= task.max_depth:
            if val.is_error:
                failures.append((lo, hi))
            elif certify:
                failures.append((lo, hi))
            else:
                done.append(val)
            continue
        (a_lo, a_hi), (b_lo, b_hi) = _split(lo, hi, geometric)
        push(a_lo, a_hi, depth + 1, _leaf_upper(task, a_lo, a_hi))
        push(b_lo, b_hi, depth + 1, _leaf_upper(task, b_lo, b_hi))

    if certify:
        okflag = not failures
        return BoundResult(
            val0, certified=okflag, leaves_examined=leaves,
            depth_reached=depth_reached, failure_leaves=len(failures),
            failure_intervals=failures[:16],
        )
    if failures:
        return BoundResult(
            DOMAIN_ERROR, leaves_examined=leaves, depth_reached=depth_reached,
            failure_leaves=len(failures), failure_intervals=failures[:16],
        )
    if not done:
        return BoundResult(val0, leaves_examined=leaves, depth_reached=depth_reached)
    upper = max(v.hi for v in done)
    enclosure = Ball.interval(best_lo, upper)
    return BoundResult(enclosure, leaves_examined=leaves, depth_reached=depth_reached)


def _negated(task: BoundTask, mode: str, threshold: Optional[Ball]) -> BoundTask:
    obj = task.objective
    deriv = task.derivative
    expn = task.expansion

    def neg_obj(x: Ball) -> Ball:
        return -obj(x)

    neg_deriv = None
    if deriv is not None:
        def neg_deriv(x: Ball) -> Ball:  # noqa: F811
            return -deriv(x)

    neg_expn = None
    if expn is not None:
        def neg_expn(x: Ball):  # noqa: F811
            got = expn(x)
            if got is None:
                return None
            coeffs, R = got
            return [-c for c in coeffs], -R

    return BoundTask(
        objective=neg_obj, interval=task.interval, mode=mode,
        threshold=threshold, tol=task.tol, max_depth=task.max_depth,
        bisection=task.bisection, degree=task.degree, derivative=neg_deriv,
        expansion=neg_expn, max_leaves=task.max_leaves,
    )


def bound_extremum(task: BoundTask) -> BoundResult:
    if task.mode in ("enclose_max", "certify_below"):
        if task.mode == "certify_below" and task.threshold is None:
            raise ValueError("certify_below needs a threshold")
        return _run_max(task)
    if task.mode == "enclose_min":
        res = _run_max(_negated(task, "enclose_max", None))
        if not res.enclosure.is_error:
            res.enclosure = -res.enclosure
        return res
    if task.mode == "certify_above":
        if task.threshold is None:
            raise ValueError("certify_above needs a threshold")
        return _run_max(_negated(task, "certify_below", -task.threshold))
    raise ValueError(f"unknown mode {task.mode!r}")


def prove_positive(
    f: Objective, interval: tuple, max_depth: int = 30,
    derivative: Optional[Objective] = None, geometric: bool = False,
) -> BoundResult:
    """Certify f > 0 on the interval (sup of -f certified below 0)."""
    task = BoundTask(
        objective=f, interval=interval, mode="certify_above",
        threshold=Ball(0), max_depth=max_depth, derivative=derivative,
        bisection="geometric" if geometric else "midpoint",
    )
    return bound_extremum(task)


def prove_negative(
    f: Objective, interval: tuple, max_depth: int = 30,
    derivative: Optional[Objective] = None, geometric: bool = False,
) -> BoundResult:
    task = BoundTask(
        objective=f, interval=interval, mode="certify_below",
        threshold=Ball(0), max_depth=max_depth, derivative=derivative,
        bisection="geometric" if geometric else "midpoint",
    )
    return bound_extremum(task)
