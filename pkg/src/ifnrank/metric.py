"""L_p distance between interval numbers and between TRIFNs.

An interval ``[a, b]`` is identified with the line ``f(x) = (a - b) x + b`` on
``[0, 1]``; the distance of two intervals is the L_p norm of the difference
of their lines. The difference ``h(x) = (e1 - e0) x + e0`` is linear, so
``sgn(h) |h|^(p+1) / ((p+1) (e1 - e0))`` is an antiderivative of ``|h|^p`` even
across a sign change of ``h``, which gives a closed form for every ``p > 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Trifn, TrifnError
from .indices import DEFAULT_LAMBDA, va_index


@dataclass(frozen=True)
class EndpointPair:
    """Interval ``[a, b]`` as the line through ``(1, a)`` and ``(0, b)``."""

    a: float
    b: float

    def line(self, x: float) -> float:
        return (self.a - self.b) * x + self.b


def check_p(p: float) -> float:
    p = float(p)
    if not p > 1.0 or math.isinf(p):
        raise TrifnError(f"p must be a finite real > 1, got {p}", "p")
    return p


def lp_line_norm(p: float, e0: float, e1: float) -> float:
    """``(int_0^1 |(e1 - e0) x + e0|^p dx)^(1/p)`` in closed form.

    Evaluated in a scaled form so that nearly equal ``e0, e1`` do not lose
    precision to cancellation.
    """
    p = check_p(p)
    big, small = abs(e0), abs(e1)
    if small > big:
        big, small = small, big
    if big == 0.0:
        return 0.0
    t = small / big
    if (e0 < 0.0 < e1) or (e1 < 0.0 < e0):
        # root inside (0, 1): the two pieces add
        mean = (1.0 + t ** (p + 1.0)) / ((p + 1.0) * (1.0 + t))
    elif t == 0.0:
        mean = 1.0 / (p + 1.0)
    elif t == 1.0:
        mean = 1.0
    else:
        # (1 - t^(p+1)) / ((p+1)(1 - t)) without cancellation near t = 1
        log_t = math.log(t) if t < 0.5 else math.log1p(-(big - small) / big)
        mean = math.expm1((p + 1.0) * log_t) / (math.expm1(log_t) * (p + 1.0))
    return big * mean ** (1.0 / p)


def interval_distance(p: float, left: EndpointPair, right: EndpointPair) -> float:
    """L_p distance between the intervals ``[left.a, left.b]`` and ``[right.a, right.b]``."""
    return lp_line_norm(p, left.b - right.b, left.a - right.a)


def trifn_distance(p: float, x: Trifn, y: Trifn, lam: float = DEFAULT_LAMBDA) -> float:
    """Distance of two TRIFNs through their (ambiguity, value) intervals.

    The intervals are ``[A, V]`` when ``V(x) >= 0`` and ``[V, A]`` otherwise.
    Swapping both intervals reflects the integrand ``x -> 1 - x``, so the
    dispatch never changes the result and the distance is symmetric.
    """
    ix, iy = va_index(x, lam), va_index(y, lam)
    if ix.value >= 0.0:
        left = EndpointPair(ix.ambiguity, ix.value)
        right = EndpointPair(iy.ambiguity, iy.value)
    else:
        left = EndpointPair(ix.value, ix.ambiguity)
        right = EndpointPair(iy.value, iy.ambiguity)
    return interval_distance(p, left, right)
