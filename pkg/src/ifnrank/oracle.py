"""Numeric-integration cross-checks for the closed forms.

Values and ambiguities are integrated directly from the alpha- and beta-cut
endpoints; L_p distances by adaptive Simpson quadrature of ``|h(x)|^p``. None
of this goes through :mod:`ifnrank.indices` or :mod:`ifnrank.metric`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .core import Trifn, alpha_cut, beta_cut

Side = Literal["membership", "nonmembership"]


class QuadratureError(ArithmeticError):
    """Quadrature did not reach its tolerance within the allowed refinement."""


@dataclass(frozen=True)
class QuadratureSpec:
    """How to integrate.

    ``composite-simpson`` doubles the panel count until two successive
    estimates agree to ``abs_tol`` (at most ``max_depth`` doublings);
    ``adaptive-bisection`` bisects intervals whose Simpson error estimate
    exceeds their share of ``abs_tol``, down to ``max_depth`` levels.
    """

    rule: Literal["composite-simpson", "adaptive-bisection"] = "adaptive-bisection"
    abs_tol: float = 1e-12
    max_depth: int = 40

    def __post_init__(self):
        if self.rule not in ("composite-simpson", "adaptive-bisection"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


VALUE_SPEC = QuadratureSpec("composite-simpson", abs_tol=1e-10, max_depth=12)


def composite_simpson(f: Callable, a: float, b: float, panels: int) -> float:
    """Composite Simpson rule with ``panels`` (rounded up to even) subintervals."""
    panels += panels % 2
    x = np.linspace(a, b, panels + 1)
    y = np.array([f(t) for t in x], dtype=float)
    h = (b - a) / panels
    return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def _simpson_doubling(f, a, b, spec):
    panels = 2
    prev = composite_simpson(f, a, b, panels)
    for _ in range(spec.max_depth):
        panels *= 2
        cur = composite_simpson(f, a, b, panels)
        if abs(cur - prev) <= spec.abs_tol:
            return cur
        prev = cur
    raise QuadratureError(f"composite Simpson did not reach {spec.abs_tol} after {panels} panels")


def _adaptive_simpson(f, a, b, spec):
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole, spec.abs_tol, 0)]
    total = 0.0
    while stack:
        lo, hi, flo, fmid, fhi, est, tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        fl, fr = f(0.5 * (lo + mid)), f(0.5 * (mid + hi))
        left = (mid - lo) / 6.0 * (flo + 4.0 * fl + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * fr + fhi)
        err = left + right - est
        if abs(err) <= 15.0 * tol:
            total += left + right + err / 15.0
        elif depth >= spec.max_depth:
            raise QuadratureError(
                f"adaptive Simpson exceeded depth {spec.max_depth} on [{lo}, {hi}]"
            )
        else:
            stack.append((lo, mid, flo, fl, fmid, left, 0.5 * tol, depth + 1))
            stack.append((mid, hi, fmid, fr, fhi, right, 0.5 * tol, depth + 1))
    return total


def integrate(f: Callable, a: float, b: float, spec: QuadratureSpec) -> float:
    if a == b:
        return 0.0
    if spec.rule == "composite-simpson":
        return _simpson_doubling(f, a, b, spec)
    return _adaptive_simpson(f, a, b, spec)


def _cut_integral(n: Trifn, side: Side, measure: Callable, spec: QuadratureSpec) -> float:
    if side == "membership":
        if n.w == 0.0:
            return 0.0
        return integrate(lambda a: measure(alpha_cut(n, a)) * 2.0 * a / n.w, 0.0, n.w, spec)
    if side == "nonmembership":
        if n.u == 1.0:
            return 0.0
        span = 1.0 - n.u
        return integrate(
            lambda b: measure(beta_cut(n, min(max(b, n.u), 1.0))) * 2.0 * (1.0 - b) / span,
            n.u,
            1.0,
            spec,
        )
    raise ValueError(f"side must be 'membership' or 'nonmembership', got {side!r}")


def value_by_quadrature(n: Trifn, side: Side, spec: QuadratureSpec = VALUE_SPEC) -> float:
    """Weighted integral of cut midpoints over the chosen side."""
    return _cut_integral(n, side, lambda c: 0.5 * (c.lower + c.upper), spec)


def ambiguity_by_quadrature(n: Trifn, side: Side, spec: QuadratureSpec = VALUE_SPEC) -> float:
    """Weighted integral of cut widths over the chosen side."""
    return _cut_integral(n, side, lambda c: c.upper - c.lower, spec)


def lp_by_quadrature(p: float, e0: float, e1: float, spec: QuadratureSpec | None = None) -> float:
    """``(int_0^1 |(e1 - e0) x + e0|^p dx)^(1/p)`` by numeric quadrature.

    The integrand is divided by ``max(|e0|, |e1|)^p`` so ``abs_tol`` bounds the
    error relative to the result, and the interval is split at the root of the
    line when it falls inside ``(0, 1)``.
    """
    if not p > 1.0:
        raise ValueError(f"p must exceed 1, got {p}")
    spec = spec or QuadratureSpec()
    scale = max(abs(e0), abs(e1))
    if scale == 0.0:
        return 0.0
    s0, s1 = e0 / scale, e1 / scale
    slope = s1 - s0

    def integrand(x):
        return abs(slope * x + s0) ** p

    breaks = [0.0, 1.0]
    if s0 * s1 < 0.0:
        breaks.insert(1, -s0 / slope)
    total = sum(integrate(integrand, lo, hi, spec) for lo, hi in zip(breaks, breaks[1:]))
    return scale * total ** (1.0 / p)
