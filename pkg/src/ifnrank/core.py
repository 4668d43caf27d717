"""Trapezoidal intuitionistic fuzzy numbers.

A trapezoidal intuitionistic fuzzy number (TRIFN) ``<(a1, a2, a3, a4); w, u>``
has a membership function rising linearly from 0 at ``a1`` to the plateau
height ``w`` on ``[a2, a3]`` and falling back to 0 at ``a4``; its
non-membership function mirrors it, dropping from 1 to the floor ``u`` on the
same plateau. Triangular numbers are the special case ``a2 == a3``.

All values are immutable and every function in this module is pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class TrifnError(ValueError):
    """Invalid TRIFN data or an operation outside its domain.

    ``field`` names the offending component (``"a2"``, ``"w"``, ``"w+u"``,
    ``"alpha"``, ...) when one can be singled out.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


@dataclass(frozen=True)
class CutInterval:
    """Closed interval ``[lower, upper]`` produced by an alpha- or beta-cut."""

    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise TrifnError(f"interval lower {self.lower} > upper {self.upper}")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def __contains__(self, other: "CutInterval") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper


@dataclass(frozen=True)
class Trifn:
    """A trapezoidal intuitionistic fuzzy number ``<(a1, a2, a3, a4); w, u>``.

    Construction validates the ordering ``a1 <= a2 <= a3 <= a4`` and the
    degree constraints ``0 <= w, u <= 1`` and ``w + u <= 1``. Comparisons are
    exact; no tolerance is applied.
    """

    a1: float
    a2: float
    a3: float
    a4: float
    w: float
    u: float

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "w", "u"):
            value = float(getattr(self, name))
            if value != value or value in (float("inf"), float("-inf")):
                raise TrifnError(f"{name} must be finite, got {value}", name)
            object.__setattr__(self, name, value)
        abscissae = self.abscissae
        for i in range(3):
            if not abscissae[i] <= abscissae[i + 1]:
                raise TrifnError(
                    f"abscissae must be non-decreasing: a{i + 1}={abscissae[i]} "
                    f"> a{i + 2}={abscissae[i + 1]}",
                    f"a{i + 2}",
                )
        if not 0.0 <= self.w <= 1.0:
            raise TrifnError(f"w must lie in [0, 1], got {self.w}", "w")
        if not 0.0 <= self.u <= 1.0:
            raise TrifnError(f"u must lie in [0, 1], got {self.u}", "u")
        if not self.w + self.u <= 1.0:
            raise TrifnError(f"w+u must not exceed 1, got {self.w + self.u}", "w+u")

    @classmethod
    def triangular(cls, t1: float, t2: float, t3: float, w: float, u: float) -> "Trifn":
        """Triangular number ``<(t1, t2, t3); w, u>`` with its peak at ``t2``."""
        return cls(t1, t2, t2, t3, w, u)

    @classmethod
    def crisp(cls, value: float, w: float = 1.0, u: float = 0.0) -> "Trifn":
        return cls(value, value, value, value, w, u)

    @property
    def abscissae(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def is_triangular(self) -> bool:
        return self.a2 == self.a3

    def as_tuple(self) -> tuple[float, ...]:
        return (*self.abscissae, self.w, self.u)

    def __str__(self):
        a = ", ".join(f"{x:g}" for x in self.abscissae)
        return f"<({a}); {self.w:g}, {self.u:g}>"

    def __add__(self, other):
        if not isinstance(other, Trifn):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Trifn):
            return NotImplemented
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, Trifn):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __neg__(self):
        return scale(-1.0, self)


#: The origin ``<(0, 0, 0, 0); 0, 1>`` used as the ranking reference point.
ORIGIN = Trifn(0.0, 0.0, 0.0, 0.0, 0.0, 1.0)


def validate(candidate: Iterable[float]) -> Trifn:
    """Build a :class:`Trifn` from a raw ``(a1, a2, a3, a4, w, u)`` six-tuple.

    Raises :class:`TrifnError` naming the first offending field.
    """
    values = tuple(candidate)
    if len(values) != 6:
        raise TrifnError(f"expected 6 values (a1, a2, a3, a4, w, u), got {len(values)}")
    try:
        values = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise TrifnError(f"non-numeric component: {exc}") from None
    return Trifn(*values)


def membership_at(n: Trifn, x: float) -> float:
    a1, a2, a3, a4 = n.abscissae
    if x < a1 or x > a4:
        return 0.0
    if x < a2:
        return (x - a1) / (a2 - a1) * n.w
    if x <= a3:
        return n.w
    return (a4 - x) / (a4 - a3) * n.w


def nonmembership_at(n: Trifn, x: float) -> float:
    a1, a2, a3, a4 = n.abscissae
    u = n.u
    if x < a1 or x > a4:
        return 1.0
    if x < a2:
        return ((a2 - x) + u * (x - a1)) / (a2 - a1)
    if x <= a3:
        return u
    return ((x - a3) + u * (a4 - x)) / (a4 - a3)


def indeterminacy_at(n: Trifn, x: float) -> float:
    """Hesitancy degree ``1 - mu(x) - nu(x)``."""
    # w + u <= 1 makes this non-negative; clamp rounding residue on the slopes
    return max(0.0, 1.0 - membership_at(n, x) - nonmembership_at(n, x))


def alpha_cut(n: Trifn, alpha: float) -> CutInterval:
    """The set ``{x : mu(x) >= alpha}`` for ``0 <= alpha <= w``."""
    if not 0.0 <= alpha <= n.w:
        raise TrifnError(f"alpha must lie in [0, w={n.w}], got {alpha}", "alpha")
    a1, a2, a3, a4 = n.abscissae
    if n.w == 0.0:
        return CutInterval(a1, a4)
    # a1 + alpha (a2 - a1) / w, with alpha / w formed first so the ends are exact
    t = min(alpha / n.w, 1.0)
    lower = a1 + t * (a2 - a1)
    upper = a4 - t * (a4 - a3)
    # keep the interval well-formed when a2 == a3 and rounding crosses the ends
    return CutInterval(min(lower, upper), max(lower, upper))


def beta_cut(n: Trifn, beta: float) -> CutInterval:
    """The set ``{x : nu(x) <= beta}`` for ``u <= beta <= 1``."""
    if not n.u <= beta <= 1.0:
        raise TrifnError(f"beta must lie in [u={n.u}, 1], got {beta}", "beta")
    a1, a2, a3, a4 = n.abscissae
    if n.u == 1.0:
        return CutInterval(a1, a4)
    # ((1 - beta) a2 + (beta - u) a1) / (1 - u) rewritten as a2 + t (a1 - a2)
    t = min((beta - n.u) / (1.0 - n.u), 1.0)
    lower = a2 + t * (a1 - a2)
    upper = a3 + t * (a4 - a3)
    return CutInterval(min(lower, upper), max(lower, upper))


def _degrees(x: Trifn, y: Trifn) -> tuple[float, float]:
    return min(x.w, y.w), max(x.u, y.u)


def add(x: Trifn, y: Trifn) -> Trifn:
    w, u = _degrees(x, y)
    return Trifn(x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3, x.a4 + y.a4, w, u)


def sub(x: Trifn, y: Trifn) -> Trifn:
    """Interval-style difference ``(a1-b4, a2-b3, a3-b2, a4-b1)``.

    ``sub(x, x)`` is a symmetric number around zero, not the crisp zero.
    """
    w, u = _degrees(x, y)
    return Trifn(x.a1 - y.a4, x.a2 - y.a3, x.a3 - y.a2, x.a4 - y.a1, w, u)


def _sign(n: Trifn) -> int:
    if n.a1 >= 0.0:
        return 1
    if n.a4 <= 0.0:
        return -1
    return 0


def mul(x: Trifn, y: Trifn) -> Trifn:
    """Product of two sign-definite TRIFNs.

    Each operand must have all four abscissae on one side of zero (zeros
    allowed); mixed-sign supports raise :class:`TrifnError`.
    """
    sx, sy = _sign(x), _sign(y)
    if sx == 0 or sy == 0:
        raise TrifnError("mul requires sign-definite operands", "a1" if sx == 0 else "b1")
    w, u = _degrees(x, y)
    a, b = x.abscissae, y.abscissae
    if sx > 0 and sy > 0:
        prods = (a[0] * b[0], a[1] * b[1], a[2] * b[2], a[3] * b[3])
    elif sx < 0 and sy > 0:
        prods = (a[0] * b[3], a[1] * b[2], a[2] * b[1], a[3] * b[0])
    elif sx > 0 and sy < 0:
        prods = (b[0] * a[3], b[1] * a[2], b[2] * a[1], b[3] * a[0])
    else:
        prods = (a[3] * b[3], a[2] * b[2], a[1] * b[1], a[0] * b[0])
    return Trifn(*prods, w, u)


def scale(factor: float, x: Trifn) -> Trifn:
    a1, a2, a3, a4 = (factor * a for a in x.abscissae)
    if factor < 0:
        a1, a2, a3, a4 = a4, a3, a2, a1
    return Trifn(a1, a2, a3, a4, x.w, x.u)


def reciprocal(x: Trifn) -> Trifn:
    """``(1/a4, 1/a3, 1/a2, 1/a1)``; zero must lie outside ``[a1, a4]``."""
    if x.a1 <= 0.0 <= x.a4:
        raise TrifnError("reciprocal undefined: support contains zero", "a1")
    return Trifn(1.0 / x.a4, 1.0 / x.a3, 1.0 / x.a2, 1.0 / x.a1, x.w, x.u)
