"""Value and ambiguity of a TRIFN and the lambda-weighted indices.

The value of a membership function is the weighted mean of its cut midpoints,
the ambiguity the weighted mean of its cut widths. With the weights
``f(alpha) = 2 alpha / w`` on ``[0, w]`` and ``g(beta) = 2 (1 - beta) / (1 - u)``
on ``[u, 1]`` both integrals have closed forms that share the location term
``(a1 + a4 + 2 (a2 + a3)) / 6`` and the spread term
``((a4 - a1) + 2 (a3 - a2)) / 3``; the membership side is scaled by ``w`` and
the non-membership side by ``1 - u``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Trifn, TrifnError

DEFAULT_LAMBDA = 0.5


@dataclass(frozen=True)
class VaComponents:
    v_mu: float
    v_nu: float
    a_mu: float
    a_nu: float


@dataclass(frozen=True)
class VaIndex:
    """Value index ``V(n, lam)`` and ambiguity index ``A(n, lam)``."""

    value: float
    ambiguity: float
    lam: float = DEFAULT_LAMBDA


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise TrifnError(f"lambda must lie in [0, 1], got {lam}", "lambda")
    return lam


def components(n: Trifn) -> VaComponents:
    location = (n.a1 + n.a4 + 2.0 * (n.a2 + n.a3)) / 6.0
    spread = ((n.a4 - n.a1) - 2.0 * (n.a2 - n.a3)) / 3.0
    upper = 1.0 - n.u
    return VaComponents(
        v_mu=n.w * location,
        v_nu=upper * location,
        a_mu=n.w * spread,
        a_nu=upper * spread,
    )


def va_index(n: Trifn, lam: float = DEFAULT_LAMBDA) -> VaIndex:
    """Blend the membership and non-membership components.

    ``lam`` in ``[0, 1]`` expresses the decision maker's attitude to
    uncertainty: values below 1/2 are pessimistic, above 1/2 optimistic.
    ``lam = 0`` returns ``(v_mu, a_nu)`` and ``lam = 1`` returns ``(v_nu, a_mu)``.
    """
    lam = check_lambda(lam)
    c = components(n)
    value = c.v_mu + lam * (c.v_nu - c.v_mu)
    ambiguity = c.a_nu - lam * (c.a_nu - c.a_mu)
    return VaIndex(value, ambiguity, lam)


def value_index(n: Trifn, lam: float = DEFAULT_LAMBDA) -> float:
    return va_index(n, lam).value


def ambiguity_index(n: Trifn, lam: float = DEFAULT_LAMBDA) -> float:
    return va_index(n, lam).ambiguity
