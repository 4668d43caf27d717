"""Ranking TRIFNs by signed L_p distance to the origin."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .core import ORIGIN, Trifn, TrifnError
from .indices import DEFAULT_LAMBDA, va_index
from .metric import check_p, trifn_distance

DEFAULT_TIE_EPSILON = 1e-9


def delta(n: Trifn, lam: float = DEFAULT_LAMBDA) -> int:
    """Sign of the value index, with ``V = 0`` counted as positive."""
    return 1 if va_index(n, lam).value >= 0.0 else -1


def rho(n: Trifn, p: float = 2.0, lam: float = DEFAULT_LAMBDA) -> float:
    """Ranking score: the distance to :data:`ORIGIN`, signed by :func:`delta`."""
    return delta(n, lam) * trifn_distance(p, n, ORIGIN, lam)


@dataclass(frozen=True)
class RankOutcome:
    """Result of :func:`rank`, best first.

    ``entries`` holds ``(identifier, rho)`` pairs sorted by descending rho;
    ``tie_groups`` partitions the identifiers into runs of consecutive entries
    whose scores differ by at most ``tie_epsilon``.
    """

    entries: tuple[tuple[Hashable, float], ...]
    tie_groups: tuple[tuple[Hashable, ...], ...]
    p: float
    lam: float
    tie_epsilon: float
    rho: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rho", dict(self.entries))

    @property
    def order(self) -> list:
        return [ident for ident, _ in self.entries]

    def render(self, ascending: bool = False) -> str:
        """Chain such as ``"c ≻ a ≻ b"``, or ``"b ≺ a ≺ c"`` when ascending; ties use ``∼``."""
        groups = [list(g) for g in self.tie_groups]
        sep = " ≻ "
        if ascending:
            groups = [g[::-1] for g in reversed(groups)]
            sep = " ≺ "
        return sep.join(" ∼ ".join(str(i) for i in g) for g in groups)


def rank(
    items: Iterable[tuple[Hashable, Trifn]] | Sequence[tuple[Hashable, Trifn]],
    p: float = 2.0,
    lam: float = DEFAULT_LAMBDA,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
) -> RankOutcome:
    """Order identified TRIFNs by :func:`rho`, largest first.

    Equal scores keep their input order. Scores within ``tie_epsilon`` of their
    neighbour are reported as equivalent.
    """
    items = list(items)
    if not items:
        raise TrifnError("cannot rank an empty collection")
    if not tie_epsilon >= 0.0:
        raise TrifnError(f"tie_epsilon must be >= 0, got {tie_epsilon}", "tie_epsilon")
    p = check_p(p)
    scored = [(ident, rho(n, p, lam)) for ident, n in items]
    entries = sorted(scored, key=lambda e: -e[1])

    groups = [[entries[0][0]]]
    for (_, prev), (ident, score) in zip(entries, entries[1:]):
        if prev - score <= tie_epsilon:
            groups[-1].append(ident)
        else:
            groups.append([ident])
    return RankOutcome(
        entries=tuple(entries),
        tie_groups=tuple(tuple(g) for g in groups),
        p=p,
        lam=lam,
        tie_epsilon=tie_epsilon,
    )
