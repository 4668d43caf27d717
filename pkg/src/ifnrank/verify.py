"""Random TRIFN generation and the closed-form vs. quadrature sweep."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Trifn
from .indices import components, va_index
from .metric import lp_line_norm
from .oracle import ambiguity_by_quadrature, lp_by_quadrature, value_by_quadrature


def random_trifn(rng: np.random.Generator, low: float = -2.0, high: float = 2.0) -> Trifn:
    """Draw a valid TRIFN; about one in eight draws is triangular, w=0 or u=1."""
    a = np.sort(rng.uniform(low, high, 4))
    kind = rng.integers(0, 16)
    if kind == 0:
        a[2] = a[1]
    w = rng.uniform(0.0, 1.0)
    u = rng.uniform(0.0, 1.0 - w)
    if kind == 1:
        w, u = 0.0, 1.0
    elif kind == 2:
        w = 0.0
    return Trifn(*(float(x) for x in a), float(w), float(min(u, 1.0 - w)))


def random_trifns(rng: np.random.Generator, count: int, **kw) -> list[Trifn]:
    return [random_trifn(rng, **kw) for _ in range(count)]


@dataclass
class SweepResult:
    samples: int
    max_component_dev: float
    max_distance_dev: float

    @property
    def max_dev(self) -> float:
        return max(self.max_component_dev, self.max_distance_dev)


def oracle_sweep(samples: int = 1000, seed: int = 0, ps=(2.0, 2.5, 3.0, 4.0)) -> SweepResult:
    """Compare every closed form against the quadrature oracle on random inputs."""
    rng = np.random.default_rng(seed)
    nums = random_trifns(rng, samples)
    comp_dev = 0.0
    for n in nums:
        c = components(n)
        quad = (
            value_by_quadrature(n, "membership"),
            value_by_quadrature(n, "nonmembership"),
            ambiguity_by_quadrature(n, "membership"),
            ambiguity_by_quadrature(n, "nonmembership"),
        )
        comp_dev = max(comp_dev, *(abs(x - y) for x, y in zip((c.v_mu, c.v_nu, c.a_mu, c.a_nu), quad)))
    dist_dev = 0.0
    for x, y in zip(nums, nums[1:] + nums[:1]):
        ix, iy = va_index(x), va_index(y)
        e0, e1 = ix.value - iy.value, ix.ambiguity - iy.ambiguity
        for p in ps:
            dist_dev = max(dist_dev, abs(lp_line_norm(p, e0, e1) - lp_by_quadrature(p, e0, e1)))
    return SweepResult(samples, comp_dev, dist_dev)
