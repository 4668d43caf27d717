"""
L_p distance between interval numbers
=====================================

An interval ``[a, b]`` is read as the line ``(a - b) x + b`` on ``[0, 1]``.
Two intervals are as far apart as the L_p norm of the difference of their
lines. The closed form works for any ``p > 1`` and across a sign change of
the difference; the adaptive quadrature oracle confirms it.
"""

import numpy as np

from ifnrank import EndpointPair, interval_distance
from ifnrank.oracle import lp_by_quadrature

left, right = EndpointPair(0.30, 0.10), EndpointPair(0.00, 0.25)

for p in (1.5, 2.0, 2.5, 3.0, 4.0):
    closed = interval_distance(p, left, right)
    numeric = lp_by_quadrature(p, left.b - right.b, left.a - right.a)
    print(f"p={p:.1f}  closed={closed:.12f}  quadrature={numeric:.12f}")

##############################################################################
# Translating every endpoint leaves the distance alone; scaling multiplies it

shift, k = 1.7, -3.0
moved = interval_distance(2, EndpointPair(left.a + shift, left.b + shift), EndpointPair(right.a + shift, right.b + shift))
scaled = interval_distance(2, EndpointPair(k * left.a, k * left.b), EndpointPair(k * right.a, k * right.b))
base = interval_distance(2, left, right)
print(np.isclose(moved, base), np.isclose(scaled, abs(k) * base))

##############################################################################
# For large p the distance approaches the larger endpoint gap

for p in (2, 8, 32, 128):
    print(p, interval_distance(p, left, right))
