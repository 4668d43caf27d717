"""
Value and ambiguity of a trapezoidal intuitionistic fuzzy number
=================================================================

A TRIFN carries two piecewise-linear curves: membership rising to ``w`` on
the plateau and non-membership falling to ``u``. Slicing them gives
alpha-cuts and beta-cuts; averaging the cut midpoints and widths gives a
value and an ambiguity for each curve.
"""

from ifnrank import Trifn, alpha_cut, beta_cut, components, membership_at, nonmembership_at, va_index
from ifnrank.oracle import value_by_quadrature

n = Trifn.triangular(0.5, 0.7, 0.9, w=0.7, u=0.2)
print(n)

##############################################################################
# Membership, non-membership and hesitancy at a few points

for x in (0.4, 0.6, 0.7, 0.8, 1.0):
    mu, nu = membership_at(n, x), nonmembership_at(n, x)
    print(f"x={x:.1f}  mu={mu:.3f}  nu={nu:.3f}  pi={1 - mu - nu:.3f}")

##############################################################################
# Cuts shrink toward the plateau as the level moves toward ``w`` (or ``u``)

for level in (0.0, 0.35, 0.7):
    print("alpha", level, alpha_cut(n, level))
for level in (1.0, 0.6, 0.2):
    print("beta ", level, beta_cut(n, level))

##############################################################################
# Closed-form components, and the same value recovered by integrating the cuts

c = components(n)
print(c)
print("quadrature v_mu:", value_by_quadrature(n, "membership"))

##############################################################################
# ``lam`` slides between the pessimistic (0) and optimistic (1) readings

for lam in (0.0, 0.5, 1.0):
    idx = va_index(n, lam)
    print(f"lambda={lam:.1f}  V={idx.value:.4f}  A={idx.ambiguity:.4f}")
