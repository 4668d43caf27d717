"""
Ranking by signed distance to the origin
========================================

Every number is reduced to its (value, ambiguity) pair, and its score is the
L_p distance of that pair to the origin ``<(0, 0, 0, 0); 0, 1>``, signed by
the value index.
"""

from ifnrank import Trifn, rank, rho, scale

numbers = {
    "a": Trifn(0.7, 0.8, 0.9, 1.0, 0.2, 0.5),
    "b": Trifn(0.3, 0.4, 0.5, 0.6, 0.7, 0.1),
    "c": Trifn(0.5, 0.6, 0.7, 0.8, 0.8, 0.2),
}

outcome = rank(numbers.items(), p=2)
for ident, score in outcome.entries:
    print(ident, round(score, 4))
print(outcome.render())

##############################################################################
# Negating the numbers negates the order

negated = {f"-{k}": scale(-1, n) for k, n in numbers.items()}
print(rank(negated.items()).render(ascending=True))

##############################################################################
# Equal shape, equal degrees: a tie, reported with ``∼``

twins = {"x": numbers["b"], "y": Trifn(*numbers["b"].as_tuple())}
print(rank(twins.items()).render())

##############################################################################
# The exponent and the attitude parameter both move the scores

for p in (2, 3):
    for lam in (0.2, 0.5, 0.8):
        print(p, lam, [round(rho(n, p, lam), 4) for n in numbers.values()])
