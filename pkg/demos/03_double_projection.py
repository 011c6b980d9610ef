"""
What the double projection keeps
================================

Projecting rows onto a space of dimension d2 and columns onto one of
dimension d1 keeps a trajectory matrix unchanged when each characteristic
root of the series fits the combined multiplicity budget.  For polynomial
spaces that means polynomials of degree at most (q - 1) + (p - 1) + 1.
"""

import numpy as np

from projssa import ProjectionSpec, embed, keeps_matrix, orthonormalize

N, L = 120, 50
K = N - L + 1
n = np.arange(1, N + 1)
t = n / N

for q, p in ((1, 1), (2, 1), (2, 2)):
    spec = ProjectionSpec.polynomial(q, p, L, K)
    budget = q + p - 1
    for degree in range(budget + 2):
        x = t ** degree
        print(f"ProjSSA({q},{p}) on t**{degree}: relative change {keeps_matrix(spec, embed(x, L)):.2e}")
    print()

# Any root works, not only 1.  Take the spaces spanned by an exponential and
# check that a linearly modulated exponential survives.
mu = 1.02
spec = ProjectionSpec(orthonormalize([mu ** np.arange(K)]), orthonormalize([mu ** np.arange(L)]))
x = (3 * t - 1) * mu ** n
print(f"(3t - 1) * 1.02**n: {keeps_matrix(spec, embed(x, L)):.2e}")
print(f"t**2 * 1.02**n:     {keeps_matrix(spec, embed(t ** 2 * mu ** n, L)):.2e}")
