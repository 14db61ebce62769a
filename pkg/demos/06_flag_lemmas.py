"""
Point-line flags in P^3
=======================

Two exact checks on the flag variety of pairs q in l: the flag through a
point F inside P with its point on N, and the pointwise description of
flags with q in N and l in P.
"""

from schubert_real.projective import coordinate_point, hyperplane, point, span
from schubert_real.witness import check_no_hats, f01_dual_point

e = [coordinate_point(3, i) for i in range(4)]
plane = hyperplane((0, 0, 0, 1))                 # x3 = 0
n_line = span([e[1], point((0, 0, 1, 1))])        # meets the plane in e1

q, l = f01_dual_point(e[0], plane, n_line)
print("q =", q)
print("l =", l.subspace())

print("no-hats identity on 200 sampled flags:",
      check_no_hats(span([e[0], e[1]]), hyperplane((1, 0, 0, 0)), sample_seed=7))
