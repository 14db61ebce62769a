"""
Lines meeting four lines in P^3
===============================

The classical problem with answer 2.  Incidence with a line is a linear
condition on Plücker coordinates, so the solutions lie on a pencil that
meets the Klein quadric twice.  The two answers are conjugate in a
quadratic field.
"""

import numpy as np

from schubert_real.projective import plucker_from_span, random_point, rank
from schubert_real.solver import solve_four_lines

rng = np.random.default_rng(12)
lines = []
while len(lines) < 4:
    a, b = random_point(rng, 3), random_point(rng, 3)
    if rank([a, b]) == 2:
        lines.append(plucker_from_span(a, b))

for m in lines:
    print("input line", m)

res = solve_four_lines(lines)
print("\nstatus:", res.status.value, " raw discriminant:", res.raw_discriminant)
print("field: Q(sqrt(%d))" % res.disc)
for s in res.solutions:
    print("  solution  a =", [str(x) for x in s.vec_a])
    print("            b =", [str(x) for x in s.vec_b])
    print("  approx", np.round(s.approx(), 4) if s.is_real else "(not real)")

s, t = res.solutions
print("\nconjugates of each other:", s.conjugate() == t)
print("exact incidence with all four inputs:", all(x.meets(m) for x in res.solutions for m in lines))

# Survey: how often are both solutions real for random rational lines?
real = 0
for _ in range(300):
    ls = []
    while len(ls) < 4:
        a, b = random_point(rng, 3), random_point(rng, 3)
        if rank([a, b]) == 2:
            ls.append(plucker_from_span(a, b))
    real += solve_four_lines(ls).disc > 0
print(f"\n{real}/300 random instances have two real solutions")
