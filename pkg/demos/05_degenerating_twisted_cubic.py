"""
Degenerating a rational normal curve to a chain of lines
========================================================

The quadrics x_i x_j - t x_{i+1} x_{j-1} cut out the moment curve at t = 1
and the coordinate chain at t = 0.  Separately, the chain path l_i(t) moves
the coordinate chain to n copies of one line.
"""

from fractions import Fraction

from schubert_real.projective import lines_incident
from schubert_real.witness import (chain_path, coordinate_chain, moment_curve_point,
                                   rnc_ideal_generators)

n = 3
for t in (1, 0):
    fam = rnc_ideal_generators(n, t)
    print(f"I_{t}:", ", ".join(map(str, fam.generators)))

p = moment_curve_point(n, 2, 1)
print("\nmoment curve point (2:1):", p)
print("I_1 values:", [g(p) for g in rnc_ideal_generators(n, 1).generators])
print("I_0 values:", [g(p) for g in rnc_ideal_generators(n, 0).generators])

chain = coordinate_chain(n)
for l in chain:
    print("chain line", l, " I_0 on spanning points:",
          [g(q) for q in l.points() for g in rnc_ideal_generators(n, 0).generators])

print("\nchain path for n = 4:")
for t in (Fraction(1), Fraction(1, 2), Fraction(1, 10), Fraction(0)):
    lines = chain_path(4, t)
    meets = [lines_incident(a, b) for a, b in zip(lines, lines[1:])]
    print(f"  t = {str(t):5s} distinct lines: {len(set(lines))}  consecutive meet: {meets}")
