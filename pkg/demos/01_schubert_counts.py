"""
Counting lines with Schubert calculus
=====================================

Tableau counts, Pieri products in G(1,n), and the two enumerative degrees
the rest of the package reproduces geometrically.
"""

from schubert_real import (Partition, count_syt, enumerate_syt, pieri_multiply,
                           power_degree_lines, rnc_problem_degree)
from schubert_real.schubert import CycleClassSum, schubert_class

# The two standard tableaux of shape (2,2)
for t in enumerate_syt(Partition((2, 2))):
    print("\n".join(" ".join(map(str, row)) for row in t), end="\n\n")

# Hook length formula on a big shape: exact integers throughout
print("SYT of (10,10):", count_syt(Partition((10, 10))))

# Pieri products are multiplicity free
print("s1 * s(1) in G(1,3) =", pieri_multiply(1, schubert_class((1,), 3)))
print("s2 * s(1) in G(1,4) =", pieri_multiply(2, schubert_class((1,), 4)))

# Powers of the hyperplane class: sigma_1^4 in G(1,3) lands on 2 * s(2,2)
s = CycleClassSum.of(schubert_class((), 3))
for k in range(4):
    s = s.multiply_special(1)
    print(f"sigma_1^{k + 1} =", s)

print()
print(" n  lines meeting 2n-2 (n-2)-planes   (n-2)-planes meeting 2n-2 RNCs")
for n in range(2, 8):
    print(f"{n:2d}  {power_degree_lines(n):31d}   {rnc_problem_degree(n):d}")
