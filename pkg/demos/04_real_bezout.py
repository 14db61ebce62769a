"""
Real Bézout from unions of hyperplanes
======================================

A union of d1 lines meets a union of d2 lines in d1*d2 real points when the
lines are in general position; in P^b the same holds for b unions of
hyperplanes.
"""

from schubert_real.certificates import bezout_certificate, check_certificate
from schubert_real.solver import intersect_unions
from schubert_real.witness import HyperplaneUnion, bezout_unions

a = HyperplaneUnion.from_normals([(1, 0, 0), (0, 1, 0)])        # x = 0, y = 0
b = HyperplaneUnion.from_normals([(1, 0, -1), (0, 1, -1)])      # x = z, y = z
print("hand example:", [tuple(map(str, p)) for p in intersect_unions([a, b])])

for degrees in [(2, 2), (3, 4), (5, 5)]:
    unions = bezout_unions(2, degrees, seed=1)
    pts = intersect_unions(unions)
    cert = bezout_certificate(unions, pts, 1)
    print(f"degrees {degrees}: {len(pts)} points, {check_certificate(cert)}")

unions = bezout_unions(3, (2, 3, 2), seed=3)
print("P^3, degrees (2,3,2):", len(intersect_unions(unions)), "points")
