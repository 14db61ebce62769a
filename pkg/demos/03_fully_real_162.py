"""
162 real lines meeting four degenerate twisted cubics
=====================================================

Each twisted cubic is replaced by a projective image of the chain of
coordinate lines <e0,e1>, <e1,e2>, <e2,e3>.  A line meets the union of a
chain iff it meets one of its lines, so the problem splits into 3^4 = 81
four-line problems with 2 solutions each: 162 in total.  For a good choice
of the four projectivities every one of them is real.
"""

from collections import Counter

from schubert_real.certificates import check_certificate, rnc_certificate
from schubert_real.cli import PINNED_RNC_SEED
from schubert_real.schubert import rnc_problem_degree
from schubert_real.solver import decompose_and_solve
from schubert_real.witness import rnc_witness_instance

print("predicted degree:", rnc_problem_degree(3))

w = rnc_witness_instance(3, PINNED_RNC_SEED)
result = decompose_and_solve(w)
print(f"master seed {PINNED_RNC_SEED}: {len(result.merged)} solutions, "
      f"{result.real_count} real, distinct={result.all_distinct}, "
      f"transversal={result.transversal}")

fields = Counter(r.disc for r in result.subproblems)
print("distinct quadratic fields used:", len(fields))

cert = rnc_certificate(result, PINNED_RNC_SEED, 0)
print(check_certificate(cert))

# Most random instances are not fully real; the real count moves in steps of 2
hist = Counter()
for seed in range(40):
    hist[decompose_and_solve(rnc_witness_instance(3, seed)).real_count] += 1
print("\nreal counts over master seeds 0..39:")
for k in sorted(hist):
    print(f"  {k:3d} real: {'#' * hist[k]}")

# Moving the chains toward the diagonal of the path l_i(t) keeps all 81
# subproblems near one four-line problem; here t = 1/3
small = Counter()
for seed in range(10):
    small[decompose_and_solve(rnc_witness_instance(3, seed, t="1/3")).real_count] += 1
print("\nreal counts at t = 1/3, seeds 0..9:", dict(sorted(small.items())))
