"""Exact Schubert calculus and fully real witnesses for lines in projective space."""

__version__ = "0.1.0"

from .errors import (DegenerateSpanError, InvariantViolation, NonGenericError,  # noqa: E402
                     NotAPointError, ParseError, PreconditionError,
                     RetryBudgetExhausted, SchubertRealError, ValidationError)
from .projective import (LinearSubspace, PluckerLine, Projectivity, dualize,  # noqa: E402
                         line_meets_subspace, lines_incident, meet,
                         plucker_from_span, random_projectivity, span)
from .schubert import (CycleClassSum, Partition, SchubertClassG1, count_syt,  # noqa: E402
                       enumerate_syt, pieri_multiply, power_degree_lines,
                       rnc_problem_degree)
from .solver import (QuadraticSolution, SolutionSet, Status, SubproblemResult,  # noqa: E402
                     decompose_and_solve, intersect_hyperplane_unions,
                     solve_four_lines)
from .witness import (HyperplaneUnion, LineChain, WitnessInstance, bezout_union,  # noqa: E402
                      chain_path, check_no_hats, coordinate_chain, f01_dual_point,
                      moment_curve_point, rnc_ideal_generators, rnc_witness_instance)
