"""Exact solving of the zero-dimensional problems built by ``witness``.

Lines meeting four lines of P^3 are found in Plücker space: the four
incidence conditions are linear, leaving a pencil ``p0 + s*p1`` that cuts
the Klein quadric in a quadratic equation for ``s``.  Solutions therefore
live in a quadratic field and are stored as ``A + B*sqrt(D)``.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm, gcd
from typing import Sequence

from .errors import InvariantViolation, NonGenericError, ValidationError
from .projective import (PluckerLine, nullspace, plucker_quadric, polar_form,
                         rank)
from .qfield import QuadraticNumber, squarefree_rational
from .witness import HyperplaneUnion, WitnessInstance

Vector = tuple[Fraction, ...]
THREADS_ENV = "SCHUBERT_REAL_THREADS"


def _scale(c, v):
    return tuple(c * x for x in v)


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _primitive(v: Sequence[Fraction]) -> Vector:
    """Positive rational multiple of ``v`` with coprime integer entries."""
    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(Fraction(x // g) for x in ints) if g else tuple(Fraction(0) for _ in v)


@dataclass(frozen=True, order=True)
class QuadraticSolution:
    """A Plücker vector ``vec_a + vec_b * sqrt(disc)``.

    Canonical form: ``disc`` squarefree, ``vec_b`` zero when ``disc == 1``,
    and the first nonzero entry equal to 1.  Equal solutions then have equal
    ``(disc, vec_a, vec_b)``.
    """

    disc: int
    vec_a: Vector
    vec_b: Vector

    @classmethod
    def canonical(cls, disc: int, vec_a, vec_b=None) -> QuadraticSolution:
        vec_a = tuple(Fraction(x) for x in vec_a)
        vec_b = tuple(Fraction(0) for _ in vec_a) if vec_b is None else tuple(Fraction(x) for x in vec_b)
        if disc == 1:
            vec_a, vec_b = _add(vec_a, vec_b), tuple(Fraction(0) for _ in vec_a)
        entries = [QuadraticNumber(a, b, disc) for a, b in zip(vec_a, vec_b)]
        lead = next((e for e in entries if not e.is_zero()), None)
        if lead is None:
            raise ValidationError("zero vector is not a solution")
        inv = lead.inverse()
        scaled = [e * inv for e in entries]
        return cls(disc, tuple(e.a for e in scaled), tuple(e.b for e in scaled))

    @property
    def is_real(self) -> bool:
        return self.disc > 0

    @property
    def is_rational(self) -> bool:
        return not any(self.vec_b)

    def entries(self) -> list[QuadraticNumber]:
        return [QuadraticNumber(a, b, self.disc) for a, b in zip(self.vec_a, self.vec_b)]

    def conjugate(self) -> QuadraticSolution:
        return QuadraticSolution(self.disc, self.vec_a, tuple(-x for x in self.vec_b))

    def meets(self, line: PluckerLine) -> bool:
        m = line.coords
        return polar_form(self.vec_a, m) == 0 and polar_form(self.vec_b, m) == 0

    def on_klein_quadric(self) -> bool:
        a, b, d = self.vec_a, self.vec_b, self.disc
        rational = plucker_quadric(a) + d * plucker_quadric(b)
        irrational = polar_form(a, b)
        return rational == 0 and irrational == 0

    def approx(self) -> list[float]:
        return [float(e) for e in self.entries()]


class Status(str, enum.Enum):
    TWO_DISTINCT = "TwoDistinct"
    DOUBLE_ROOT = "DoubleRoot"
    NON_GENERIC = "NonGeneric"


@dataclass(frozen=True)
class SubproblemResult:
    selection: tuple[int, ...]
    status: Status
    disc: int | None
    solutions: tuple[QuadraticSolution, ...]
    raw_discriminant: Fraction | None = None

    @property
    def real_count(self) -> int:
        return sum(s.is_real for s in self.solutions)


def incidence_row(m: PluckerLine) -> list[Fraction]:
    """Coefficients of the linear form ``x -> polar_form(x, m)``."""
    c = m.coords
    return [c[5], -c[4], c[3], c[2], -c[1], c[0]]


def solve_four_lines(lines: Sequence[PluckerLine], selection=()) -> SubproblemResult:
    """All lines of P^3 meeting the four given lines."""
    if len(lines) != 4 or any(l.ambient != 3 for l in lines):
        raise ValidationError("need exactly four lines of P^3")
    selection = tuple(selection)
    rows = [incidence_row(m) for m in lines]
    if rank(rows) < 4:
        return SubproblemResult(selection, Status.NON_GENERIC, None, ())
    p0, p1 = (_primitive(v) for v in nullspace(rows, 6))
    a = plucker_quadric(p1)
    b = polar_form(p0, p1)
    c = plucker_quadric(p0)

    if a == 0 and b == 0:
        if c == 0:
            return SubproblemResult(selection, Status.NON_GENERIC, None, ())
        # quadratic of degree 0: a double root at the pencil's point at infinity
        sols = (QuadraticSolution.canonical(1, p1),)
        return _checked(SubproblemResult(selection, Status.DOUBLE_ROOT, 0, sols, Fraction(0)), lines)
    if a == 0:
        # one root escaped to infinity: p1 itself
        sols = (QuadraticSolution.canonical(1, _add(p0, _scale(-c / b, p1))),
                QuadraticSolution.canonical(1, p1))
        return _checked(SubproblemResult(selection, Status.TWO_DISTINCT, 1, tuple(sorted(sols)), b * b), lines)

    disc = b * b - 4 * a * c
    center = _add(p0, _scale(-b / (2 * a), p1))
    if disc == 0:
        sols = (QuadraticSolution.canonical(1, center),)
        return _checked(SubproblemResult(selection, Status.DOUBLE_ROOT, 0, sols, disc), lines)
    d, k = squarefree_rational(disc)
    half_width = _scale(k / (2 * a), p1)
    if d == 1:
        sols = (QuadraticSolution.canonical(1, _add(center, half_width)),
                QuadraticSolution.canonical(1, _add(center, _scale(-1, half_width))))
    else:
        sols = (QuadraticSolution.canonical(d, center, half_width),
                QuadraticSolution.canonical(d, center, _scale(-1, half_width)))
    return _checked(SubproblemResult(selection, Status.TWO_DISTINCT, d, tuple(sorted(sols)), disc), lines)


def _checked(res: SubproblemResult, lines) -> SubproblemResult:
    for s in res.solutions:
        if not s.on_klein_quadric() or not all(s.meets(m) for m in lines):
            raise InvariantViolation(f"solution of selection {res.selection} fails its conditions")
    return res


@dataclass(frozen=True)
class SolutionSet:
    instance: WitnessInstance
    subproblems: tuple[SubproblemResult, ...]
    merged: tuple[QuadraticSolution, ...]
    real_count: int
    all_distinct: bool
    transversal: bool


def _solve_selection(args):
    lines, sel = args
    return solve_four_lines(lines, sel)


def solver_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def decompose_and_solve(w: WitnessInstance, threads: int | None = None) -> SolutionSet:
    """Solve every selection of one line per group and merge the answers.

    Raises :class:`NonGenericError` naming the first special selection.
    """
    if w.ambient != 3:
        raise ValidationError("geometric solving is implemented for n = 3 only")
    selections = list(product(*(range(len(g)) for g in w.groups)))
    jobs = [([g.lines[i] for g, i in zip(w.groups, sel)], sel) for sel in selections]
    threads = solver_threads() if threads is None else threads
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_solve_selection, jobs, chunksize=8))
    else:
        results = [_solve_selection(j) for j in jobs]

    for r in results:
        if r.status is Status.NON_GENERIC:
            raise NonGenericError(f"selection {r.selection} is not generic", r.selection)

    merged, seen, total = [], set(), 0
    for r in results:
        for s in r.solutions:
            total += 1
            if s not in seen:
                seen.add(s)
                merged.append(s)
    all_distinct = len(merged) == total
    transversal = all(r.status is Status.TWO_DISTINCT for r in results) and all(
        all(sum(s.meets(l) for l in g) == 1 for g in w.groups) for s in merged)
    return SolutionSet(w, tuple(results), tuple(merged),
                       sum(s.is_real for s in merged), all_distinct, transversal)


# -- Bézout ------------------------------------------------------------------

def cross(u: Sequence, v: Sequence) -> Vector:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def intersect_hyperplane_unions(a: HyperplaneUnion, b: HyperplaneUnion) -> list[Vector]:
    """Points of ``A ∩ B`` for two unions of lines in P^2, by cross products."""
    if a.ambient != 2 or b.ambient != 2:
        raise ValidationError("cross-product intersection is for unions in P^2")
    if set(a.hyperplanes) & set(b.hyperplanes):
        raise ValidationError("the unions share a component")
    pts = [_normalize_point(cross(u, v)) for u in a.normals for v in b.normals]
    if len(set(pts)) != len(pts):
        raise NonGenericError("two intersection points coincide")
    return pts


def intersect_unions(unions: Sequence[HyperplaneUnion]) -> list[Vector]:
    """Points where ``b`` unions of hyperplanes in P^b meet, one hyperplane each."""
    b = unions[0].ambient
    if len(unions) != b or any(u.ambient != b for u in unions):
        raise ValidationError(f"need exactly {b} unions of hyperplanes in P^{b}")
    for u, v in combinations(unions, 2):
        if set(u.hyperplanes) & set(v.hyperplanes):
            raise ValidationError("two unions share a component")
    if b == 2:
        return intersect_hyperplane_unions(*unions)
    pts = []
    for choice in product(*(u.normals for u in unions)):
        ker = nullspace(list(choice), b + 1)
        if len(ker) != 1:
            raise NonGenericError("chosen hyperplanes do not meet in a point")
        pts.append(_normalize_point(ker[0]))
    if len(set(pts)) != len(pts):
        raise NonGenericError("two intersection points coincide")
    return pts


def _normalize_point(v) -> Vector:
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise NonGenericError("hyperplanes coincide")
    return tuple(Fraction(x) / lead for x in v)
