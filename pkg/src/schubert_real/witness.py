"""Explicit degenerate configurations.

The rational normal curve of P^n degenerates, through the ideals
``x_i x_j - t x_{i+1} x_{j-1}``, to the chain of coordinate lines
``<e_0,e_1>, <e_1,e_2>, ..., <e_{n-1},e_n>``.  Projective translates of
such chains are the building blocks of the fully real witness instances
solved in :mod:`schubert_real.solver`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (DegenerateSpanError, NotAPointError, PreconditionError,
                     SchubertRealError, ValidationError)
from .projective import (LinearSubspace, PluckerLine, Projectivity, basis_vector,
                         hyperplane, lines_incident, meet, meets_properly,
                         plucker_from_span, point, random_point,
                         random_point_in, random_projectivity, rank, rng_from_seed,
                         span)


@dataclass(frozen=True)
class LineChain:
    ambient: int
    lines: tuple[PluckerLine, ...]

    def __post_init__(self):
        for a, b in zip(self.lines, self.lines[1:]):
            if not lines_incident(a, b):
                raise ValidationError("consecutive lines of a chain must meet")

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def transform(self, g: Projectivity) -> LineChain:
        return LineChain(self.ambient, tuple(g.apply_line(l) for l in self.lines))


def coordinate_chain(n: int) -> LineChain:
    if n < 2:
        raise ValidationError("chains need n >= 2")
    lines = tuple(plucker_from_span(basis_vector(n, i - 1), basis_vector(n, i))
                  for i in range(1, n + 1))
    chain = LineChain(n, lines)
    for i in range(n):
        for j in range(i + 2, n):
            if lines_incident(lines[i], lines[j]):
                raise ValidationError("non-consecutive coordinate lines meet")
    return chain


def chain_path(n: int, t) -> list[PluckerLine]:
    """Lines ``l_i(t) = <t e_{i-1} + (1-t) e_{(i-1)%2}, t e_i + (1-t) e_{i%2}>``.

    At ``t = 1`` this is the coordinate chain; at ``t = 0`` every line
    collapses onto ``<e_0, e_1>``.
    """
    if n < 2:
        raise ValidationError("chains need n >= 2")
    t = Fraction(t)

    def pt(j):
        v = [Fraction(0)] * (n + 1)
        v[j] += t
        v[j % 2] += 1 - t
        return v

    lines = []
    for i in range(1, n + 1):
        try:
            lines.append(plucker_from_span(pt(i - 1), pt(i)))
        except DegenerateSpanError as exc:
            raise DegenerateSpanError(f"l_{i}({t}) is degenerate; t outside the valid range") from exc
    return lines


def path_chain(n: int, t) -> LineChain:
    """:func:`chain_path` as a :class:`LineChain` (valid for ``0 < t <= 1``)."""
    return LineChain(n, tuple(chain_path(n, t)))


# -- ideal family ------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    """Sparse quadratic form: ``{(i, j): c}`` with ``i <= j`` meaning ``c x_i x_j``."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    @classmethod
    def from_dict(cls, d) -> QuadraticForm:
        acc = {}
        for (i, j), c in d.items():
            key = (min(i, j), max(i, j))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        return cls(tuple(sorted((k, v) for k, v in acc.items() if v != 0)))

    def __call__(self, x: Sequence):
        return sum((c * x[i] * x[j] for (i, j), c in self.terms), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in self.terms:
            mono = f"x{i}^2" if i == j else f"x{i}*x{j}"
            out.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


@dataclass(frozen=True)
class QuadraticFormFamily:
    ambient: int
    t: Fraction
    generators: tuple[QuadraticForm, ...]
    pairs: tuple[tuple[int, int], ...]


def rnc_ideal_generators(n: int, t) -> QuadraticFormFamily:
    """Generators ``x_i x_j - t x_{i+1} x_{j-1}`` for ``j - i >= 2``."""
    if n < 2:
        raise ValidationError("need n >= 2")
    t = Fraction(t)
    pairs = tuple((i, j) for i in range(n + 1) for j in range(i + 2, n + 1))
    gens = []
    for i, j in pairs:
        d = {(i, j): Fraction(1)}
        key = (i + 1, j - 1)
        d[key] = d.get(key, Fraction(0)) - t
        gens.append(QuadraticForm.from_dict(d))
    return QuadraticFormFamily(n, t, tuple(gens), pairs)


def moment_curve_point(n: int, s, u) -> tuple[Fraction, ...]:
    s, u = Fraction(s), Fraction(u)
    if s == 0 and u == 0:
        raise ValidationError("(s, u) = (0, 0) is not a point of P^1")
    return tuple(s ** (n - k) * u ** k for k in range(n + 1))


# -- Bézout unions -----------------------------------------------------------

@dataclass(frozen=True)
class HyperplaneUnion:
    ambient: int
    hyperplanes: tuple[LinearSubspace, ...]
    normals: tuple[tuple[Fraction, ...], ...]
    seed: int | None = None

    @classmethod
    def from_normals(cls, normals, seed=None) -> HyperplaneUnion:
        normals = tuple(tuple(Fraction(x) for x in v) for v in normals)
        b = len(normals[0]) - 1
        hs = tuple(hyperplane(v) for v in normals)
        if len(set(hs)) != len(hs):
            raise ValidationError("hyperplanes of a union must be pairwise distinct")
        return cls(b, hs, normals, seed)

    @property
    def degree(self) -> int:
        return len(self.hyperplanes)


MAX_REJECTIONS = 1000


def bezout_union(b: int, d: int, seed: int, _rng=None) -> HyperplaneUnion:
    """``d`` distinct rational hyperplanes of P^b in general position.

    Any ``b`` of them meet in a single point.
    """
    if b < 2 or d < 1:
        raise ValidationError("need b >= 2 and d >= 1")
    rng = _rng if _rng is not None else rng_from_seed(seed)
    for _ in range(MAX_REJECTIONS):
        normals = [random_point(rng, b) for _ in range(d)]
        if _general_position(normals, b):
            return HyperplaneUnion.from_normals(normals, seed)
    raise SchubertRealError(
        f"no general-position union of {d} hyperplanes in P^{b} after {MAX_REJECTIONS} draws")


def _general_position(normals, b) -> bool:
    from itertools import combinations

    k = min(b, len(normals))
    return all(rank(list(c)) == k for c in combinations(normals, k)) and all(
        rank([u, v]) == 2 for u, v in combinations(normals, 2))


def bezout_unions(b: int, degrees: Sequence[int], seed: int) -> list[HyperplaneUnion]:
    """One union per degree, drawn from a single seeded stream.

    The draw is repeated until no ``b + 1`` hyperplanes, taken across all
    unions, share a point, so the ``prod(degrees)`` intersection points are
    distinct.
    """
    from itertools import combinations

    rng = rng_from_seed(seed)
    for _ in range(MAX_REJECTIONS):
        unions = [bezout_union(b, d, seed, _rng=rng) for d in degrees]
        normals = [v for u in unions for v in u.normals]
        if all(rank(list(c)) == b + 1 for c in combinations(normals, b + 1)):
            return unions
    raise SchubertRealError(
        f"no general-position unions of degrees {tuple(degrees)} in P^{b} after {MAX_REJECTIONS} draws")


# -- witness instances -------------------------------------------------------

@dataclass(frozen=True)
class WitnessInstance:
    """``2n - 2`` projective translates of one line chain.

    ``seeds[k]`` generated the projectivity of group ``k`` (``None`` is the
    identity).  ``t`` is the point on the chain path that was translated.
    """

    ambient: int
    groups: tuple[LineChain, ...]
    seeds: tuple[int | None, ...]
    t: Fraction = Fraction(1)

    def __post_init__(self):
        n = self.ambient
        if len(self.groups) != 2 * n - 2:
            raise ValidationError(f"need {2 * n - 2} groups, got {len(self.groups)}")
        if any(len(g) != n for g in self.groups):
            raise ValidationError(f"every group needs {n} lines")


def derive_seeds(master_seed: int, count: int) -> tuple[int, ...]:
    ss = np.random.SeedSequence(master_seed & 0xFFFFFFFFFFFFFFFF)
    return tuple(int(s.generate_state(1, np.uint64)[0]) for s in ss.spawn(count))


def group_projectivity(seed: int | None, n: int) -> Projectivity:
    return Projectivity.identity(n) if seed is None else random_projectivity(seed, n)


def rnc_witness_instance(n: int, master_seed: int, t=1, identity_first: bool = False) -> WitnessInstance:
    """Build ``2n - 2`` groups, each a seeded projectivity applied to a chain.

    With ``t = 1`` the chain is the coordinate chain.  Smaller ``t`` moves
    along the chain path toward the diagonal, which keeps every
    subproblem close to the single problem on the first lines.
    """
    if n < 2:
        raise ValidationError("need n >= 2")
    t = Fraction(t)
    if not 0 < t <= 1:
        raise ValidationError("t must lie in (0, 1]")
    seeds: list[int | None] = list(derive_seeds(master_seed, 2 * n - 2))
    if identity_first:
        seeds[0] = None
    return instance_from_seeds(n, seeds, t)


def instance_from_seeds(n: int, seeds: Sequence[int | None], t=1) -> WitnessInstance:
    t = Fraction(t)
    base = path_chain(n, t)
    groups = tuple(base.transform(group_projectivity(s, n)) for s in seeds)
    return WitnessInstance(n, groups, tuple(seeds), t)


# -- flag-variety identities -------------------------------------------------

def f01_dual_point(f: LinearSubspace, p: LinearSubspace, n_space: LinearSubspace):
    """The single flag ``(q, l)`` with ``q = N ∩ P`` and ``l = <F, q>``.

    This is the intersection of the flags whose line meets the point ``F``
    inside ``P`` with the flags whose point lies on ``N``.
    """
    n = f.ambient
    if p.ambient != n or n_space.ambient != n:
        raise ValidationError("subspaces live in different ambient spaces")
    if f.dim != 0:
        raise ValidationError("F must be a point")
    if not p.contains(f):
        raise ValidationError("F must lie in P")
    if p.dim + n_space.dim != n:
        raise ValidationError(
            f"dim P + dim N = {p.dim + n_space.dim} is not complementary to n = {n}")
    q = meet(n_space, p)
    if q is None or q.dim != 0:
        what = "empty" if q is None else f"of dimension {q.dim}"
        raise NotAPointError(f"N ∩ P is {what}, not a point")
    if q == f:
        raise ValidationError("F coincides with N ∩ P; the line <F, N ∩ P> is undefined")
    return q, plucker_from_span(f, q)


NO_HATS_SAMPLES = 200


def check_no_hats(n_space: LinearSubspace, p: LinearSubspace, sample_seed: int) -> bool:
    """Sample flags ``q ∈ l`` and compare membership in two descriptions.

    ``{q in N, l in P}`` against ``{q in N ∩ P, l in P}``.  Points and lines
    are drawn from N, P, N ∩ P and the whole space so every stratum is hit.
    """
    if n_space.ambient != p.ambient:
        raise PreconditionError("subspaces live in different ambient spaces")
    if not meets_properly(n_space, p):
        raise PreconditionError("N and P do not meet properly")
    n = p.ambient
    rng = rng_from_seed(sample_seed)
    np_meet = meet(n_space, p)
    whole = LinearSubspace.from_rows(n, [basis_vector(n, i) for i in range(n + 1)])
    sources = [s for s in (n_space, p, np_meet, whole) if s is not None]

    for _ in range(NO_HATS_SAMPLES):
        q_src = sources[rng.integers(len(sources))]
        q = random_point_in(rng, q_src)
        r_src = sources[rng.integers(len(sources))]
        r = random_point_in(rng, r_src)
        if rank([q, r]) < 2:
            continue
        line = span([point(q), point(r)])
        lhs = n_space.contains_point(q) and p.contains(line)
        rhs = np_meet is not None and np_meet.contains_point(q) and p.contains(line)
        if lhs != rhs:
            return False
    return True
