"""Exact projective linear algebra over the rationals.

Subspaces of P^n are stored as reduced row-echelon bases, so two subspaces
are equal exactly when their bases are.  Lines additionally carry Plücker
coordinates ``p_ij = a_i b_j - a_j b_i`` indexed by pairs ``i < j`` in
lexicographic order and scaled so the first nonzero coordinate is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateSpanError, PreconditionError, ValidationError

Vector = tuple[Fraction, ...]


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form of ``rows``.

    Returns the nonzero rows of the echelon form and their pivot columns.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel ``{x : rows @ x = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(matrix: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    size = len(m)
    result = Fraction(1)
    for c in range(size):
        piv = next((i for i in range(c, size) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, size):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def normalize(v: Sequence) -> Vector:
    """Scale ``v`` so its first nonzero entry is 1."""
    v = as_vector(v)
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise ValidationError("zero vector has no projective class")
    return tuple(x / lead for x in v)


@dataclass(frozen=True)
class LinearSubspace:
    """A projective subspace of P^n given by a canonical basis.

    ``basis`` holds the rows of the reduced row-echelon form of any spanning
    set of the underlying linear subspace of ``Q^(n+1)``.
    """

    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_rows(cls, ambient: int, rows: Iterable[Sequence]) -> LinearSubspace:
        rows = [as_vector(r) for r in rows]
        for r in rows:
            if len(r) != ambient + 1:
                raise ValidationError(
                    f"row of length {len(r)} does not live in P^{ambient}")
        red, _ = rref(rows)
        if not red:
            raise ValidationError("rows span the zero subspace")
        return cls(ambient, tuple(tuple(r) for r in red))

    @property
    def dim(self) -> int:
        """Projective dimension."""
        return len(self.basis) - 1

    def contains_point(self, p: Sequence) -> bool:
        return rank(list(self.basis) + [list(p)]) == len(self.basis)

    def contains(self, other: LinearSubspace) -> bool:
        return rank(list(self.basis) + list(other.basis)) == len(self.basis)

    def as_point(self) -> Vector:
        if self.dim != 0:
            raise ValidationError(f"subspace of dimension {self.dim} is not a point")
        return self.basis[0]

    def __str__(self):
        rows = ", ".join("(" + ":".join(str(x) for x in r) + ")" for r in self.basis)
        return f"<{rows}> in P^{self.ambient}"


def point(coords: Sequence) -> LinearSubspace:
    """The projective point with homogeneous coordinates ``coords``."""
    return LinearSubspace.from_rows(len(coords) - 1, [coords])


def basis_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * (n + 1)
    v[i] = Fraction(1)
    return tuple(v)


def coordinate_point(n: int, i: int) -> LinearSubspace:
    """The coordinate point ``e_i`` of P^n."""
    return point(basis_vector(n, i))


def hyperplane(normal: Sequence) -> LinearSubspace:
    """The hyperplane ``{x : sum(normal_i * x_i) = 0}``."""
    n = len(normal) - 1
    return LinearSubspace.from_rows(n, nullspace([list(normal)], n + 1))


def span(generators: Sequence[LinearSubspace]) -> LinearSubspace:
    generators = list(generators)
    if not generators:
        raise ValidationError("span of an empty list of subspaces")
    n = generators[0].ambient
    if any(g.ambient != n for g in generators):
        raise ValidationError("generators live in different ambient spaces")
    return LinearSubspace.from_rows(n, [r for g in generators for r in g.basis])


def dualize(s: LinearSubspace) -> LinearSubspace:
    """Annihilator of ``s`` under the standard pairing, in dual coordinates.

    A subspace of projective dimension ``k`` goes to one of dimension
    ``n - 1 - k``.  The whole space has no annihilator and is rejected.
    """
    ker = nullspace(list(s.basis), s.ambient + 1)
    if not ker:
        raise ValidationError("the whole space dualizes to the empty set")
    return LinearSubspace.from_rows(s.ambient, ker)


def meet(a: LinearSubspace, b: LinearSubspace) -> LinearSubspace | None:
    """Intersection of two subspaces, or ``None`` when it is empty."""
    if a.ambient != b.ambient:
        raise ValidationError("subspaces live in different ambient spaces")
    n = a.ambient
    equations = (nullspace(list(a.basis), n + 1) + nullspace(list(b.basis), n + 1))
    if not equations:
        return a
    ker = nullspace(equations, n + 1)
    if not ker:
        return None
    return LinearSubspace.from_rows(n, ker)


def meet_dim(a: LinearSubspace, b: LinearSubspace) -> int:
    """Projective dimension of the intersection, -1 for empty."""
    m = meet(a, b)
    return -1 if m is None else m.dim


def meets_properly(a: LinearSubspace, b: LinearSubspace) -> bool:
    """True iff the intersection has the expected dimension ``dim a + dim b - n``."""
    expected = max(a.dim + b.dim - a.ambient, -1)
    return meet_dim(a, b) == expected


# -- Plücker coordinates -----------------------------------------------------

@lru_cache(maxsize=None)
def plucker_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Index pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    return tuple(combinations(range(n + 1), 2))


@lru_cache(maxsize=None)
def plucker_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(plucker_pairs(n))}


def wedge(p: Sequence, q: Sequence) -> list:
    """Unnormalized 2x2 minors ``p_i q_j - p_j q_i``.

    Works for any entry type with ring operations, which lets the solver
    evaluate wedges over quadratic fields.
    """
    n = len(p) - 1
    return [p[i] * q[j] - p[j] * q[i] for i, j in plucker_pairs(n)]


def plucker_relations(coords: Sequence, n: int) -> list:
    """Values of the three-term Grassmann-Plücker relations at ``coords``.

    One value per 4-subset ``i<j<k<l``: ``p_ij p_kl - p_ik p_jl + p_il p_jk``.
    """
    idx = plucker_index(n)
    out = []
    for i, j, k, l in combinations(range(n + 1), 4):
        out.append(coords[idx[i, j]] * coords[idx[k, l]]
                   - coords[idx[i, k]] * coords[idx[j, l]]
                   + coords[idx[i, l]] * coords[idx[j, k]])
    return out


def polar_form(p: Sequence, q: Sequence) -> object:
    """Polarized Plücker quadric on P^3: zero iff the two lines meet."""
    return (p[0] * q[5] + p[5] * q[0]
            - p[1] * q[4] - p[4] * q[1]
            + p[2] * q[3] + p[3] * q[2])


def plucker_quadric(p: Sequence) -> object:
    """The Klein quadric ``p01 p23 - p02 p13 + p03 p12`` on P^3."""
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


@dataclass(frozen=True)
class PluckerLine:
    """A line of P^n as normalized exact Plücker coordinates."""

    ambient: int
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != len(plucker_pairs(self.ambient)):
            raise ValidationError(
                f"expected {len(plucker_pairs(self.ambient))} Plücker coordinates, "
                f"got {len(self.coords)}")

    @classmethod
    def from_coords(cls, ambient: int, coords: Sequence, check: bool = True) -> PluckerLine:
        c = normalize(coords)
        if check and any(r != 0 for r in plucker_relations(c, ambient)):
            raise ValidationError("coordinates violate the Plücker relations")
        return cls(ambient, c)

    @classmethod
    def from_subspace(cls, s: LinearSubspace) -> PluckerLine:
        if s.dim != 1:
            raise ValidationError(f"subspace of dimension {s.dim} is not a line")
        return cls(s.ambient, normalize(wedge(*s.basis)))

    def points(self) -> tuple[Vector, Vector]:
        """Two points spanning the line, read off rows of the Plücker matrix."""
        k = next(k for k, x in enumerate(self.coords) if x != 0)
        i, j = plucker_pairs(self.ambient)[k]
        idx = plucker_index(self.ambient)
        n = self.ambient

        def row(r):
            out = []
            for c in range(n + 1):
                if c == r:
                    out.append(Fraction(0))
                elif r < c:
                    out.append(self.coords[idx[r, c]])
                else:
                    out.append(-self.coords[idx[c, r]])
            return tuple(out)

        return row(i), row(j)

    def subspace(self) -> LinearSubspace:
        return LinearSubspace.from_rows(self.ambient, self.points())

    def __str__(self):
        return "[" + ", ".join(str(x) for x in self.coords) + "]"


def plucker_from_span(p: Sequence | LinearSubspace, q: Sequence | LinearSubspace) -> PluckerLine:
    """Plücker line through two distinct points."""
    if isinstance(p, LinearSubspace):
        p = p.as_point()
    if isinstance(q, LinearSubspace):
        q = q.as_point()
    p, q = as_vector(p), as_vector(q)
    if len(p) != len(q):
        raise ValidationError("points live in different ambient spaces")
    minors = wedge(p, q)
    if all(x == 0 for x in minors):
        raise DegenerateSpanError("points coincide projectively")
    return PluckerLine(len(p) - 1, normalize(minors))


def lines_incident(a: PluckerLine, b: PluckerLine) -> bool:
    if a.ambient != b.ambient:
        raise ValidationError("lines live in different ambient spaces")
    if a.ambient == 3:
        return polar_form(a.coords, b.coords) == 0
    return rank(list(a.points()) + list(b.points())) <= 3


def line_meets_subspace(l: PluckerLine, n_plane: LinearSubspace) -> bool:
    """Whether ``l`` meets the codimension-2 subspace ``n_plane``."""
    if n_plane.ambient != l.ambient or n_plane.dim != l.ambient - 2:
        raise ValidationError(
            f"need an ({l.ambient - 2})-plane of P^{l.ambient}, got dim {n_plane.dim}")
    return det(list(l.points()) + list(n_plane.basis)) == 0


def dualize_line_p3(l: PluckerLine) -> PluckerLine:
    """The dual line of ``l`` in P^3, via the annihilator."""
    if l.ambient != 3:
        raise ValidationError("line duality as a line-to-line map needs n = 3")
    return PluckerLine.from_subspace(dualize(l.subspace()))


# -- projectivities ----------------------------------------------------------

@dataclass(frozen=True)
class Projectivity:
    """An invertible rational matrix acting on column vectors."""

    matrix: tuple[Vector, ...]

    def __post_init__(self):
        if det(self.matrix) == 0:
            raise ValidationError("singular matrix is not a projectivity")

    @classmethod
    def identity(cls, n: int) -> Projectivity:
        return cls(tuple(basis_vector(n, i) for i in range(n + 1)))

    @property
    def ambient(self) -> int:
        return len(self.matrix) - 1

    def apply_vector(self, v: Sequence) -> Vector:
        return tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in self.matrix)

    def apply_subspace(self, s: LinearSubspace) -> LinearSubspace:
        return LinearSubspace.from_rows(s.ambient, [self.apply_vector(r) for r in s.basis])

    def apply_line(self, l: PluckerLine) -> PluckerLine:
        p, q = l.points()
        return plucker_from_span(self.apply_vector(p), self.apply_vector(q))

    def compose(self, other: Projectivity) -> Projectivity:
        """``self ∘ other``."""
        cols = list(zip(*other.matrix))
        return Projectivity(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.matrix))


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)


def random_projectivity(seed: int, n: int) -> Projectivity:
    """Deterministic random projectivity with integer entries in [-9, 9]."""
    rng = rng_from_seed(seed)
    while True:
        m = rng.integers(-9, 10, size=(n + 1, n + 1))
        rows = tuple(tuple(Fraction(int(x)) for x in row) for row in m)
        if det(rows) != 0:
            return Projectivity(rows)


def random_point(rng: np.random.Generator, n: int, bound: int = 9) -> Vector:
    while True:
        v = rng.integers(-bound, bound + 1, size=n + 1)
        if v.any():
            return tuple(Fraction(int(x)) for x in v)


def random_point_in(rng: np.random.Generator, s: LinearSubspace, bound: int = 9) -> Vector:
    """Random nonzero integer combination of the basis of ``s``."""
    while True:
        c = rng.integers(-bound, bound + 1, size=len(s.basis))
        if c.any():
            v = [Fraction(0)] * (s.ambient + 1)
            for coef, row in zip(c, s.basis):
                v = [x + int(coef) * y for x, y in zip(v, row)]
            return tuple(v)


def random_subspace(rng: np.random.Generator, n: int, dim: int) -> LinearSubspace:
    while True:
        rows = [random_point(rng, n) for _ in range(dim + 1)]
        if rank(rows) == dim + 1:
            return LinearSubspace.from_rows(n, rows)


def require_same_ambient(*spaces) -> int:
    n = spaces[0].ambient
    if any(s.ambient != n for s in spaces):
        raise PreconditionError("objects live in different ambient spaces")
    return n
