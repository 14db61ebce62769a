"""Schubert calculus on the Grassmannian G(1,n) of lines in P^n.

Schubert classes are indexed by partitions fitting a 2 x (n-1) box.  The
only product needed is the Pieri rule for a special class ``sigma_m``,
which is multiplicity free.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Iterable, Iterator, Mapping

from .errors import InvariantViolation, ValidationError

MAX_SYT_BOXES = 60
MAX_ENUMERATE_BOXES = 12


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValidationError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"parts of {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,1"``-style text; the empty string is the empty partition."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValidationError(f"cannot parse partition {text!r}") from exc

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def hooks(self) -> list[int]:
        conj = self.conjugate()
        return [self.parts[i] - j + conj.parts[j] - i - 1
                for i in range(len(self.parts)) for j in range(self.parts[i])]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def count_syt(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape`` by the hook length formula."""
    if shape.size > MAX_SYT_BOXES:
        raise ValidationError(f"shape {shape} has more than {MAX_SYT_BOXES} boxes")
    return factorial(shape.size) // prod(shape.hooks())


def enumerate_syt(shape: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of ``shape``, as tuples of rows.

    Brute force: place 1..N one at a time in any addable corner.  Used as an
    oracle for :func:`count_syt`.
    """
    if shape.size > MAX_ENUMERATE_BOXES:
        raise ValidationError(
            f"shape {shape} has {shape.size} boxes; enumeration is limited "
            f"to {MAX_ENUMERATE_BOXES}")
    target = shape.parts
    out = []

    def grow(rows: list[list[int]], k: int):
        if k > shape.size:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(target)):
            length = len(rows[i])
            above = len(rows[i - 1]) if i else target[0]
            if length < target[i] and length < above:
                rows[i].append(k)
                grow(rows, k + 1)
                rows[i].pop()

    grow([[] for _ in target], 1)
    return out


@dataclass(frozen=True, order=True)
class SchubertClassG1:
    """A Schubert class ``sigma_partition`` of G(1,n)."""

    partition: Partition
    ambient: int

    def __post_init__(self):
        if self.ambient < 2:
            raise ValidationError("G(1,n) needs n >= 2")
        p = self.partition
        if len(p) > 2 or (p.parts and p.parts[0] > self.ambient - 1):
            raise ValidationError(
                f"{p} does not fit the 2 x {self.ambient - 1} box of G(1,{self.ambient})")

    @property
    def codim(self) -> int:
        return self.partition.size

    def __str__(self):
        return f"s{self.partition}"


def schubert_class(parts: Iterable[int], n: int) -> SchubertClassG1:
    return SchubertClassG1(Partition(parts), n)


@dataclass(frozen=True)
class CycleClassSum:
    """A formal sum of Schubert classes of G(1,n) with positive coefficients."""

    ambient: int
    terms: Mapping[SchubertClassG1, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for cls, c in self.terms.items():
            if cls.ambient != self.ambient:
                raise ValidationError("mixed ambient spaces in a cycle sum")
            if c < 0:
                raise ValidationError("cycle sums have nonnegative coefficients")
            if c:
                clean[cls] = int(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def of(cls, c: SchubertClassG1) -> CycleClassSum:
        return cls(c.ambient, {c: 1})

    def __eq__(self, other):
        return (isinstance(other, CycleClassSum) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, tuple(self.terms.items())))

    def __add__(self, other: CycleClassSum) -> CycleClassSum:
        if self.ambient != other.ambient:
            raise ValidationError("mixed ambient spaces in a cycle sum")
        total = Counter(self.terms)
        total.update(other.terms)
        return CycleClassSum(self.ambient, total)

    def coefficient(self, c: SchubertClassG1) -> int:
        return self.terms.get(c, 0)

    def multiply_special(self, m: int) -> CycleClassSum:
        """``sigma_m * self``, extended linearly from :func:`pieri_multiply`."""
        total = Counter()
        for c, coef in self.terms.items():
            for d, k in pieri_multiply(m, c).terms.items():
                total[d] += coef * k
        return CycleClassSum(self.ambient, total)

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self.terms.values())

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(c) if k == 1 else f"{k}*{c}" for c, k in self.terms.items())


def pieri_multiply(m: int, cls: SchubertClassG1) -> CycleClassSum:
    """Pieri rule ``sigma_m * sigma_(a,b)`` in G(1,n).

    Adds ``m`` boxes to the two-row shape with no two in one column, keeping
    only shapes inside the 2 x (n-1) box.
    """
    n = cls.ambient
    if not 1 <= m <= n - 1:
        raise ValidationError(f"sigma_{m} does not exist in G(1,{n})")
    a, b = cls.partition[0], cls.partition[1]
    terms = {}
    # New second row may grow by at most a - b (only under existing first-row boxes).
    for added_below in range(0, min(m, a - b) + 1):
        new = (a + m - added_below, b + added_below)
        if new[0] <= n - 1:
            terms[schubert_class(new, n)] = 1
    return CycleClassSum(n, terms)


def top_class(n: int) -> SchubertClassG1:
    return schubert_class((n - 1, n - 1), n)


def _check_range(n: int):
    if not 2 <= n <= 20:
        raise ValidationError(f"n = {n} outside the supported range 2..20")


def power_degree_lines(n: int) -> int:
    """Number of lines in P^n meeting 2n-2 general (n-2)-planes.

    Computed as the top-class coefficient of ``sigma_1^(2n-2)``.
    """
    _check_range(n)
    s = CycleClassSum.of(schubert_class((), n))
    for _ in range(2 * n - 2):
        s = s.multiply_special(1)
    return s.coefficient(top_class(n))


def rnc_problem_degree(n: int) -> int:
    """Number of (n-2)-planes meeting 2n-2 general rational normal curves in P^n.

    The closed form ``C(2n-2, n-1) * n^(2n-3)`` is checked against the
    degeneration count: each curve breaks into n lines, giving
    ``power_degree_lines(n) * n^(2n-2)``.
    """
    _check_range(n)
    closed = comb(2 * n - 2, n - 1) * n ** (2 * n - 3)
    via_lines = power_degree_lines(n) * n ** (2 * n - 2)
    if closed != via_lines:
        raise InvariantViolation(
            f"degree mismatch for n={n}: closed form {closed} != {via_lines}")
    return closed


def bezout_degree(degrees: Iterable[int]) -> int:
    """Number of points in a transverse intersection of hypersurfaces."""
    degrees = list(degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise ValidationError("degrees must be positive")
    return prod(degrees)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    """All partitions with at most ``max_size`` boxes, smallest first."""
    def parts(total, largest):
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in parts(total - first, first):
                yield (first,) + rest

    for size in range(max_size + 1):
        for p in parts(size, size):
            yield Partition(p)
