"""JSON formats for witness instances and certificates, and their checking.

Rationals are written as canonical ``"p/q"`` strings (``q > 0``,
``gcd(p, q) = 1``).  Plücker vectors are arrays ordered by the pairs
``(0,1), (0,2), ..., (n-1,n)``.  Output is byte stable: keys are sorted and
indentation is fixed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Any

from . import __version__
from .errors import ParseError, SchubertRealError
from .projective import PluckerLine, plucker_pairs, plucker_relations, polar_form
from .qfield import QuadraticNumber, is_squarefree
from .schubert import bezout_degree, power_degree_lines, rnc_problem_degree
from .solver import QuadraticSolution, SolutionSet, SubproblemResult
from .witness import HyperplaneUnion, LineChain, WitnessInstance

SCHEMA_VERSION = 1
RNC_KIND = "rnc-witness"
BEZOUT_KIND = "bezout"

_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text, path="$") -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"expected a \"p/q\" string, got {type(text).__name__}", path)
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"malformed rational {text!r}", path)
    p, q = int(m.group(1)), int(m.group(2))
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}", path)
    if gcd(p, q) != 1:
        raise ParseError(f"rational {text!r} is not in lowest terms", path)
    return Fraction(p, q)


def _vector(data, path, length=None) -> tuple[Fraction, ...]:
    if not isinstance(data, list):
        raise ParseError("expected an array", path)
    if length is not None and len(data) != length:
        raise ParseError(f"expected {length} entries, got {len(data)}", path)
    return tuple(parse_rational(x, f"{path}[{i}]") for i, x in enumerate(data))


def _require(obj, key, kind, path):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path)
    if key not in obj:
        raise ParseError(f"missing key {key!r}", path)
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ParseError(f"{key!r} must be an integer", f"{path}.{key}")
    if kind is not int and not isinstance(value, kind):
        raise ParseError(f"{key!r} has the wrong type", f"{path}.{key}")
    return value


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


# -- instances ---------------------------------------------------------------

def instance_to_json(w: WitnessInstance) -> dict:
    return {
        "n": w.ambient,
        "groups": [[[format_rational(x) for x in l.coords] for l in g] for g in w.groups],
        "seeds": list(w.seeds),
        "t": format_rational(w.t),
    }


def instance_from_json(data, path="$") -> WitnessInstance:
    n = _require(data, "n", int, path)
    if n < 2:
        raise ParseError("n must be at least 2", f"{path}.n")
    groups_raw = _require(data, "groups", list, path)
    seeds = _require(data, "seeds", list, path)
    size = len(plucker_pairs(n))
    groups = []
    for gi, g in enumerate(groups_raw):
        gpath = f"{path}.groups[{gi}]"
        if not isinstance(g, list):
            raise ParseError("expected an array of lines", gpath)
        lines = []
        for li, coords in enumerate(g):
            lpath = f"{gpath}[{li}]"
            vec = _vector(coords, lpath, size)
            try:
                lines.append(PluckerLine.from_coords(n, vec))
            except SchubertRealError as exc:
                raise ParseError(str(exc), lpath) from exc
        try:
            groups.append(LineChain(n, tuple(lines)))
        except SchubertRealError as exc:
            raise ParseError(str(exc), gpath) from exc
    for i, s in enumerate(seeds):
        if s is not None and (isinstance(s, bool) or not isinstance(s, int)):
            raise ParseError("seed must be an integer or null", f"{path}.seeds[{i}]")
    t = parse_rational(data.get("t", "1/1"), f"{path}.t")
    try:
        return WitnessInstance(n, tuple(groups), tuple(seeds), t)
    except SchubertRealError as exc:
        raise ParseError(str(exc), path) from exc


def unions_to_json(unions: list[HyperplaneUnion], seed: int) -> dict:
    return {
        "b": unions[0].ambient,
        "unions": [[[format_rational(x) for x in v] for v in u.normals] for u in unions],
        "seed": seed,
    }


def unions_from_json(data, path="$") -> list[HyperplaneUnion]:
    b = _require(data, "b", int, path)
    raw = _require(data, "unions", list, path)
    out = []
    for ui, u in enumerate(raw):
        upath = f"{path}.unions[{ui}]"
        if not isinstance(u, list) or not u:
            raise ParseError("expected a nonempty array of hyperplanes", upath)
        normals = [_vector(v, f"{upath}[{k}]", b + 1) for k, v in enumerate(u)]
        try:
            out.append(HyperplaneUnion.from_normals(normals))
        except SchubertRealError as exc:
            raise ParseError(str(exc), upath) from exc
    return out


# -- solutions ---------------------------------------------------------------

def solution_to_json(s: QuadraticSolution) -> dict:
    return {"disc": s.disc,
            "a": [format_rational(x) for x in s.vec_a],
            "b": [format_rational(x) for x in s.vec_b]}


def solution_from_json(data, path="$", length=None) -> QuadraticSolution:
    disc = _require(data, "disc", int, path)
    a = _vector(_require(data, "a", list, path), f"{path}.a", length)
    b = _vector(_require(data, "b", list, path), f"{path}.b", len(a))
    return QuadraticSolution(disc, a, b)


def subproblem_to_json(r: SubproblemResult) -> dict:
    return {"selection": list(r.selection), "status": r.status.value, "disc": r.disc,
            "solutions": [solution_to_json(s) for s in r.solutions]}


# -- certificates ------------------------------------------------------------

def rnc_certificate(result: SolutionSet, master_seed: int, retries_used: int) -> dict:
    w = result.instance
    sols = sorted(result.merged)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": RNC_KIND,
        "instance": instance_to_json(w),
        "predicted_degree": rnc_problem_degree(w.ambient),
        "solutions": [solution_to_json(s) for s in sols],
        "real_count": result.real_count,
        "all_real": result.real_count == len(sols),
        "all_distinct": result.all_distinct,
        "transversal": result.transversal,
        "master_seed": master_seed,
        "retries_used": retries_used,
        "tool_version": __version__,
    }


def bezout_certificate(unions: list[HyperplaneUnion], points, seed: int) -> dict:
    pts = sorted(points)
    sols = [QuadraticSolution(1, p, tuple(Fraction(0) for _ in p)) for p in pts]
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": BEZOUT_KIND,
        "instance": unions_to_json(unions, seed),
        "predicted_degree": bezout_degree(u.degree for u in unions),
        "solutions": [solution_to_json(s) for s in sols],
        "real_count": len(sols),
        "all_real": True,
        "all_distinct": len(set(pts)) == len(pts),
        "transversal": True,
        "master_seed": seed,
        "retries_used": 0,
        "tool_version": __version__,
    }


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    reason: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "certificate verified" if self.ok else f"verification failed: {self.reason}: {self.detail}"


class _Failure(Exception):
    def __init__(self, reason, detail=""):
        self.reason, self.detail = reason, detail


def check_certificate(data) -> VerificationReport:
    """Re-derive every claim of a certificate from its instance data.

    Checks run in a fixed order and the first violation is reported:
    schema, degree mismatch, reality flag, canonical form, incidence,
    transversality, distinctness, count.
    """
    try:
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        _check(data)
    except _Failure as f:
        return VerificationReport(False, f.reason, f.detail)
    except ParseError as exc:
        return VerificationReport(False, "schema", str(exc))
    except (json.JSONDecodeError, TypeError, KeyError) as exc:
        return VerificationReport(False, "schema", str(exc))
    return VerificationReport(True)


def verify_certificate(data) -> bool:
    return check_certificate(data).ok


def _check(data):
    version = _require(data, "schema_version", int, "$")
    if version != SCHEMA_VERSION:
        raise _Failure("schema", f"unsupported schema_version {version}")
    kind = _require(data, "kind", str, "$")
    inst = _require(data, "instance", dict, "$")
    predicted = _require(data, "predicted_degree", int, "$")
    raw_sols = _require(data, "solutions", list, "$")
    real_count = _require(data, "real_count", int, "$")
    all_real = _require(data, "all_real", bool, "$")
    all_distinct = _require(data, "all_distinct", bool, "$")
    transversal = _require(data, "transversal", bool, "$")

    if kind == RNC_KIND:
        w = instance_from_json(inst, "$.instance")
        length = len(plucker_pairs(w.ambient))
        expected = rnc_problem_degree(w.ambient)
    elif kind == BEZOUT_KIND:
        unions = unions_from_json(inst, "$.instance")
        length = unions[0].ambient + 1
        if len(unions) != unions[0].ambient:
            raise _Failure("schema", "need one union per ambient dimension")
        expected = bezout_degree(u.degree for u in unions)
    else:
        raise _Failure("schema", f"unknown kind {kind!r}")

    if predicted != expected:
        raise _Failure("degree mismatch", f"predicted_degree {predicted}, expected {expected}")

    sols = [solution_from_json(s, f"$.solutions[{i}]", length) for i, s in enumerate(raw_sols)]

    recount = sum(1 for s in sols if s.disc > 0)
    if real_count != recount:
        raise _Failure("reality flag", f"real_count {real_count} but {recount} solutions have D > 0")
    if all_real != (recount == len(sols)):
        raise _Failure("reality flag", "all_real disagrees with the discriminants")

    for i, s in enumerate(sols):
        if not is_squarefree(s.disc):
            raise _Failure("canonical form", f"solution {i}: D = {s.disc} is not squarefree")
        if s.disc == 1 and any(s.vec_b):
            raise _Failure("canonical form", f"solution {i}: rational solution with irrational part")

    if kind == RNC_KIND:
        _check_rnc_incidence(w, sols, transversal)
    else:
        _check_bezout_incidence(unions, sols)

    keys = {(s.disc, _projective_key(s)) for s in sols}
    distinct = len(keys) == len(sols)
    if all_distinct != distinct or not distinct:
        raise _Failure("distinctness", "solutions are not pairwise distinct" if not distinct
                       else "all_distinct flag disagrees with the data")
    if len(sols) != predicted:
        raise _Failure("count", f"{len(sols)} solutions, predicted {predicted}")


def _field_vector(s: QuadraticSolution) -> list[QuadraticNumber]:
    return [QuadraticNumber(a, b, s.disc) for a, b in zip(s.vec_a, s.vec_b)]


def _projective_key(s: QuadraticSolution):
    v = _field_vector(s)
    lead = next((x for x in v if not x.is_zero()), None)
    if lead is None:
        raise _Failure("canonical form", "zero solution vector")
    inv = lead.inverse()
    return tuple((e.a, e.b) for e in (x * inv for x in v))


def _check_rnc_incidence(w: WitnessInstance, sols, transversal_claim):
    n = w.ambient
    if n != 3:
        raise _Failure("schema", "geometric certificates exist for n = 3 only")
    all_transversal = True
    for i, s in enumerate(sols):
        v = _field_vector(s)
        if any(not r.is_zero() for r in plucker_relations(v, n)):
            raise _Failure("plucker relation", f"solution {i} is not a line")
        for gi, g in enumerate(w.groups):
            hits = sum(1 for l in g if polar_form(v, l.coords) == 0)
            if hits == 0:
                raise _Failure("incidence", f"solution {i} misses every line of group {gi}")
            if hits != 1:
                all_transversal = False
    if transversal_claim and not all_transversal:
        raise _Failure("transversality", "a solution meets two lines of one group")
    # each selection must contribute the degree of the four-line problem
    if transversal_claim:
        per_selection = {}
        for s in sols:
            v = _field_vector(s)
            sel = tuple(next(k for k, l in enumerate(g) if polar_form(v, l.coords) == 0)
                        for g in w.groups)
            per_selection[sel] = per_selection.get(sel, 0) + 1
        selections = set(product(*(range(len(g)) for g in w.groups)))
        if set(per_selection) != selections or any(c != power_degree_lines(n) for c in per_selection.values()):
            raise _Failure("transversality", "solutions are not two per selection")


def _check_bezout_incidence(unions, sols):
    for i, s in enumerate(sols):
        p = s.vec_a
        for ui, u in enumerate(unions):
            hits = sum(1 for h in u.normals if sum(a * x for a, x in zip(h, p)) == 0)
            if hits == 0:
                raise _Failure("incidence", f"point {i} is not on union {ui}")
            if hits != 1:
                raise _Failure("transversality", f"point {i} is singular on union {ui}")
