from fractions import Fraction as F

import numpy as np
import pytest

from schubert_real.errors import (NotAPointError,
                                  PreconditionError, ValidationError)
from schubert_real.projective import (coordinate_point, hyperplane,
                                      lines_incident, meet, plucker_from_span, point,
                                      random_point, random_point_in,
                                      random_projectivity, rank, span)
from schubert_real.witness import (HyperplaneUnion, bezout_union, chain_path,
                                   check_no_hats, coordinate_chain, derive_seeds,
                                   f01_dual_point, instance_from_seeds,
                                   moment_curve_point, path_chain,
                                   rnc_ideal_generators, rnc_witness_instance)

from .property_suites import ideal_endpoint_suite


def e(n, i):
    return coordinate_point(n, i)


def test_coordinate_chain_n3():
    chain = coordinate_chain(3)
    assert [l.coords for l in chain] == [
        plucker_from_span(e(3, 0), e(3, 1)).coords,
        plucker_from_span(e(3, 1), e(3, 2)).coords,
        plucker_from_span(e(3, 2), e(3, 3)).coords,
    ]


def test_coordinate_chain_n2():
    chain = coordinate_chain(2)
    assert list(chain) == [plucker_from_span(e(2, 0), e(2, 1)), plucker_from_span(e(2, 1), e(2, 2))]


@pytest.mark.parametrize("n", range(2, 7))
def test_chain_consecutive_meet_at_e_i(n):
    chain = coordinate_chain(n)
    for i in range(n - 1):
        assert meet(chain.lines[i].subspace(), chain.lines[i + 1].subspace()) == e(n, i + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_chain_path_endpoints(n):
    assert tuple(chain_path(n, 1)) == coordinate_chain(n).lines
    l1 = plucker_from_span(e(n, 0), e(n, 1))
    assert chain_path(n, 0) == [l1] * n


def test_chain_path_half():
    lines = chain_path(3, F(1, 2))
    assert lines[1] == plucker_from_span(e(3, 1), (1, 0, 1, 0))


def test_chain_path_never_collapses():
    # consecutive generators differ in a coordinate e_j, j >= 2, for every t
    for t in (F(-3), F(0), F(1, 7), F(1, 2), F(2), F(11, 3)):
        lines = chain_path(4, t)
        assert len(lines) == 4


@pytest.mark.parametrize("n", [2, 3, 5])
def test_path_chain_is_a_chain(n):
    for t in (F(1, 3), F(1, 2), F(9, 10)):
        chain = path_chain(n, t)
        assert len(chain) == n


def test_ideal_generators_n3():
    fam = rnc_ideal_generators(3, 1)
    assert [str(g) for g in fam.generators] == ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
    fam0 = rnc_ideal_generators(3, 0)
    assert [str(g) for g in fam0.generators] == ["x0*x2", "x0*x3", "x1*x3"]


def test_ideal_generator_count():
    for t in (0, 1, F(2, 7)):
        assert len(rnc_ideal_generators(4, t).generators) == 6


def test_moment_curve_examples():
    assert moment_curve_point(3, 1, 0) == (1, 0, 0, 0)
    assert moment_curve_point(3, 1, 1) == (1, 1, 1, 1)
    p = moment_curve_point(3, 2, 1)
    assert p == (8, 4, 2, 1)
    assert all(g(p) == 0 for g in rnc_ideal_generators(3, 1).generators)
    with pytest.raises(ValidationError):
        moment_curve_point(3, 0, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ideal_endpoints(n):
    ideal_endpoint_suite(n, seed=n)


def test_bezout_union_examples():
    u = bezout_union(2, 2, seed=11)
    assert u.degree == 2 and len(set(u.hyperplanes)) == 2
    assert bezout_union(2, 2, seed=11) == u
    assert all(h.dim == 1 for h in u.hyperplanes)


def test_bezout_union_general_position():
    u = bezout_union(3, 5, seed=4)
    from itertools import combinations
    for trio in combinations(u.normals, 3):
        assert rank(list(trio)) == 3


def test_union_rejects_repeats():
    with pytest.raises(ValidationError):
        HyperplaneUnion.from_normals([(1, 0, 0), (2, 0, 0)])


def test_witness_instance_shapes():
    w = rnc_witness_instance(3, 1)
    assert len(w.groups) == 4 and all(len(g) == 3 for g in w.groups)
    assert sum(len(g) for g in w.groups) == 12
    w2 = rnc_witness_instance(2, 1)
    assert len(w2.groups) == 2 and all(len(g) == 2 for g in w2.groups)


def test_witness_identity_group():
    w = rnc_witness_instance(3, 5, identity_first=True)
    assert w.seeds[0] is None
    assert w.groups[0] == coordinate_chain(3)


def test_witness_groups_are_translates():
    w = rnc_witness_instance(3, 17)
    base = coordinate_chain(3)
    for seed, g in zip(w.seeds, w.groups):
        assert g == base.transform(random_projectivity(seed, 3))
        for a, b in zip(g.lines, g.lines[1:]):
            assert lines_incident(a, b)
        assert not lines_incident(g.lines[0], g.lines[2])


def test_seed_derivation_deterministic():
    assert derive_seeds(42, 4) == derive_seeds(42, 4)
    assert len(set(derive_seeds(42, 4))) == 4
    assert instance_from_seeds(3, derive_seeds(42, 4)) == rnc_witness_instance(3, 42)


def test_f01_dual_point_example():
    f = e(3, 0)
    p = hyperplane((0, 0, 0, 1))
    n_space = span([e(3, 1), point((0, 0, 1, 1))])
    q, l = f01_dual_point(f, p, n_space)
    assert q == e(3, 1)
    assert l == plucker_from_span(e(3, 0), e(3, 1))


def test_f01_not_a_point():
    with pytest.raises(NotAPointError):
        f01_dual_point(e(3, 0), hyperplane((0, 0, 0, 1)), span([e(3, 1), e(3, 2)]))


def test_f01_dimension_errors():
    with pytest.raises(ValidationError):
        f01_dual_point(span([e(3, 0), e(3, 1)]), hyperplane((0, 0, 0, 1)), e(3, 2))
    with pytest.raises(ValidationError):
        f01_dual_point(e(3, 3), hyperplane((0, 0, 0, 1)), span([e(3, 1), e(3, 2)]))


def random_f01_config(rng, n=3):
    """Point F inside a hyperplane P, and a random line N (complementary)."""
    while True:
        normal = random_point(rng, n)
        p = hyperplane(normal)
        f = point(random_point_in(rng, p))
        a, b = random_point(rng, n), random_point(rng, n)
        if rank([a, b]) < 2:
            continue
        n_space = span([point(a), point(b)])
        q = meet(n_space, p)
        if q is not None and q.dim == 0 and q != f:
            return f, p, n_space


def test_f01_postconditions_and_invariance():
    rng = np.random.default_rng(99)
    for trial in range(20):
        f, p, n_space = random_f01_config(rng)
        q, l = f01_dual_point(f, p, n_space)
        assert n_space.contains(q) and p.contains(q)
        assert l.subspace().contains(q) and l.subspace().contains(f)
        g = random_projectivity(1000 + trial, 3)
        q2, l2 = f01_dual_point(g.apply_subspace(f), g.apply_subspace(p), g.apply_subspace(n_space))
        assert q2 == g.apply_subspace(q)
        assert l2 == g.apply_line(l)


def test_no_hats_example():
    # N = <e0, e1> against P = {x0 = 0} meets properly in the point e1
    assert check_no_hats(span([e(3, 0), e(3, 1)]), hyperplane((1, 0, 0, 0)), sample_seed=1)
    # the same N lies inside {x3 = 0}, which is not a proper meeting
    with pytest.raises(PreconditionError):
        check_no_hats(span([e(3, 0), e(3, 1)]), hyperplane((0, 0, 0, 1)), sample_seed=1)


def test_no_hats_improper():
    h = hyperplane((0, 0, 0, 1))
    with pytest.raises(PreconditionError):
        check_no_hats(h, h, sample_seed=1)
    # N inside a proper subspace P never meets it properly
    with pytest.raises(PreconditionError):
        check_no_hats(e(3, 0), h, sample_seed=1)


def test_no_hats_random():
    rng = np.random.default_rng(8)
    from schubert_real.projective import random_subspace
    checked = 0
    for _ in range(10):
        n = 4
        a = random_subspace(rng, n, int(rng.integers(0, n)))
        b = random_subspace(rng, n, int(rng.integers(0, n)))
        try:
            assert check_no_hats(a, b, sample_seed=int(rng.integers(1 << 30)))
            checked += 1
        except PreconditionError:
            pass
    assert checked >= 5


@pytest.mark.parametrize("seed", range(25))
def test_bezout_unions_give_distinct_points(seed):
    from schubert_real.solver import intersect_unions
    from schubert_real.witness import bezout_unions

    pts = intersect_unions(bezout_unions(2, (3, 4), seed))
    assert len(pts) == 12 == len(set(pts))
