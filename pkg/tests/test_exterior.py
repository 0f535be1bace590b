import random

import pytest

from hybres.core import ResultantOptions, setup
from hybres.exterior import (
    ExteriorElement,
    delta_q_element,
    delta_relation,
    e_generator,
    element_m,
    j0_element,
    j0_wedge_e_alpha_direct,
    j0_wedge_e_alpha_lemma,
    levels_interior,
    mu_partition,
    verify_delta_relation,
)
from hybres.geometry import LatticePoint, example_support, polygon_from_support, unit_square, unit_triangle
from hybres.sampling import random_saturated_support

L = LatticePoint
E = ExteriorElement.basis


def test_wedge_examples():
    assert E(1, L(1, 0), (2,)).wedge(E(1, L(1, 2), (6,))) == E(2, L(2, 2), (2, 6))
    x = E(1, L(1, 0), (2,)) + E(1, L(0, 1), (3,))
    assert x.wedge(E(1, L(1, 0), (2,))).wedge(E(0, L(0, 0), (2,))) == 0
    single = E(1, L(1, 0), (2,))
    assert single.wedge(single) == 0
    p, q = L(1, 1), L(0, 2)
    assert E(1, p, (6,)).wedge(E(1, q, (2,))) == -E(2, p + q, (2, 6))


def test_basis_canonicalizes():
    assert E(2, L(0, 0), (3, 1)) == -E(2, L(0, 0), (1, 3))
    assert E(2, L(0, 0), (1, 1)) == 0


def test_wedge_associative_and_bilinear():
    rng = random.Random(1)

    def rand_elem():
        acc = ExteriorElement()
        for _ in range(3):
            gens = rng.sample(range(1, 7), rng.randint(1, 2))
            acc = acc + E(1, L(rng.randint(0, 2), rng.randint(0, 2)), gens, rng.randint(-3, 3))
        return acc

    for _ in range(30):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))
        assert a.wedge(b + c) == a.wedge(b) + a.wedge(c)


def test_element_m():
    m = element_m(example_support())
    assert len(m) == 6
    assert all(c == 1 for c in m.terms.values())
    assert m.wedge(m) == 0  # odd degree with commuting monomials


def test_mu_partition_triangle():
    s = setup(unit_triangle(), ResultantOptions(L(0, 0)))
    mu = mu_partition(s.support, s.polygon, s.partition)
    idx = s.support.index_of
    assert mu.mu3 == (idx(L(0, 0)),)
    assert mu.mu2 == (idx(L(0, 1)),)
    assert mu.mu1 == (idx(L(1, 0)),)


def test_mu_partition_example(example):
    mu = mu_partition(example.support, example.polygon, example.partition)
    assert mu.mu3 == (1,)
    assert mu.mu2 == (3,)  # (0,1) is the other point on the edge x = 0
    assert mu.mu1 == (2, 4, 5, 6)


def test_j0_triangle():
    s = setup(unit_triangle(), ResultantOptions(L(0, 0)))
    mu = mu_partition(s.support, s.polygon, s.partition)
    j0 = j0_element(s.support, s.polygon, mu)
    # u=(1,0) is index 2, v=(0,1) index 3, w=(0,0) index 1: e2 ∧ e3 ∧ e1 is even
    assert j0 == E(3, L(1, 1), (1, 2, 3))
    # alpha = (1,0) is a generator of the only term
    assert j0_wedge_e_alpha_direct(j0, s.support, L(1, 0)) == 0


def test_j0_example_term_count(example):
    mu = mu_partition(example.support, example.polygon, example.partition)
    j0 = j0_element(example.support, example.polygon, mu)
    assert len(j0) == len(mu.mu1) * len(mu.mu2)
    assert levels_interior(j0, example.polygon)
    assert j0.wedge(element_m(example.support)) == 0
    assert j0_wedge_e_alpha_direct(j0, example.support, example.partition.vertex_p) == 0
    assert j0_wedge_e_alpha_lemma(example.support, example.polygon, example.partition, example.partition.vertex_p) == 0


def _all_checks(s):
    mu = mu_partition(s.support, s.polygon, s.partition)
    j0 = j0_element(s.support, s.polygon, mu)
    assert j0.wedge(element_m(s.support)) == 0
    for alpha in s.support.points:
        direct = j0_wedge_e_alpha_direct(j0, s.support, alpha)
        assert j0_wedge_e_alpha_lemma(s.support, s.polygon, s.partition, alpha) == direct
        d = delta_relation(s.support, s.polygon, s.partition, alpha, j0)
        assert d.ok, d


def test_example_all_alpha(example):
    _all_checks(example)


def test_square_refined_all_alpha(square):
    assert square.partition.refined is not None
    _all_checks(square)


def test_triangle_all_alpha(triangle):
    _all_checks(triangle)


def test_every_vertex_choice_on_example():
    S = example_support()
    for v in polygon_from_support(S).vertices:
        _all_checks(setup(S, ResultantOptions(v)))


def test_random_supports():
    rng = random.Random(77)
    for _ in range(15):
        _all_checks(setup(random_saturated_support(rng)))


def test_delta_element_levels(example):
    for alpha in example.support.points:
        d = delta_q_element(example.support, example.polygon, example.partition, alpha)
        assert all(lvl == 2 for (lvl, _p, g) in d.terms)
        assert levels_interior(d, example.polygon)


def test_e_generator_has_no_monomial(example):
    e = e_generator(example.support, L(1, 1))
    assert list(e.terms) == [(0, L(0, 0), (4,))]


def test_wrong_column_is_detected(example):
    """Perturbing Delta_Q(n_alpha) breaks the relation."""
    alpha = L(1, 1)
    mu = mu_partition(example.support, example.polygon, example.partition)
    j0 = j0_element(example.support, example.polygon, mu)
    d = delta_q_element(example.support, example.polygon, example.partition, alpha) + E(2, L(2, 2), (1, 2, 3))
    assert d.wedge(element_m(example.support)) != j0_wedge_e_alpha_direct(j0, example.support, alpha)
    assert verify_delta_relation(example.support, example.polygon, example.partition, alpha)
