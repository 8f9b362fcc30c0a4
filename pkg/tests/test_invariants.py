"""Collapsibility numbers, certificates, minimal exclusion sequences and the
M_k hierarchy."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collapsekit import (
    Budget,
    BudgetExceededError,
    CollapseCertificate,
    FacetOrdering,
    NotAFaceError,
    SimplicialComplex,
    as_face,
    boundary,
    canonical_ordering,
    claim_inequality_check,
    collapsibility_number,
    collapsibility_number_with_certificate,
    d_of_ordering,
    is_d_collapsible,
    m0,
    mes,
    mk,
    mk_chain,
    mk_prime,
    simplex_on,
    tancer_inequality_check,
)

THREE_CYCLE = SimplicialComplex([(1, 2), (2, 3), (1, 3)])

vertex = st.integers(min_value=0, max_value=6)
raw_facets = st.lists(
    st.lists(vertex, min_size=1, max_size=3), min_size=1, max_size=6
)
complexes = raw_facets.map(SimplicialComplex)


# -- d-collapsibility ------------------------------------------------------

def test_simplex_is_zero_collapsible():
    ok, cert = is_d_collapsible(simplex_on((1, 2, 3)), 0)
    assert ok
    assert cert.replay(simplex_on((1, 2, 3)))


def test_empty_complex_is_zero_collapsible():
    ok, cert = is_d_collapsible(SimplicialComplex(), 0)
    assert ok and cert.steps == ()


def test_three_cycle_needs_two():
    assert not is_d_collapsible(THREE_CYCLE, 1)[0]
    ok, cert = is_d_collapsible(THREE_CYCLE, 2)
    assert ok and cert.replay(THREE_CYCLE)
    assert collapsibility_number(THREE_CYCLE) == 2


def test_boundary_of_tetrahedron_needs_three():
    bd = boundary((1, 2, 3, 4))
    assert collapsibility_number(bd) == 3


def test_path_is_one_collapsible():
    path = SimplicialComplex([(1, 2), (2, 3), (3, 4)])
    assert collapsibility_number(path) == 1


@given(complexes)
@settings(max_examples=40)
def test_collapsibility_is_monotone_in_d(x):
    c = collapsibility_number(x)
    assert not is_d_collapsible(x, max(c - 1, 0))[0] or c == 0
    assert is_d_collapsible(x, c)[0]
    assert is_d_collapsible(x, c + 1)[0]


@given(complexes)
@settings(max_examples=40)
def test_certificate_replays_and_respects_d(x):
    c, cert = collapsibility_number_with_certificate(x)
    assert cert.claimed_d == c
    assert cert.replay(x)
    assert all(p.free_face.bit_count() <= c for p in cert.steps)


def test_certificate_rejects_wrong_source():
    _, cert = collapsibility_number_with_certificate(THREE_CYCLE)
    assert not cert.replay(SimplicialComplex([(1, 2), (2, 3)]))


def test_tampered_certificate_fails():
    c, cert = collapsibility_number_with_certificate(THREE_CYCLE)
    truncated = CollapseCertificate(cert.steps[:-1], c)
    assert not truncated.replay(THREE_CYCLE)
    lowered = CollapseCertificate(cert.steps, 0)
    assert not lowered.replay(THREE_CYCLE)


def test_budget_raises_instead_of_lying():
    with pytest.raises(BudgetExceededError):
        is_d_collapsible(THREE_CYCLE, 2, Budget(1))


# -- facet orderings and mes ----------------------------------------------

def test_facet_ordering_validates_permutation():
    with pytest.raises(ValueError):
        FacetOrdering(THREE_CYCLE, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        FacetOrdering(THREE_CYCLE, [(1, 2), (2, 3), (2, 3)])


def test_mes_hand_worked_example():
    # ordering {1,2} < {2,3} < {1,3}: the face {1,3} first fits in the third
    # facet; step 1 excludes vertex 3, step 2 excludes vertex 1
    order = FacetOrdering(THREE_CYCLE, [(1, 2), (2, 3), (1, 3)])
    assert mes((1, 3), order) == (3, 1)
    assert mes((1, 2), order) == ()
    assert mes((3,), order) == (3,)
    assert d_of_ordering(THREE_CYCLE, order) == 2


def test_mes_of_non_face_raises():
    order = canonical_ordering(THREE_CYCLE)
    with pytest.raises(NotAFaceError):
        mes((1, 2, 3), order)


def test_mes_reuses_previously_excluded_vertices():
    x = SimplicialComplex([(1, 4), (1, 3), (2, 3)])
    order = FacetOrdering(x, [(1, 4), (1, 3), (2, 3)])
    # {2,3} misses facet 1 at both 2 and 3 (least is 2); facet 2 misses
    # vertex 2 again, and a previously used vertex is preferred
    assert mes((2, 3), order) == (2, 2)
    assert d_of_ordering(x, order) == 1


@given(complexes, st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_d_of_ordering_dominates_m0(x, rng):
    perm = list(x.facets)
    rng.shuffle(perm)
    order = FacetOrdering(x, perm)
    assert m0(x) <= d_of_ordering(x, order)


# -- M_k hierarchy ---------------------------------------------------------

def test_m0_base_cases():
    assert m0(simplex_on((1, 2, 3))) == 0
    assert m0(SimplicialComplex()) == 0
    # a cone can still have open vertices away from the apex: here vertex 1
    # is open (its link misses the facet {0,2,3}), so the recursion pays 1
    cone = SimplicialComplex([(0, 1, 2), (0, 2, 3)])
    assert m0(cone) == 1


def test_m0_of_three_cycle():
    assert m0(THREE_CYCLE) == 2


def test_mk_chain_is_monotone_decreasing():
    chain = mk_chain(THREE_CYCLE, 2)
    assert chain == sorted(chain, reverse=True)
    assert chain[0] == m0(THREE_CYCLE)


def test_mk_matches_engine_pieces():
    assert mk(THREE_CYCLE, 1) == min(mk_prime(THREE_CYCLE, 1), m0(THREE_CYCLE))


def test_m1_prime_can_overshoot_collapsibility():
    """Whenever open edges exist M'_1 pays at least 2, so it can exceed both
    C and M_1: two triangles glued along an edge collapse through free edges
    (C = 1) and M_1 = 1, yet M'_1 = 2."""
    x = SimplicialComplex([(1, 2, 3), (2, 3, 4)])
    assert collapsibility_number(x) == 1
    assert mk(x, 1) == 1
    assert mk_prime(x, 1) == 2


def test_mk_rejects_negative_k():
    with pytest.raises(ValueError):
        mk(THREE_CYCLE, -1)
    with pytest.raises(ValueError):
        mk_prime(THREE_CYCLE, -1)


@given(complexes)
@settings(max_examples=25, deadline=None)
def test_chain_of_inequalities(x):
    c = collapsibility_number(x)
    chain = mk_chain(x, 2)
    assert c <= chain[2] <= chain[1] <= chain[0]
    assert chain[0] <= d_of_ordering(x, canonical_ordering(x))


@given(complexes, st.data())
@settings(max_examples=25, deadline=None)
def test_tancer_and_claim_inequalities(x, data):
    v = data.draw(st.sampled_from(x.vertices))
    assert tancer_inequality_check(x, [v])
    sigma = data.draw(st.sampled_from(sorted(x.all_faces(include_empty=False))))
    assert claim_inequality_check(x, sigma)


def test_claim_check_rejects_non_face():
    with pytest.raises(NotAFaceError):
        claim_inequality_check(THREE_CYCLE, (1, 2, 3))
    with pytest.raises(ValueError):
        tancer_inequality_check(THREE_CYCLE, (1, 2))
