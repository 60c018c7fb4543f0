"""Randomized invariants over small complexes."""

from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from relfaces import F2, F3, Q, RelativeComplex, SimplicialComplex, betti, euler_characteristic
from relfaces import constructions as C
from relfaces.checks import run_check
from relfaces.complex import f_from_h, h_from_f, mask_of
from relfaces.homology import long_exact_sequence_defect
from relfaces.sigma_mu import alexander_identity_failures, averaged_ordered_morse, ground_set_invariance, mu
from relfaces.stanley_reisner import graded_betti, resolution_oracle

facet = st.sets(st.integers(1, 7), min_size=1, max_size=4)
complexes = st.lists(facet, min_size=1, max_size=6).map(lambda fs: SimplicialComplex(mask_of(f) for f in fs))


@st.composite
def pairs(draw):
    cx = draw(complexes)
    keep = draw(st.integers(0, 2 ** 8 - 1))
    sub_facets = [f for i, f in enumerate(cx.all_faces()) if f and keep >> (i % 8) & 1]
    sub = SimplicialComplex(sub_facets) if sub_facets else None
    return cx, sub


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_f_h_roundtrip(f):
    assert f_from_h(h_from_f(f)) == f
    assert h_from_f(f_from_h(f)) == f


@given(complexes)
def test_h_vector_matches_polynomial_expansion(cx):
    f = cx.f_vector()
    assert RelativeComplex(cx).h_vector() == oracles.h_vector(f)


@given(complexes, st.sampled_from([0, 2, 3]))
def test_betti_matches_dense_oracle(cx, p):
    field = {0: Q, 2: F2, 3: F3}[p]
    assert list(betti(cx, field)) == oracles.reduced_betti(oracles.faces_of(cx.facets), set(), cx.dim, p)


@given(pairs(), st.sampled_from([Q, F2, F3]))
def test_long_exact_sequence(pair, field):
    cx, sub = pair
    assume(sub is not None)
    assert long_exact_sequence_defect(cx, sub, field) == 0


@given(pairs())
def test_reduced_euler_characteristic_is_field_independent(pair):
    cx, sub = pair
    psi = RelativeComplex(cx, sub)
    values = {euler_characteristic(psi, f) for f in (Q, F2, F3)}
    assert len(values) == 1


@given(pairs(), st.sets(st.integers(8, 11), min_size=1, max_size=2))
def test_ghost_vertices_do_not_change_sigma(pair, ghosts):
    cx, sub = pair
    assert ground_set_invariance(cx, sub, sorted(ghosts), Q)


@given(st.lists(st.sets(st.integers(1, 6), min_size=1, max_size=3), min_size=1, max_size=5))
def test_ordering_average_equals_mu(facets):
    cx = SimplicialComplex(mask_of(f) for f in facets)
    for i in range(cx.dim + 2):
        assert averaged_ordered_morse(cx, Q, i) == mu(cx, i, Q)


@given(st.lists(st.sets(st.integers(1, 6), min_size=1, max_size=3), min_size=1, max_size=5), st.sampled_from([Q, F2]))
def test_hochster_agrees_with_resolution(facets, field):
    cx = SimplicialComplex(mask_of(f) for f in facets)
    assert graded_betti(cx, field).agrees_with(resolution_oracle(cx, field))


@given(st.integers(2, 4), st.integers(1, 5), st.integers(0, 3), st.integers(0, 10 ** 6))
def test_alexander_identity_on_random_balls(d, base, sums, seed):
    ball = C.ball_with_stacked_sums(d, base, sums, seed)
    assume(len(ball.vertices) <= 9)
    assert alexander_identity_failures(ball, Q) == []


@given(st.integers(3, 4), st.integers(0, 4), st.integers(0, 10 ** 6))
def test_link_sum_identities_on_stacked_spheres(d, extra, seed):
    s = C.stacked_sphere(d, d + 2 + extra, seed)
    ball = C.remove_facet(s, s.facet_masks[0])
    for cx in (s, ball):
        assert run_check("linksum", cx).holds
        assert run_check("lemma54", cx).holds
