from math import comb

import pytest

import oracles
from relfaces import F2, Q, ComplexError, RelativeComplex
from relfaces import constructions as C
from relfaces.recognition import ridge_boundary
from relfaces.stanley_reisner import (
    artinian_reduction,
    betti_sum_checks,
    graded_betti,
    h_double_prime,
    h_prime,
    hilbert_function,
    is_lsop,
    normalized_binomial_sum,
    random_forms,
    resolution_oracle,
    schenzel_check,
    wlp_test,
)


def test_hilbert_function(four_cycle, tetra):
    assert hilbert_function(four_cycle, 2) == 8
    rel = RelativeComplex(tetra, C.boundary_of_simplex(3))
    assert hilbert_function(rel, 4) == 1
    assert hilbert_function(rel, 0) == 0
    assert hilbert_function(four_cycle, 0) == 1


def test_graded_betti_small(four_cycle, tetra, triangle_boundary):
    assert graded_betti(four_cycle, Q).rows() == [(0, 0, 1), (1, 2, 2), (2, 4, 1)]
    assert graded_betti(tetra, Q).rows() == [(0, 0, 1)]
    rel = RelativeComplex(tetra, C.boundary_of_simplex(3))
    assert graded_betti(rel, Q).rows() == [(0, 4, 1)]
    assert resolution_oracle(triangle_boundary, Q).rows() == [(0, 0, 1), (1, 3, 1)]


@pytest.mark.parametrize("make", [C.octahedron, C.minimal_rp2, lambda: C.stacked_ball(3, 3, 4)])
@pytest.mark.parametrize("field", [Q, F2])
def test_hochster_matches_oracle_and_bruteforce(make, field):
    cx = make()
    bd = ridge_boundary(cx)
    psi = RelativeComplex(cx, bd)
    table = graded_betti(psi, field)
    assert table.agrees_with(resolution_oracle(psi, field))
    sub = bd.facets if not bd.is_void else None
    brute = oracles.hochster_free_table(cx.facets, sub, cx.ground_set, field.characteristic)
    assert {k: v for k, v in table.entries.items() if v} == brute


def test_oracle_truncation(four_cycle):
    t = resolution_oracle(four_cycle, Q, degree_bound=2)
    assert t.truncated
    assert t.rows() == [(0, 0, 1), (1, 2, 2)]
    full = resolution_oracle(four_cycle, Q)
    assert not full.truncated


def test_oracle_with_higher_exponents_agrees(four_cycle):
    assert resolution_oracle(four_cycle, Q, max_exponent=2).rows() == resolution_oracle(four_cycle, Q).rows()


def test_oracle_cap():
    with pytest.raises(ComplexError):
        resolution_oracle(C.cyclic_polytope_boundary(4, 9), Q)


def test_artinian_dims():
    assert artinian_reduction(C.octahedron()).dims == [1, 3, 3, 1]
    assert artinian_reduction(C.boundary_of_simplex(3)).dims == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        artinian_reduction(C.octahedron(), prime=6)


def test_lsop_detection():
    octa = C.octahedron()
    forms = random_forms(len(octa.vertices), 3, 101, 0)
    assert is_lsop(octa, forms, 101)
    zero = [[0] * len(octa.vertices) for _ in range(3)]
    assert not is_lsop(octa, zero, 101)


def test_h_prime_and_double_prime(tetra):
    assert h_prime(C.octahedron(), Q) == [1, 3, 3, 1]
    assert h_double_prime(C.octahedron(), Q) == [1, 3, 3, 1]
    rel = RelativeComplex(tetra, C.boundary_of_simplex(3))
    hpp = h_double_prime(rel, Q)
    assert hpp[0] == 0 and hpp[4] == 1
    rp2 = C.minimal_rp2()
    assert h_prime(rp2, F2) != h_double_prime(rp2, F2)


def test_schenzel():
    assert schenzel_check(C.octahedron()).holds
    s = C.boundary_of_simplex(4)
    assert schenzel_check(C.remove_facet(s, s.facet_masks[0])).holds
    rep = schenzel_check(C.minimal_rp2(), prime=2, retries=8)
    assert rep.holds is not False


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_wlp_simplex_boundaries(d):
    assert wlp_test(C.boundary_of_simplex(d)).passes


def test_wlp_cyclic_and_trials_zero():
    assert wlp_test(C.cyclic_polytope_boundary(4, 7)).passes
    assert wlp_test(C.octahedron(), trials=0).status == "inconclusive"
    with pytest.raises(ComplexError):
        wlp_test(C.minimal_rp2(), prime=2)


def test_betti_sum_checks_on_balls(tetra, cyclic47_ball):
    reps = {r.check: r for r in betti_sum_checks(tetra, Q)}
    assert reps["thm46"].holds and reps["prop43_euler"].holds
    reps = {r.check: r for r in betti_sum_checks(cyclic47_ball, Q)}
    assert reps["thm49"].holds
    # g_1(Δ,∂Δ) = 3 with n = 7, d = 4
    assert reps["thm49"].rhs == [3 * comb(2, i) for i in range(8)]


@pytest.mark.parametrize("n,d,r", [(10, 4, 2), (6, 3, 0), (12, 5, 6)])
def test_normalized_binomial_sum(n, d, r):
    lhs, rhs = normalized_binomial_sum(n, d, r)
    assert lhs == rhs
