from fractions import Fraction

import pytest

import oracles
from relfaces import EMPTY, F2, Q, ComplexError, RelativeComplex
from relfaces import constructions as C
from relfaces.recognition import ridge_boundary
from relfaces.sigma_mu import (
    alexander_identity_failures,
    averaged_ordered_morse,
    duality_checks,
    ground_set_invariance,
    morse_bounds,
    mu,
    ordered_morse,
    sigma_from_graded_betti,
    sigma_tilde,
)
from relfaces.stanley_reisner import graded_betti


def test_sigma_of_triangle_boundary(triangle_boundary):
    assert sigma_tilde(triangle_boundary, -1) == Fraction(1, 4)
    assert sigma_tilde(triangle_boundary, 1) == Fraction(1, 4)


def test_sigma_minus_one_vanishes_with_nonempty_sub(tetra):
    rel = RelativeComplex(tetra, C.boundary_of_simplex(3))
    assert sigma_tilde(rel, -1) == 0


@pytest.mark.parametrize("make", [C.octahedron, C.minimal_rp2, lambda: C.stacked_ball(3, 3, 1)])
@pytest.mark.parametrize("p", [0, 2])
def test_sigma_against_bruteforce(make, p):
    cx = make()
    field = Q if p == 0 else F2
    bd = ridge_boundary(cx)
    sub = bd.facets if not bd.is_void else None
    psi = RelativeComplex(cx, bd)
    for i in range(-1, cx.dim + 1):
        assert sigma_tilde(psi, i, field) == oracles.sigma_tilde(cx.facets, sub, cx.ground_set, i, p)


def test_mu_of_triangle_boundary(triangle_boundary):
    assert mu(triangle_boundary, 0) == 1
    assert mu(triangle_boundary, 1) == 1


def test_mu_of_vertex_outside_support():
    cx = C.boundary_of_simplex(2).with_ground(0b11110)
    assert mu(cx, 0) == mu(C.boundary_of_simplex(2), 0)


def test_morse_examples(triangle_boundary, tetra, four_cycle):
    strong, weak = morse_bounds(triangle_boundary, Q)
    assert strong.lhs[1] == 1 and strong.rhs[1] == 1
    assert strong.holds and weak.holds
    rel = RelativeComplex(tetra, C.boundary_of_simplex(3))
    strong, _ = morse_bounds(rel, Q)
    assert strong.lhs[0] == 0 and strong.rhs[0] == 0
    strong, weak = morse_bounds(four_cycle, Q)
    assert strong.lhs[1] == 1 and strong.holds and weak.holds


def test_ordered_morse(triangle_boundary):
    out = ordered_morse(triangle_boundary, (1, 2, 3), Q, 0)
    assert out["lhs"] == 1 and out["rhs"] == 1 and out["holds"]
    out = ordered_morse(triangle_boundary, (1, 2, 3), Q, 5)
    assert out["lhs"] == 0 and out["holds"]
    with pytest.raises(ComplexError):
        ordered_morse(triangle_boundary, (1, 2), Q)


@pytest.mark.parametrize("make", [C.octahedron, lambda: C.stacked_ball(2, 3, 0), lambda: C.boundary_of_simplex(2)])
def test_ordering_average_is_mu(make):
    cx = make()
    psi = RelativeComplex(cx, ridge_boundary(cx))
    for i in range(cx.dim + 2):
        assert averaged_ordered_morse(psi, Q, i) == mu(psi, i, Q)


def test_ghost_vertices(triangle_boundary):
    assert ground_set_invariance(triangle_boundary, None, [7, 9])
    assert ground_set_invariance(EMPTY, None, [3])
    with pytest.raises(ComplexError):
        ground_set_invariance(triangle_boundary, None, [2])


def test_dualities(tetra):
    reps = {r.check: r for r in duality_checks(tetra, Q)}
    assert reps["duality_sigma"].holds and reps["duality_mu"].holds
    s = C.boundary_of_simplex(4)
    reps = {r.check: r for r in duality_checks(C.remove_facet(s, s.facet_masks[0]), Q)}
    assert reps["duality_mu"].holds
    with pytest.raises(ComplexError):
        duality_checks(s, Q)


def test_alexander_identity_small_balls():
    for ball in (C.simplex(3), C.stacked_ball(3, 3, 2), C.cone(9, C.octahedron())):
        assert alexander_identity_failures(ball, Q) == []


def test_sigma_from_hochster_table(cyclic47_ball):
    psi = RelativeComplex(cyclic47_ball, ridge_boundary(cyclic47_ball))
    table = graded_betti(psi, Q)
    n = table.n
    for i in range(0, cyclic47_ball.dim + 2):
        assert sigma_from_graded_betti(table.entries, n, i) == sigma_tilde(psi, i - 1, Q)
