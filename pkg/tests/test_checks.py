import pytest

from relfaces import Q, ComplexError
from relfaces import constructions as C
from relfaces.checks import ALL_CHECK_IDS, run_check, run_corpus, unstack_ball
from relfaces.report import dumps


def test_main1_on_punctured_simplex_boundary():
    s = C.boundary_of_simplex(4)
    rep = run_check("main1", C.remove_facet(s, s.facet_masks[0]), field=Q)
    assert rep.lhs == 0 and rep.rhs == 0
    assert rep.holds and rep.is_equality
    assert rep.notes["property_L"] is True


def test_dehn_sommerville_on_solid_tetrahedron(tetra):
    rep = run_check("dehn_sommerville", tetra, field=Q)
    assert rep.holds
    assert rep.lhs == [0, 0, 0, 0, 1]
    assert rep.rhs == [0, 0, 0, 0, 1]


def test_lbt_closed_on_cyclic_polytope():
    rep = run_check("lbt_closed", C.cyclic_polytope_boundary(4, 7), field=Q)
    assert (rep.lhs, rep.rhs) == (3, 0)
    assert rep.holds and not rep.is_equality


def test_main2_gate_on_non_manifold():
    rep = run_check("main2", C.suspension(C.minimal_rp2()), field=Q)
    assert rep.skipped and "homology manifold" in rep.skipped_reason


def test_wlp_gate_records_skip_when_trials_zero():
    rep = run_check("prop52", C.octahedron(), field=Q, options={"wlp_trials": 0})
    assert rep.skipped and "WLP" in rep.skipped_reason


def test_wlp_witness_seed_is_recorded():
    rep = run_check("main2", C.stacked_sphere(3, 7, 1), field=Q)
    assert rep.holds
    assert all("wlp_seed" in w for w in rep.witnesses)


def test_unknown_id_and_options(tetra):
    with pytest.raises(ComplexError):
        run_check("lemma99", tetra)
    with pytest.raises(ComplexError):
        run_check("main1", tetra, options={"colour": 1})


def test_unstack_ball():
    ball = C.ball_with_stacked_sums(3, 3, 4, 5)
    core, removed = unstack_ball(ball)
    assert len(removed) == 4
    assert len(core.facet_masks) == 3


@pytest.mark.parametrize("cid", ALL_CHECK_IDS)
def test_every_check_runs_on_a_ball(cid, tetra):
    ball = C.ball_with_stacked_sums(3, 2, 2, 3)
    rep = run_check(cid, ball, field=Q)
    assert rep.holds is not False, rep.summary_line()


def test_corpus_example_suites():
    reps, summary = run_corpus("balls-small", ["duality_sigma", "main1", "prop61"], Q)
    assert summary["fail"] == 0 and summary["pass"] > 0
    reps, summary = run_corpus("spheres-small", ["lbt_closed", "lemma62", "prop52"], Q)
    assert summary["fail"] == 0 and summary["pass"] > 0
    reps, summary = run_corpus("empty", None, Q)
    assert reps == [] and summary["total"] == 0


def test_corpus_is_sorted_and_deterministic():
    a, _ = run_corpus("balls-small", ["main1", "h_and_g"], Q)
    b, _ = run_corpus("balls-small", ["h_and_g", "main1"], Q)
    assert dumps(a) == dumps(b)
    keys = [(r.check, r.input) for r in a]
    assert keys == sorted(keys)


def test_unknown_suite():
    with pytest.raises(ComplexError):
        run_corpus("nonexistent")
