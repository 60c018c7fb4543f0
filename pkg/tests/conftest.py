import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from relfaces import SimplicialComplex, build_complex  # noqa: E402
from relfaces import constructions as C  # noqa: E402

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def four_cycle() -> SimplicialComplex:
    return build_complex([(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def triangle_boundary() -> SimplicialComplex:
    return C.boundary_of_simplex(2)


@pytest.fixture
def tetra() -> SimplicialComplex:
    return C.simplex(3)


@pytest.fixture
def cyclic47_ball() -> SimplicialComplex:
    s = C.cyclic_polytope_boundary(4, 7)
    return C.remove_facet(s, s.facet_masks[0])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, (ok, detail) in mod.RESULTS.items():
        terminalreporter.write_line(f"{key:<4} {'PASS' if ok else 'FAIL'}  {detail}")
