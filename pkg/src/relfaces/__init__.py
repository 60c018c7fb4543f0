"""Face numbers, relative homology, σ/μ-numbers and Stanley-Reisner invariants of simplicial complexes."""

from .complex import (
    EMPTY,
    VOID,
    ComplexError,
    RelativeComplex,
    SimplicialComplex,
    build_complex,
    f_vector,
    g_vector,
    h_vector,
    missing_faces,
    parse_complex,
    read_complex,
    relative,
    write_complex,
)
from .homology import betti, euler_characteristic, orientable
from .linalg import DEFAULT_PRIME, F2, F3, Q, FieldSpec
from .recognition import classify_homology, is_normal_pseudomanifold, property_L
from .sigma_mu import mu, sigma_tilde
from .stanley_reisner import graded_betti, resolution_oracle, wlp_test

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "VOID",
    "ComplexError",
    "RelativeComplex",
    "SimplicialComplex",
    "build_complex",
    "f_vector",
    "g_vector",
    "h_vector",
    "missing_faces",
    "parse_complex",
    "read_complex",
    "relative",
    "write_complex",
    "betti",
    "euler_characteristic",
    "orientable",
    "DEFAULT_PRIME",
    "F2",
    "F3",
    "Q",
    "FieldSpec",
    "classify_homology",
    "is_normal_pseudomanifold",
    "property_L",
    "mu",
    "sigma_tilde",
    "graded_betti",
    "resolution_oracle",
    "wlp_test",
    "__version__",
]
