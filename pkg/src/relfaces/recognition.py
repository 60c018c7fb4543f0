"""Pseudomanifold and homology-manifold recognition, stackedness, property (L)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .complex import (
    VOID,
    ComplexError,
    RelativeComplex,
    SimplicialComplex,
    g_vector,
    members,
    popcount,
)
from .homology import betti
from .linalg import F2, FieldSpec, as_field


# -- ridge structure ----------------------------------------------------------

def ridge_degrees(cx: SimplicialComplex) -> dict[int, int]:
    counts: dict[int, int] = {}
    for f in cx.facet_masks:
        rest = f
        while rest:
            low = rest & -rest
            rest ^= low
            r = f ^ low
            counts[r] = counts.get(r, 0) + 1
    return counts


def ridge_boundary(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by ridges lying in exactly one facet (void if there are none)."""
    if cx.is_void or not cx.is_pure:
        raise ComplexError("ridge boundary needs a pure non-void complex")
    return SimplicialComplex(r for r, c in ridge_degrees(cx).items() if c == 1)


@dataclass(frozen=True)
class PseudomanifoldStatus:
    status: str  # "closed", "with_boundary" or "no"
    boundary: SimplicialComplex
    reason: str = ""

    def __bool__(self):
        return self.status != "no"


def is_normal_pseudomanifold(cx: SimplicialComplex) -> PseudomanifoldStatus:
    if cx.is_void:
        raise ComplexError("void complex")
    if not cx.is_pure:
        return PseudomanifoldStatus("no", VOID, "not pure")
    d = cx.dim
    degrees = ridge_degrees(cx)
    bad = [r for r, c in degrees.items() if c > 2]
    if bad:
        return PseudomanifoldStatus("no", VOID, f"ridge {members(bad[0])} lies in {degrees[bad[0]]} facets")
    for k in range(0, d - 1):
        for g in cx.faces(k):
            if len(cx.link(g).components()) != 1:
                return PseudomanifoldStatus("no", VOID, f"link of {members(g)} is disconnected")
    boundary = SimplicialComplex(r for r, c in degrees.items() if c == 1)
    return PseudomanifoldStatus("with_boundary" if not boundary.is_void else "closed", boundary)


# -- homology manifolds -------------------------------------------------------

@dataclass
class HomologyClass:
    kind: str  # sphere, ball, closed_manifold, manifold_with_boundary, other
    boundary: SimplicialComplex
    field: FieldSpec
    reason: str = ""
    boundary_faces: frozenset = dc_field(default_factory=frozenset)

    @property
    def is_manifold(self) -> bool:
        return self.kind != "other"

    @property
    def has_boundary(self) -> bool:
        return self.kind in ("ball", "manifold_with_boundary")


def _profile(cx: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    return betti(cx, field).values


def _is_sphere_profile(b: tuple[int, ...], k: int) -> bool:
    return all(v == (1 if i - 1 == k else 0) for i, v in enumerate(b)) and len(b) >= k + 2


def _is_acyclic(b: tuple[int, ...]) -> bool:
    return not any(b)


@lru_cache(maxsize=8192)
def _link_kind(link: SimplicialComplex, k: int, field: FieldSpec) -> str:
    if link.is_void:
        return "other"
    b = _profile(link, field)
    if _is_sphere_profile(b, k):
        return "sphere"
    if _is_acyclic(b) and link.dim == k:
        return "ball"
    return "other"


def classify_homology(cx: SimplicialComplex, field=F2) -> HomologyClass:
    field = as_field(field)
    return _classify(cx, field)


@lru_cache(maxsize=1024)
def _classify(cx: SimplicialComplex, field: FieldSpec) -> HomologyClass:
    if cx.is_void:
        raise ComplexError("void complex")
    d = cx.dim
    if not cx.is_pure:
        return HomologyClass("other", VOID, field, "not pure")
    bfaces = set()
    for g in cx.all_faces():
        if g == 0:
            continue
        kind = _link_kind(_trim(cx.link(g)), d - popcount(g), field)
        if kind == "other":
            return HomologyClass("other", VOID, field, f"link of {members(g)} is neither a homology sphere nor ball")
        if kind == "ball":
            bfaces.add(g)
    profile = _profile(cx, field)
    if not bfaces:
        if _is_sphere_profile(profile, d):
            return HomologyClass("sphere", VOID, field)
        return HomologyClass("closed_manifold", VOID, field)
    bd = SimplicialComplex(bfaces)
    if set(bd.face_set) - {0} != bfaces:
        return HomologyClass("other", VOID, field, "ball-like faces are not closed under inclusion")
    ridge_bd = ridge_boundary(cx)
    if ridge_bd.face_set != bd.face_set:
        return HomologyClass("other", VOID, field, "link boundary disagrees with ridge boundary")
    if not bd.is_pure or bd.dim != d - 1:
        return HomologyClass("other", VOID, field, "boundary has the wrong dimension")
    inner = _classify(bd, field)
    if inner.kind not in ("sphere", "closed_manifold"):
        return HomologyClass("other", VOID, field, "boundary is not a closed homology manifold")
    frozen = frozenset(bfaces)
    if _is_acyclic(profile) and inner.kind == "sphere":
        return HomologyClass("ball", bd, field, boundary_faces=frozen)
    return HomologyClass("manifold_with_boundary", bd, field, boundary_faces=frozen)


def _trim(cx: SimplicialComplex) -> SimplicialComplex:
    return cx.with_ground(cx.support)


def is_homology_sphere(cx: SimplicialComplex, field=F2) -> bool:
    return classify_homology(cx, field).kind == "sphere"


def is_homology_ball(cx: SimplicialComplex, field=F2) -> bool:
    return classify_homology(cx, field).kind == "ball"


def is_homology_manifold(cx: SimplicialComplex, field=F2) -> bool:
    return classify_homology(cx, field).kind != "other"


def boundary(cx: SimplicialComplex, field=None) -> SimplicialComplex:
    """Boundary of a normal pseudomanifold; with ``field`` the link-homology boundary."""
    if field is None:
        st = is_normal_pseudomanifold(cx)
        if not st:
            raise ComplexError(f"not a normal pseudomanifold: {st.reason}")
        return st.boundary
    info = classify_homology(cx, field)
    if not info.is_manifold:
        raise ComplexError(f"not a homology manifold: {info.reason}")
    return info.boundary


def interior_faces(cx: SimplicialComplex) -> RelativeComplex:
    st = is_normal_pseudomanifold(cx)
    if not st:
        raise ComplexError(f"not a normal pseudomanifold: {st.reason}")
    return RelativeComplex(cx, st.boundary)


def r_stacked_with_boundary(cx: SimplicialComplex, r: int) -> bool:
    st = is_normal_pseudomanifold(cx)
    if not st:
        raise ComplexError(f"not a normal pseudomanifold: {st.reason}")
    if st.status == "closed":
        raise ComplexError("complex has no boundary")
    rel = RelativeComplex(cx, st.boundary)
    d = cx.dim
    return all(not rel.faces(i) for i in range(0, d - r))


# -- stackedness --------------------------------------------------------------

def is_stacked_sphere(cx: SimplicialComplex, field=F2) -> bool:
    """Stackedness of a homology sphere.

    Dimension >= 3 uses g_2 = 0.  In dimension 2 a degree-3 vertex is
    repeatedly removed and replaced by the triangle on its link (smallest
    vertex id first) until the tetrahedron boundary is reached.  Spheres of
    dimension <= 1 are boundaries of simplices or polygons and count as stacked.
    """
    field = as_field(field)
    if classify_homology(cx, field).kind != "sphere":
        raise ComplexError("input is not a homology sphere")
    d = cx.dim
    if d >= 3:
        return g_vector(cx)[2] == 0
    if d <= 1:
        return True
    return unstack_surface(cx) is not None


def unstack_surface(cx: SimplicialComplex) -> list[int] | None:
    """Removal order of degree-3 vertices reducing a 2-sphere to ∂Δ³, or None if stuck."""
    facets = set(cx.facet_masks)
    order = []
    while True:
        verts = 0
        for f in facets:
            verts |= f
        if popcount(verts) == 4 and len(facets) == 4:
            return order
        for v in members(verts):
            bit = 1 << v
            star = [f for f in facets if f & bit]
            if len(star) != 3:
                continue
            opposite = 0
            for f in star:
                opposite |= f
            opposite &= ~bit
            if popcount(opposite) != 3 or opposite in facets:
                continue
            facets.difference_update(star)
            facets.add(opposite)
            order.append(v)
            break
        else:
            return None


# -- property (L) -------------------------------------------------------------

@dataclass
class VertexDiagnostic:
    vertex: int
    location: str  # interior or boundary
    passes: bool
    detail: str
    lhs: Fraction | int | None = None
    rhs: Fraction | int | None = None


@dataclass
class PropertyLResult:
    holds: bool
    vertices: list[VertexDiagnostic]

    def __bool__(self):
        return self.holds

    @property
    def failures(self) -> list[VertexDiagnostic]:
        return [v for v in self.vertices if not v.passes]


def boundary_link_balance(ball: SimplicialComplex, d: int, field=F2) -> tuple[Fraction, int]:
    """Both sides of 2·C(d+2,2)·σ~_0(B, ∂B) = f_0(B, ∂B) for a homology ball B of dimension d-1."""
    from .sigma_mu import sigma_tilde

    bd = ridge_boundary(ball)
    rel = RelativeComplex(ball, bd)
    lhs = 2 * comb(d + 2, 2) * sigma_tilde(rel, 0, field)
    return lhs, len(rel.faces(0))


def property_L(cx: SimplicialComplex, field=F2) -> PropertyLResult:
    field = as_field(field)
    info = classify_homology(cx, field)
    if not info.has_boundary:
        raise ComplexError("property (L) is defined for homology manifolds with boundary")
    d = cx.dim
    if d < 3:
        raise ComplexError("property (L) needs dimension >= 3")
    bverts = info.boundary.support
    diags = []
    for v in cx.vertices:
        lk = _trim(cx.link(1 << v))
        if bverts >> v & 1:
            lhs, rhs = boundary_link_balance(lk, d, field)
            ok = lhs == rhs
            diags.append(VertexDiagnostic(v, "boundary", ok, "σ~_0 balance" + ("" if ok else " fails"), lhs, rhs))
        else:
            ok = is_stacked_sphere(lk, field)
            note = "stacked link" if ok else "link is not a stacked sphere"
            if d - 1 <= 1:
                note += " (low-dimensional convention)"
            diags.append(VertexDiagnostic(v, "interior", ok, note))
    return PropertyLResult(all(x.passes for x in diags), diags)
