"""Seedable generators for the triangulation families used by the checks."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .complex import (
    ComplexError,
    SimplicialComplex,
    mask_of,
    members,
)
from .linalg import Q


def simplex(k: int) -> SimplicialComplex:
    if k < 0:
        raise ComplexError("simplex dimension must be >= 0")
    return SimplicialComplex.from_facets([range(1, k + 2)])


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """All proper faces of the k-simplex on {1..k+1}; k = 0 gives {∅}."""
    if k < 0:
        raise ComplexError("simplex dimension must be >= 0")
    verts = range(1, k + 2)
    return SimplicialComplex.from_facets(combinations(verts, k), ground=verts)


def cone(apex: int, cx: SimplicialComplex) -> SimplicialComplex:
    bit = mask_of([apex])
    if cx.ground & bit:
        raise ComplexError(f"apex {apex} already in the ground set")
    if cx.is_void:
        raise ComplexError("cone over the void complex")
    return SimplicialComplex((f | bit for f in cx.facet_masks), cx.ground | bit)


def suspension(cx: SimplicialComplex, north: int | None = None, south: int | None = None) -> SimplicialComplex:
    top = max(cx.ground_set, default=0)
    north = top + 1 if north is None else north
    south = top + 2 if south is None else south
    a, b = mask_of([north]), mask_of([south])
    return SimplicialComplex([f | a for f in cx.facet_masks] + [f | b for f in cx.facet_masks], cx.ground | a | b)


def cap_boundary(cx: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """``cx ∪ (apex * ∂cx)``; closes up a pseudomanifold with boundary."""
    from .recognition import ridge_boundary

    bd = ridge_boundary(cx)
    if bd.is_void:
        raise ComplexError("complex has no boundary to cap")
    apex = max(cx.ground_set) + 1 if apex is None else apex
    capped = cone(apex, bd.with_ground(cx.ground))
    return SimplicialComplex(cx.facet_masks + capped.facet_masks, capped.ground)


def _as_mask(face) -> int:
    return face if isinstance(face, int) else mask_of(face)


def connected_sum(
    first: SimplicialComplex,
    first_facet,
    second: SimplicialComplex,
    second_facet,
    pairing: Sequence[tuple[int, int]] | Mapping[int, int] | None = None,
) -> SimplicialComplex:
    """Glue ``second`` onto ``first`` along the given facets and drop the glued facet.

    ``pairing`` maps vertices of ``first_facet`` to vertices of ``second_facet``;
    by default the sorted vertex lists are matched.  Vertices of ``second``
    off the glued facet are renamed to fresh ids above the ground set of
    ``first``, in ascending order.
    """
    f1, f2 = _as_mask(first_facet), _as_mask(second_facet)
    if first.is_void or second.is_void or not first.is_pure or not second.is_pure:
        raise ComplexError("connected sum needs pure non-void complexes")
    if first.dim != second.dim:
        raise ComplexError(f"dimension mismatch: {first.dim} vs {second.dim}")
    if f1 not in first.facet_masks:
        raise ComplexError(f"{members(f1)} is not a facet of the first complex")
    if f2 not in second.facet_masks:
        raise ComplexError(f"{members(f2)} is not a facet of the second complex")
    a, b = members(f1), members(f2)
    if pairing is None:
        pairs = dict(zip(a, b))
    else:
        pairs = dict(pairing.items() if isinstance(pairing, Mapping) else pairing)
    if sorted(pairs) != list(a) or sorted(pairs.values()) != list(b):
        raise ComplexError("pairing is not a bijection between the two facets")
    inverse = {w: v for v, w in pairs.items()}
    fresh = max(first.ground_set, default=0) + 1
    rename = {}
    for v in second.ground_set:
        if v in inverse:
            rename[v] = inverse[v]
        else:
            rename[v] = fresh
            fresh += 1

    def img(m):
        return mask_of(rename[v] for v in members(m))

    facets = [f for f in first.facet_masks if f != f1]
    facets += [img(f) for f in second.facet_masks if f != f2]
    return SimplicialComplex(facets, first.ground | img(second.ground))


def stellar_facet(cx: SimplicialComplex, facet, apex: int | None = None) -> SimplicialComplex:
    """Replace ``facet`` by the cone over its boundary; same as summing with a simplex boundary."""
    f = _as_mask(facet)
    if f not in cx.facet_masks:
        raise ComplexError(f"{members(f)} is not a facet")
    apex = max(cx.ground_set) + 1 if apex is None else apex
    bit = mask_of([apex])
    if cx.ground & bit:
        raise ComplexError(f"vertex {apex} already present")
    new = [g for g in cx.facet_masks if g != f]
    new += [(f & ~(1 << v)) | bit for v in members(f)]
    return SimplicialComplex(new, cx.ground | bit)


def stacked_sphere(d: int, n: int, seed: int = 0) -> SimplicialComplex:
    """Stacked d-sphere on n vertices: ∂Δ^{d+1} followed by n-d-2 seeded facet subdivisions."""
    if d < 0 or n < d + 2:
        raise ComplexError(f"stacked {d}-sphere needs at least {d + 2} vertices, got {n}")
    rng = random.Random(seed)
    cx = boundary_of_simplex(d + 1)
    for _ in range(n - d - 2):
        cx = stellar_facet(cx, rng.choice(cx.facet_masks))
    return cx


def stacked_ball(d: int, m: int, seed: int = 0) -> SimplicialComplex:
    """Tree of m d-simplices, each new one glued to a seeded-random free ridge."""
    if d < 0 or m < 1:
        raise ComplexError("stacked ball needs d >= 0 and at least one facet")
    rng = random.Random(seed)
    facets = [mask_of(range(1, d + 2))]
    ridge_count: dict[int, int] = {}
    for v in members(facets[0]):
        ridge_count[facets[0] & ~(1 << v)] = 1
    nxt = d + 2
    for _ in range(m - 1):
        free = sorted(r for r, c in ridge_count.items() if c == 1)
        ridge = rng.choice(free)
        new = ridge | (1 << nxt)
        nxt += 1
        facets.append(new)
        for v in members(new):
            r = new & ~(1 << v)
            ridge_count[r] = ridge_count.get(r, 0) + 1
    return SimplicialComplex(facets)


def linear_stacked_sphere(d: int, n: int) -> SimplicialComplex:
    """Boundary of the chain of (d+1)-simplices {i, ..., i+d+1}, i = 1..n-d-1."""
    if n < d + 2:
        raise ComplexError("too few vertices")
    counts: dict[int, int] = {}
    for i in range(1, n - d):
        s = mask_of(range(i, i + d + 2))
        for v in members(s):
            r = s & ~(1 << v)
            counts[r] = counts.get(r, 0) + 1
    return SimplicialComplex(r for r, c in counts.items() if c == 1)


def handle_addition(d: int, n: int, orientable: bool = True) -> SimplicialComplex:
    """Identify the end facets of a linear stacked d-sphere to add a handle.

    The result has n - d - 1 vertices and triangulates an S^{d-1}-bundle over
    the circle, twisted when ``orientable`` is False.  Both facet pairings are
    tried and the one whose orientability over Q matches is returned.
    """
    from .homology import orientable as is_orientable
    from .recognition import classify_homology

    sphere = linear_stacked_sphere(d, n)
    start = list(range(1, d + 2))
    end = list(range(n - d, n + 1))
    f1, f2 = mask_of(start), mask_of(end)
    if f1 not in sphere.facet_masks or f2 not in sphere.facet_masks or f1 & f2:
        raise ComplexError("end facets missing or overlapping; n too small")
    for target in (end, end[:-2] + [end[-1], end[-2]]):
        rename = {w: v for v, w in zip(start, target)}
        facets = [mask_of(rename.get(v, v) for v in members(f)) for f in sphere.facet_masks if f not in (f1, f2)]
        out = SimplicialComplex(facets)
        if len(out.facet_masks) != len(facets):
            raise ComplexError("identification collapsed faces; n too small")
        if classify_homology(out, Q).kind != "closed_manifold":
            continue
        if is_orientable(out, Q) == orientable:
            return _compact_labels(out)
    raise ComplexError("no pairing gives a manifold with the requested orientability; n too small")


def _compact_labels(cx: SimplicialComplex) -> SimplicialComplex:
    mapping = {v: i for i, v in enumerate(cx.ground_set, 1)}
    return SimplicialComplex((mask_of(mapping[v] for v in members(f)) for f in cx.facet_masks),
                             mask_of(mapping.values()))


def cyclic_polytope_boundary(d: int, n: int) -> SimplicialComplex:
    """Facets of the cyclic d-polytope on n vertices by Gale's evenness condition."""
    if d < 2 or n < d + 1:
        raise ComplexError(f"need d >= 2 and n >= d+1, got d={d}, n={n}")
    facets = []
    for s in combinations(range(1, n + 1), d):
        inside = set(s)
        outside = [v for v in range(1, n + 1) if v not in inside]
        ok = True
        for i, j in zip(outside, outside[1:]):
            if sum(1 for v in s if i < v < j) % 2:
                ok = False
                break
        if ok:
            facets.append(s)
    return SimplicialComplex.from_facets(facets)


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope; antipodal pairs are {2i-1, 2i}."""
    if d < 1:
        raise ComplexError("cross-polytope dimension must be >= 1")
    facets = []
    for choice in range(1 << d):
        facets.append([2 * i + 1 + ((choice >> i) & 1) for i in range(d)])
    return SimplicialComplex.from_facets(facets)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def minimal_rp2() -> SimplicialComplex:
    """The 6-vertex real projective plane."""
    return SimplicialComplex.from_facets([
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ])


def remove_facet(cx: SimplicialComplex, facet) -> SimplicialComplex:
    f = _as_mask(facet)
    if f not in cx.facet_masks:
        raise ComplexError(f"{members(f)} is not a facet")
    rest = [g for g in cx.facet_masks if g != f]
    rest += [f & ~(1 << v) for v in members(f)]
    return SimplicialComplex(rest, cx.ground)


def delete_vertex(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """The deletion Δ ∖ v with v removed from the ground set."""
    return cx.delete_vertex(v)


def balls_without_interior_vertices(d: int, m: int, seed: int = 0) -> SimplicialComplex:
    """A stacked ball: no interior faces below dimension d-1."""
    return stacked_ball(d, m, seed)


def ball_with_stacked_sums(d: int, base_facets: int, sums: int, seed: int = 0) -> SimplicialComplex:
    """Stacked d-ball followed by ``sums`` seeded connected sums with ∂Δ^{d+1}."""
    rng = random.Random(seed)
    cx = stacked_ball(d, base_facets, rng.getrandbits(64))
    for _ in range(sums):
        cx = stellar_facet(cx, rng.choice(cx.facet_masks))
    return cx


def relabel_random(cx: SimplicialComplex, seed: int) -> SimplicialComplex:
    rng = random.Random(seed)
    verts = list(cx.ground_set)
    perm = verts[:]
    rng.shuffle(perm)
    mapping = dict(zip(verts, perm))
    return SimplicialComplex((mask_of(mapping[v] for v in members(f)) for f in cx.facet_masks), cx.ground)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.ground & b.ground:
        raise ComplexError("join needs disjoint ground sets")
    return SimplicialComplex((x | y for x in a.facet_masks for y in b.facet_masks), a.ground | b.ground)


def from_family(name: str, params: Iterable[int], seed: int = 0) -> SimplicialComplex:
    """Dispatch used by the command line ``gen`` subcommand."""
    p = list(params)
    key = name.replace("_", "-").lower()
    table = {
        "simplex": lambda: simplex(*p),
        "boundary-of-simplex": lambda: boundary_of_simplex(*p),
        "simplex-boundary": lambda: boundary_of_simplex(*p),
        "stacked-sphere": lambda: stacked_sphere(p[0], p[1], seed),
        "stacked-ball": lambda: stacked_ball(p[0], p[1], seed),
        "cyclic": lambda: cyclic_polytope_boundary(*p),
        "cyclic-polytope-boundary": lambda: cyclic_polytope_boundary(*p),
        "cross-polytope": lambda: cross_polytope_boundary(*p),
        "octahedron": octahedron,
        "rp2": minimal_rp2,
        "linear-stacked-sphere": lambda: linear_stacked_sphere(*p),
        "handle": lambda: handle_addition(p[0], p[1], True),
        "twisted-handle": lambda: handle_addition(p[0], p[1], False),
        "ball-with-sums": lambda: ball_with_stacked_sums(p[0], p[1], p[2], seed),
    }
    if key not in table:
        raise ComplexError(f"unknown family {name!r}; known: {', '.join(sorted(table))}")
    try:
        return table[key]()
    except TypeError as exc:
        raise ComplexError(f"bad parameters for {name}: {p}") from exc
