"""Simplicial and relative simplicial complexes.

Faces are stored as integer bit masks: vertex ``v`` is bit ``v``.  Python
integers are unbounded, so the same representation covers ground sets of
any size; ids up to 63 stay within one machine word.

Only facets are stored.  Faces are produced by downward closure on demand
and memoized per cardinality.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator


class ComplexError(ValueError):
    """Malformed complex, pair, or invalid query."""


# -- vertex sets --------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        v = int(v)
        if v <= 0:
            raise ComplexError(f"vertex ids must be positive, got {v}")
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members, sorted by (size, value) for canonical order."""
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (popcount(m), members(m))))


# -- complexes ----------------------------------------------------------------

class SimplicialComplex:
    """A simplicial complex given by its facets over an explicit ground set.

    The empty facet list is the void complex (no faces at all); the facet
    list ``[()]`` is the complex ``{∅}``.
    """

    __slots__ = ("ground", "facet_masks", "__dict__")

    def __init__(self, facet_masks: Iterable[int], ground: int | None = None):
        facets = _maximal(facet_masks)
        support = 0
        for f in facets:
            support |= f
        if ground is None:
            ground = support
        elif support & ~ground:
            missing = members(support & ~ground)
            raise ComplexError(f"ground set is missing vertices {missing}")
        self.ground = ground
        self.facet_masks = facets

    # construction helpers
    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], ground: Iterable[int] | None = None) -> "SimplicialComplex":
        masks = [mask_of(f) for f in facets]
        return cls(masks, None if ground is None else mask_of(ground))

    # identity
    @cached_property
    def key(self) -> tuple:
        return (self.ground, self.facet_masks)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        fs = " ".join("".join(map(str, members(f))) if max(members(f) or (0,)) < 10
                      else "{" + ",".join(map(str, members(f))) + "}"
                      for f in self.facet_masks[:8])
        more = "" if len(self.facet_masks) <= 8 else f" …(+{len(self.facet_masks) - 8})"
        return f"SimplicialComplex([{fs}{more}], n={popcount(self.ground)})"

    # basic data
    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return [members(f) for f in self.facet_masks]

    @cached_property
    def support(self) -> int:
        m = 0
        for f in self.facet_masks:
            m |= f
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return members(self.support)

    @property
    def ground_set(self) -> tuple[int, ...]:
        return members(self.ground)

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ComplexError("the void complex has no dimension")
        return popcount(self.facet_masks[-1]) - 1

    @property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facet_masks}) <= 1

    @cached_property
    def _faces_by_size(self) -> dict[int, tuple[int, ...]]:
        seen: set[int] = set()
        for f in self.facet_masks:
            if f in seen:
                continue
            for s in submasks(f):
                seen.add(s)
        by: dict[int, list[int]] = {}
        for s in seen:
            by.setdefault(popcount(s), []).append(s)
        return {k: tuple(sorted(v)) for k, v in by.items()}

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(m for fs in self._faces_by_size.values() for m in fs)

    def faces(self, k: int) -> tuple[int, ...]:
        """Masks of all ``k``-dimensional faces (``k = -1`` gives the empty face)."""
        return self._faces_by_size.get(k + 1, ())

    def all_faces(self) -> Iterator[int]:
        for size in sorted(self._faces_by_size):
            yield from self._faces_by_size[size]

    def __contains__(self, face) -> bool:
        if not isinstance(face, int):
            face = mask_of(face)
        return face in self.face_set

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, ..., f_{dim}]``."""
        return RelativeComplex(self).f_vector()

    # local structure
    def link(self, face) -> "SimplicialComplex":
        f = face if isinstance(face, int) else mask_of(face)
        if f not in self.face_set:
            return SimplicialComplex((), self.ground & ~f)
        return SimplicialComplex((g & ~f for g in self.facet_masks if g & f == f), self.ground & ~f)

    def star(self, face) -> "SimplicialComplex":
        f = face if isinstance(face, int) else mask_of(face)
        if f not in self.face_set:
            return SimplicialComplex((), self.ground)
        return SimplicialComplex((g for g in self.facet_masks if g & f == f), self.ground)

    def deletion(self, face) -> "SimplicialComplex":
        """Faces not containing ``face``; the ground set is kept."""
        f = face if isinstance(face, int) else mask_of(face)
        out = []
        for g in self.facet_masks:
            if g & f != f:
                out.append(g)
            else:
                out.extend(g & ~(1 << v) for v in members(f))
        return SimplicialComplex(out, self.ground)

    def delete_vertex(self, v: int) -> "SimplicialComplex":
        """Remove ``v`` and every face through it; ``v`` leaves the ground set."""
        bit = 1 << v
        return SimplicialComplex((g & ~bit for g in self.facet_masks), self.ground & ~bit)

    def induced(self, w) -> "SimplicialComplex":
        w = w if isinstance(w, int) else mask_of(w)
        if self.is_void:
            return SimplicialComplex((), w)
        return SimplicialComplex((g & w for g in self.facet_masks), w)

    def with_ground(self, ground) -> "SimplicialComplex":
        ground = ground if isinstance(ground, int) else mask_of(ground)
        return SimplicialComplex(self.facet_masks, ground)

    def skeleton_edges(self) -> tuple[int, ...]:
        return self.faces(1)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.is_void or all(f in other.face_set for f in self.facet_masks)

    def components(self) -> list[int]:
        """Vertex masks of the connected components of the support."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.faces(1):
            a, b = members(e)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, int] = {}
        for v in self.vertices:
            r = find(v)
            groups[r] = groups.get(r, 0) | (1 << v)
        return sorted(groups.values(), key=lambda m: members(m))


def build_complex(facet_list: Iterable[Iterable[int]], ground_set: Iterable[int] | None = None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facet_list, ground_set)


VOID = SimplicialComplex(())
EMPTY = SimplicialComplex((0,))  # the complex {∅}


# -- relative complexes -------------------------------------------------------

class RelativeComplex:
    """The pair ``(total, sub)``; its faces are the faces of ``total`` not in ``sub``."""

    __slots__ = ("total", "sub", "__dict__")

    def __init__(self, total: SimplicialComplex, sub: SimplicialComplex | None = None):
        self.total = total
        self.sub = VOID if sub is None else sub

    @property
    def key(self) -> tuple:
        return (self.total.key, self.sub.key)

    def __eq__(self, other):
        return isinstance(other, RelativeComplex) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"RelativeComplex({self.total!r}, {self.sub!r})"

    @property
    def ground(self) -> int:
        return self.total.ground

    def faces(self, k: int) -> tuple[int, ...]:
        sub = self.sub.face_set
        return tuple(f for f in self.total.faces(k) if f not in sub)

    @cached_property
    def _top(self) -> int:
        for k in range(self.total.dim if not self.total.is_void else -2, -2, -1):
            if self.faces(k):
                return k
        return -2

    @property
    def is_empty(self) -> bool:
        return self._top == -2

    @property
    def dim(self) -> int:
        if self.total.is_void:
            raise ComplexError("the void complex has no dimension")
        if self.is_empty:
            raise ComplexError("relative complex has no faces")
        return self._top

    def f_vector(self, length: int | None = None) -> list[int]:
        """``[f_{-1}, ..., f_{d-1}]``; ``length`` pads or fixes ``d``."""
        if self.total.is_void:
            raise ComplexError("f-vector of the void complex is undefined")
        if length is None:
            length = self.dim + 2
        return [len(self.faces(k)) for k in range(-1, length - 1)]

    def h_vector(self, d: int | None = None) -> list[int]:
        return h_from_f(self.f_vector(None if d is None else d + 1))

    def g_vector(self, d: int | None = None) -> list[int]:
        return g_from_h(self.h_vector(d))

    def induced(self, w: int) -> "RelativeComplex":
        return RelativeComplex(self.total.induced(w), self.sub.induced(w))

    def link(self, face) -> "RelativeComplex":
        return RelativeComplex(self.total.link(face), self.sub.link(face))


def relative(total: SimplicialComplex, sub: SimplicialComplex | None = None) -> RelativeComplex:
    """Validated pair; raises with a witness face if ``sub`` is not a subcomplex."""
    if sub is None or sub.is_void:
        return RelativeComplex(total)
    for f in sub.facet_masks:
        if f not in total.face_set:
            raise ComplexError(f"subcomplex face {members(f)} is not a face of the total complex")
    if sub.ground & ~total.ground:
        raise ComplexError("subcomplex ground set exceeds the total ground set")
    return RelativeComplex(total, sub)


def as_relative(obj) -> RelativeComplex:
    if isinstance(obj, RelativeComplex):
        return obj
    return RelativeComplex(obj)


# -- f/h/g --------------------------------------------------------------------

def h_from_f(f: list[int]) -> list[int]:
    """``f = [f_{-1}, ..., f_{d-1}]`` to ``h = [h_0, ..., h_d]``."""
    d = len(f) - 1
    return [sum((-1) ** (j - i) * comb(d - i, d - j) * f[i] for i in range(j + 1)) for j in range(d + 1)]


def f_from_h(h: list[int]) -> list[int]:
    """Inverse of :func:`h_from_f`: ``f_{k-1} = sum_j C(d-j, k-j) h_j``."""
    d = len(h) - 1
    return [sum(comb(d - j, k - j) * h[j] for j in range(k + 1)) for k in range(d + 1)]


def g_from_h(h: list[int]) -> list[int]:
    return [h[0]] + [h[j] - h[j - 1] for j in range(1, len(h))]


def f_vector(psi) -> list[int]:
    return as_relative(psi).f_vector()


def h_vector(psi, d: int | None = None) -> list[int]:
    return as_relative(psi).h_vector(d)


def g_vector(psi, d: int | None = None) -> list[int]:
    return as_relative(psi).g_vector(d)


def entry(vec: list[int], i: int) -> int:
    """``vec[i]`` with zero outside the stored range."""
    return vec[i] if 0 <= i < len(vec) else 0


# -- misc operations ----------------------------------------------------------

def link(cx: SimplicialComplex, face) -> SimplicialComplex:
    return cx.link(face)


def star(cx: SimplicialComplex, face) -> SimplicialComplex:
    return cx.star(face)


def delete_vertex(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    return cx.delete_vertex(v)


def induced(cx: SimplicialComplex, w) -> SimplicialComplex:
    return cx.induced(w)


def missing_faces(cx: SimplicialComplex, k: int) -> list[tuple[int, ...]]:
    """Missing ``k``-faces: ``(k+1)``-sets that are non-faces with all proper subsets faces."""
    if cx.is_void:
        raise ComplexError("missing faces of the void complex are undefined")
    out = []
    if k < 0:
        return out
    faces = cx.face_set
    if k == 0:
        return [(v,) for v in cx.ground_set if (1 << v) not in faces]
    for ridge_combo in combinations(cx.vertices, k + 1):
        m = mask_of(ridge_combo)
        if m in faces:
            continue
        if all((m & ~(1 << v)) in faces for v in ridge_combo):
            out.append(ridge_combo)
    return out


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.ground & b.ground:
        raise ComplexError("ground sets overlap")
    return SimplicialComplex(a.facet_masks + b.facet_masks, a.ground | b.ground)


def relabel(cx: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    def img(m):
        return mask_of(mapping.get(v, v) for v in members(m))
    return SimplicialComplex((img(f) for f in cx.facet_masks), img(cx.ground))


# -- text format --------------------------------------------------------------

def parse_complex(text: str) -> SimplicialComplex:
    """Parse the line format: one facet per line, ``#`` comments, optional ``ground`` header.

    A line holding only ``{}`` (or the word ``empty``) is the empty facet.
    """
    facets: list[list[int]] = []
    ground: list[int] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "ground":
            ground = (ground or []) + [_parse_id(t, lineno) for t in tokens[1:]]
            continue
        if tokens in (["{}"], ["empty"]):
            facets.append([])
            continue
        facets.append([_parse_id(t, lineno) for t in tokens])
    if ground is not None:
        support = {v for f in facets for v in f}
        ground = sorted(set(ground) | support)
    return build_complex(facets, ground)


def _parse_id(token: str, lineno: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ComplexError(f"line {lineno}: not an integer: {token!r}") from None
    if v <= 0:
        raise ComplexError(f"line {lineno}: vertex ids must be positive, got {v}")
    return v


def format_complex(cx: SimplicialComplex, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    if cx.ground != cx.support:
        lines.append("ground " + " ".join(map(str, cx.ground_set)))
    for f in cx.facets:
        lines.append(" ".join(map(str, f)) if f else "{}")
    return "\n".join(lines) + "\n"


def read_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def write_complex(cx: SimplicialComplex, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_complex(cx, comment))
