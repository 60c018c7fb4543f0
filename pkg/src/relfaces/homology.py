"""Reduced and unreduced simplicial homology of relative complexes."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .complex import (
    VOID,
    ComplexError,
    RelativeComplex,
    SimplicialComplex,
    as_relative,
    members,
)
from .linalg import F2, FieldSpec, as_field, bitset_rank, sparse_rank


class BettiVector:
    """Betti numbers indexed by degree, starting at -1."""

    __slots__ = ("values", "field", "reduced")

    def __init__(self, values: Sequence[int], field: FieldSpec, reduced: bool = True):
        self.values = tuple(values)
        self.field = field
        self.reduced = reduced

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if isinstance(other, BettiVector):
            return self.values == other.values
        return self.values == tuple(other)

    def __repr__(self):
        kind = "b~" if self.reduced else "b"
        return f"BettiVector({kind}{list(self.values)} over {self.field})"

    def as_dict(self) -> dict[int, int]:
        return {i - 1: v for i, v in enumerate(self.values)}


# -- chain complex data -------------------------------------------------------

def _relative_faces(total_faces: dict[int, tuple[int, ...]], sub_faces: frozenset, top: int, within: int | None):
    """Relative faces per dimension -1..top, optionally restricted to subsets of ``within``."""
    out = []
    for k in range(-1, top + 1):
        fs = total_faces.get(k + 1, ())
        if within is not None:
            out.append([f for f in fs if not f & ~within and f not in sub_faces])
        else:
            out.append([f for f in fs if f not in sub_faces])
    return out


def _boundary_columns(faces_k: list[int], index_km1: dict[int, int]) -> list[dict]:
    cols = []
    for f in faces_k:
        col = {}
        sign = 1
        rest = f
        while rest:
            low = rest & -rest
            rest ^= low
            row = index_km1.get(f ^ low)
            if row is not None:
                col[row] = sign
            sign = -sign
        cols.append(col)
    return cols


def _boundary_bitsets(faces_k: list[int], index_km1: dict[int, int]) -> list[int]:
    cols = []
    for f in faces_k:
        m = 0
        rest = f
        while rest:
            low = rest & -rest
            rest ^= low
            row = index_km1.get(f ^ low)
            if row is not None:
                m |= 1 << row
        cols.append(m)
    return cols


def _edge_rank(vertices: list[int], edges: list[int], sub_vertex_present: bool) -> int:
    # rank of the relative edge-vertex incidence map; vertices of the
    # subcomplex collapse to a single ground node (bit 0 is never a vertex)
    parent: dict[int, int] = {}
    for m in vertices:
        v = m.bit_length() - 1
        parent[v] = v
    ground = 0
    if sub_vertex_present:
        parent[ground] = ground

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    merges = 0
    for e in edges:
        low = e & -e
        a = low.bit_length() - 1
        b = (e ^ low).bit_length() - 1
        ra = find(a if a in parent else ground)
        rb = find(b if b in parent else ground)
        if ra != rb:
            parent[ra] = rb
            merges += 1
    return merges


def _betti_from_faces(rel: list[list[int]], sub_has_vertices: bool, field: FieldSpec, reduced: bool) -> list[int]:
    """Betti numbers in degrees -1..top from relative face lists (index k+1 = dim k)."""
    top = len(rel) - 2
    sizes = [len(x) for x in rel]
    # ranks[k] = rank of boundary from dim k to dim k-1, for k = 0..top
    ranks = [0] * (top + 2)
    if reduced and top >= 0 and sizes[0] and sizes[1]:
        ranks[0] = 1
    if top >= 1 and sizes[2]:
        ranks[1] = _edge_rank(rel[1], rel[2], sub_has_vertices)
    for k in range(2, top + 1):
        if not sizes[k + 1] or not sizes[k]:
            continue
        index = {f: i for i, f in enumerate(rel[k])}
        if field.characteristic == 2:
            ranks[k] = bitset_rank(_boundary_bitsets(rel[k + 1], index))
        else:
            ranks[k] = sparse_rank(_boundary_columns(rel[k + 1], index), field)
    out = []
    for k in range(-1, top + 1):
        size = sizes[k + 1]
        if k == -1 and not reduced:
            out.append(0)
            continue
        r_in = ranks[k + 1] if k + 1 <= top else 0
        r_out = ranks[k] if k >= 0 else 0
        out.append(size - r_in - r_out)
    return out


# -- public API ---------------------------------------------------------------

def boundary_matrix(psi, k: int) -> list[list[int]]:
    """Dense boundary matrix from dimension ``k`` to ``k-1`` of the reduced chain complex.

    Columns follow the ascending order of ``k``-faces (as bit masks) and rows
    the ascending order of ``(k-1)``-faces; the row for the empty face is the
    augmentation and is present only when the empty face is a relative face.
    """
    psi = as_relative(psi)
    if psi.total.is_void:
        raise ComplexError("boundary matrix of the void complex is undefined")
    top = psi.total.dim
    if not -1 <= k <= top:
        raise ComplexError(f"degree {k} outside [-1, {top}]")
    cols = list(psi.faces(k))
    rows = list(psi.faces(k - 1)) if k >= 0 else []
    index = {f: i for i, f in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for j, col in enumerate(_boundary_columns(cols, index)):
        for i, v in col.items():
            matrix[i][j] = v
    return matrix


def betti(psi, field=F2, reduced: bool = True) -> BettiVector:
    """Betti numbers in degrees -1..dim(total)."""
    psi = as_relative(psi)
    field = as_field(field)
    if psi.total.is_void:
        raise ComplexError("homology of the void complex is undefined")
    return BettiVector(_betti_cached(psi.total, psi.sub, field, reduced), field, reduced)


@lru_cache(maxsize=4096)
def _betti_cached(total: SimplicialComplex, sub: SimplicialComplex, field: FieldSpec, reduced: bool) -> tuple[int, ...]:
    top = total.dim
    rel = _relative_faces(total._faces_by_size, sub.face_set, top, None)
    return tuple(_betti_from_faces(rel, bool(sub.faces(0)), field, reduced))


def betti_or_zero(psi, field=F2, reduced: bool = True, length: int | None = None) -> BettiVector:
    """Like :func:`betti` but the void complex has all Betti numbers zero."""
    psi = as_relative(psi)
    field = as_field(field)
    if psi.total.is_void:
        return BettiVector([0] * (length or 1), field, reduced)
    return betti(psi, field, reduced)


def euler_characteristic(psi, field=F2) -> int:
    """Reduced Euler characteristic, checked against the alternating Betti sum."""
    psi = as_relative(psi)
    f = psi.f_vector(psi.total.dim + 2)
    chi = sum((-1) ** (i - 1) * v for i, v in enumerate(f))
    b = betti(psi, field)
    alt = sum((-1) ** (i - 1) * v for i, v in enumerate(b.values))
    if chi != alt:
        raise ArithmeticError(f"Euler characteristic mismatch: faces give {chi}, homology gives {alt}")
    return chi


def induced_betti_table(psi, field=F2, reduced: bool = True) -> dict[int, tuple[int, ...]]:
    """Betti numbers (degrees -1..dim) of every induced pair ``(Δ_W, Γ_W)``, ``W`` over the ground set."""
    psi = as_relative(psi)
    return _induced_table(psi.total, psi.sub, as_field(field), reduced)


@lru_cache(maxsize=256)
def _induced_table(total: SimplicialComplex, sub: SimplicialComplex, field: FieldSpec, reduced: bool):
    if total.is_void:
        return {w: () for w in _all_submasks(total.ground)}
    top = total.dim
    by_size = total._faces_by_size
    sub_faces = sub.face_set
    sub_vertices = sub.support
    rel_all = _relative_faces(by_size, sub_faces, top, None)
    table = {}
    for w in _all_submasks(total.ground):
        rel = [[f for f in fs if not f & ~w] for fs in rel_all]
        while len(rel) > 1 and not rel[-1]:
            rel.pop()
        vals = _betti_from_faces(rel, bool(sub_vertices & w), field, reduced)
        vals += [0] * (top + 2 - len(vals))
        table[w] = tuple(vals)
    return table


def _all_submasks(mask: int) -> list[int]:
    verts = members(mask)
    out = [0]
    for v in verts:
        bit = 1 << v
        out += [m | bit for m in out]
    return out


def components(cx: SimplicialComplex) -> list[int]:
    return cx.components()


def orientable(cx: SimplicialComplex, field=F2) -> bool:
    """Every connected component C has top relative Betti number b~_d(C, ∂C) = 1."""
    from .recognition import classify_homology

    field = as_field(field)
    info = classify_homology(cx, field)
    if info.kind not in ("sphere", "ball", "closed_manifold", "manifold_with_boundary"):
        raise ComplexError("orientability is defined here only for homology manifolds")
    d = cx.dim
    boundary = info.boundary
    for comp in cx.components():
        c = cx.induced(comp)
        bc = boundary.induced(comp) if not boundary.is_void else VOID
        if bc.is_void or not bc.faces(0):
            rel = RelativeComplex(c)
        else:
            rel = RelativeComplex(c, bc)
        if betti(rel, field)[d] != 1:
            return False
    return True


def long_exact_sequence_defect(total: SimplicialComplex, sub: SimplicialComplex, field=F2) -> int:
    """Σ(-1)^i [b~_i(Γ) - b~_i(Δ) + b~_i(Δ,Γ)]; zero by exactness."""
    field = as_field(field)
    top = total.dim
    bd = betti(total, field)
    bs = betti_or_zero(sub, field)
    br = betti(RelativeComplex(total, sub), field)
    return sum((-1) ** i * (bs[i] - bd[i] + br[i]) for i in range(-1, top + 1))
