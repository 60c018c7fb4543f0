"""Normalized σ-numbers and μ-numbers of relative complexes, with Morse-type bounds."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Sequence

from .complex import (
    ComplexError,
    RelativeComplex,
    SimplicialComplex,
    as_relative,
    mask_of,
    members,
    popcount,
)
from .homology import betti, betti_or_zero, induced_betti_table
from .linalg import F2, as_field
from .report import CheckReport


def _entry(values: tuple[int, ...], degree: int) -> int:
    i = degree + 1
    return values[i] if 0 <= i < len(values) else 0


def sigma_by_cardinality(psi, i: int, field=F2) -> dict[int, int]:
    """Σ_{|W|=k} b~_i(Δ_W, Γ_W) for each k."""
    psi = as_relative(psi)
    sums: dict[int, int] = {}
    for w, vals in induced_betti_table(psi, field).items():
        b = _entry(vals, i)
        if b:
            k = popcount(w)
            sums[k] = sums.get(k, 0) + b
    return sums


def sigma_tilde(psi, i: int, field=F2) -> Fraction:
    """(1/(|V|+1)) Σ_W b~_i(Δ_W, Γ_W) / C(|V|, |W|) over the ground set V of the total complex."""
    psi = as_relative(psi)
    n = popcount(psi.total.ground)
    total = Fraction(0)
    for k, s in sigma_by_cardinality(psi, i, field).items():
        total += Fraction(s, comb(n, k))
    return total / (n + 1)


def sigma_vector(psi, field=F2) -> dict[int, Fraction]:
    psi = as_relative(psi)
    top = psi.total.dim if not psi.total.is_void else -1
    return {i: sigma_tilde(psi, i, field) for i in range(-1, top + 1)}


def vertex_link_pair(psi, v: int) -> RelativeComplex:
    """(lk_Δ v, lk_Γ v) on the vertex support of lk_Δ v."""
    psi = as_relative(psi)
    bit = 1 << v
    lk = psi.total.link(bit)
    ground = lk.support
    lk = lk.with_ground(ground)
    sub = psi.sub.link(bit)
    sub = sub.with_ground(ground & sub.ground) if not sub.is_void else sub.with_ground(0)
    return RelativeComplex(lk, sub)


def mu(psi, i: int, field=F2) -> Fraction:
    """Σ_{v ∈ V} σ~_{i-1}(lk_Δ v, lk_Γ v); vertices outside Δ contribute 0."""
    psi = as_relative(psi)
    field = as_field(field)
    total = Fraction(0)
    for v in members(psi.total.ground):
        if not psi.total.support >> v & 1:
            continue
        total += sigma_tilde(vertex_link_pair(psi, v), i - 1, field)
    return total


def mu_vector(psi, field=F2, top: int | None = None) -> dict[int, Fraction]:
    psi = as_relative(psi)
    if top is None:
        top = psi.total.dim
    return {i: mu(psi, i, field) for i in range(0, top + 1)}


# -- Morse-type inequalities --------------------------------------------------

def morse_bounds(psi, field=F2, up_to: int | None = None, label: str = "") -> tuple[CheckReport, CheckReport]:
    """b_i ≤ μ_i and the alternating partial-sum form, for i = 0..up_to."""
    psi = as_relative(psi)
    field = as_field(field)
    if psi.total.is_void:
        raise ComplexError("void complex")
    if up_to is None:
        up_to = psi.total.dim + 1
    b = betti(psi, field, reduced=False)
    mus = [mu(psi, i, field) for i in range(up_to + 1)]
    bs = [b[i] for i in range(up_to + 1)]
    alt_b = [sum((-1) ** (i - j) * bs[j] for j in range(i + 1)) for i in range(up_to + 1)]
    alt_mu = [sum((-1) ** (i - j) * mus[j] for j in range(i + 1)) for i in range(up_to + 1)]
    strong = CheckReport("morse", label, field.label, "<=", bs, mus)
    weak = CheckReport("morse_alternating", label, field.label, "<=", alt_b, alt_mu)
    return strong, weak


def ordered_morse(psi, ordering: Sequence[int], field=F2, i: int = 0) -> dict:
    """Both sides of the ordered Morse inequality and its alternating form."""
    psi = as_relative(psi)
    field = as_field(field)
    ground = psi.total.ground
    if sorted(ordering) != list(members(ground)) or len(set(ordering)) != len(ordering):
        raise ComplexError("ordering is not a permutation of the ground set")
    b = betti(psi, field, reduced=False)
    terms = _ordered_terms(psi, tuple(ordering), field, i)
    rhs = terms[i]
    alt_lhs = sum((-1) ** (i - j) * b[j] for j in range(i + 1))
    alt_rhs = sum((-1) ** (i - j) * terms[j] for j in range(i + 1))
    return {"lhs": b[i], "rhs": rhs, "alternating_lhs": alt_lhs, "alternating_rhs": alt_rhs,
            "holds": b[i] <= rhs and alt_lhs <= alt_rhs}


def _ordered_terms(psi: RelativeComplex, ordering: tuple[int, ...], field, top: int, cache=None) -> list[int]:
    """For j = 0..top: Σ_k b~_{j-1}(lk_Δ(v_k)_{V<k}, lk_Γ(v_k)_{V<k})."""
    out = [0] * (top + 1)
    prefix = 0
    for v in ordering:
        key = (v, prefix)
        vals = cache.get(key) if cache is not None else None
        if vals is None:
            bit = 1 << v
            lk = psi.total.link(bit)
            if lk.is_void:
                vals = ()
            else:
                lk = lk.induced(prefix)
                sub = psi.sub.link(bit)
                sub = sub.induced(prefix) if not sub.is_void else sub
                vals = betti_or_zero(RelativeComplex(lk, sub), field).values
            if cache is not None:
                cache[key] = vals
        for j in range(top + 1):
            out[j] += _entry(vals, j - 1)
        prefix |= 1 << v
    return out


def averaged_ordered_morse(psi, field=F2, i: int = 0) -> Fraction:
    """Mean over all orderings of the ordered Morse right-hand side (brute force, n ≤ 8)."""
    psi = as_relative(psi)
    field = as_field(field)
    verts = members(psi.total.ground)
    if len(verts) > 8:
        raise ComplexError("exhaustive ordering average is capped at 8 vertices")
    cache: dict = {}
    total = 0
    count = 0
    for perm in permutations(verts):
        total += _ordered_terms(psi, perm, field, i, cache)[i]
        count += 1
    return Fraction(total, count)


# -- ground set invariance and dualities ---------------------------------------

def ground_set_invariance(total: SimplicialComplex, sub: SimplicialComplex | None, extra: Sequence[int], field=F2) -> bool:
    """σ~_i over V and over V ∪ extra agree for every i."""
    field = as_field(field)
    extra_mask = mask_of(extra)
    if extra_mask & total.support:
        raise ComplexError(f"extra vertices {members(extra_mask & total.support)} are faces of the complex")
    psi = RelativeComplex(total, sub) if sub is not None else RelativeComplex(total)
    wider_total = total.with_ground(total.ground | extra_mask)
    wider = RelativeComplex(wider_total, psi.sub)
    top = total.dim if not total.is_void else -1
    return all(sigma_tilde(psi, i, field) == sigma_tilde(wider, i, field) for i in range(-1, top + 2))


def duality_checks(cx: SimplicialComplex, field=F2, label: str = "") -> list[CheckReport]:
    """σ-duality for homology balls and μ-duality for homology manifolds with boundary."""
    from .recognition import classify_homology

    field = as_field(field)
    info = classify_homology(cx, field)
    if not info.has_boundary:
        raise ComplexError(f"duality checks need a homology manifold with boundary, got {info.kind}")
    rel = RelativeComplex(cx, info.boundary)
    reports = []
    if info.kind == "ball":
        d = cx.dim + 1
        lhs = [sigma_tilde(rel, i - 1, field) for i in range(d + 1)]
        rhs = [sigma_tilde(cx, d - 1 - i, field) for i in range(d + 1)]
        reports.append(CheckReport("duality_sigma", label, field.label, "=", lhs, rhs))
    d = cx.dim
    lhs = [mu(rel, i, field) for i in range(d + 1)]
    rhs = [mu(cx, d - i, field) for i in range(d + 1)]
    reports.append(CheckReport("duality_mu", label, field.label, "=", lhs, rhs))
    return reports


def alexander_identity_failures(ball: SimplicialComplex, field=F2) -> list[tuple[int, int]]:
    """All (W, i) violating b~_{i-1}(B_W, (∂B)_W) = b~_{d-1-i}(B_{V∖W}), B a (d-1)-ball."""
    from .recognition import ridge_boundary

    field = as_field(field)
    ball = ball.with_ground(ball.support)
    d = ball.dim + 1
    rel = RelativeComplex(ball, ridge_boundary(ball))
    rel_table = induced_betti_table(rel, field)
    abs_table = induced_betti_table(ball, field)
    full = ball.ground
    bad = []
    for w, vals in rel_table.items():
        comp = abs_table[full & ~w]
        for i in range(d + 1):
            if _entry(vals, i - 1) != _entry(comp, d - 1 - i):
                bad.append((w, i))
    return bad


def sigma_from_graded_betti(table: dict[tuple[int, int], int], n: int, i: int) -> Fraction:
    """σ~_{i-1} = (1/(n+1)) Σ_k β_{k-i,k} / C(n,k)."""
    total = Fraction(0)
    for k in range(n + 1):
        b = table.get((k - i, k), 0)
        if b:
            total += Fraction(b, comb(n, k))
    return total / (n + 1)
