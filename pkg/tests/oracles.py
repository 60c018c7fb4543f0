"""Brute-force reference computations, deliberately independent of the package internals.

Faces are frozensets, ranks come from dense matrices (sympy over Q, a
hand-rolled elimination mod p), and h-vectors from polynomial expansion.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

import sympy


def faces_of(facets) -> set[frozenset]:
    out = set()
    for f in facets:
        f = tuple(f)
        for k in range(len(f) + 1):
            out.update(frozenset(c) for c in combinations(f, k))
    return out


def f_vector(faces, top: int) -> list[int]:
    """[f_{-1}, ..., f_top]."""
    counts = [0] * (top + 2)
    for f in faces:
        counts[len(f)] += 1
    return counts


def h_vector(f: list[int]) -> list[int]:
    """Coefficients of Σ f_{i-1} (t-1)^{d-i} as a polynomial in t, highest power first."""
    t = sympy.symbols("t")
    d = len(f) - 1
    poly = sympy.expand(sum(f[i] * (t - 1) ** (d - i) for i in range(d + 1)))
    return [int(poly.coeff(t, d - j)) for j in range(d + 1)]


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                k = m[r][c]
                m[r] = [(a - k * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _rank(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    if p == 0:
        return sympy.Matrix(rows).rank()
    return _rank_mod_p(rows, p)


def reduced_betti(faces: set[frozenset], sub: set[frozenset], top: int, p: int = 0) -> list[int]:
    """Reduced relative Betti numbers in degrees -1..top; faces must include the empty set if present."""
    rel = [sorted((tuple(sorted(f)) for f in faces if len(f) == k + 1 and f not in sub)) for k in range(-1, top + 1)]
    ranks = []
    for k in range(0, top + 1):
        cols, rows = rel[k + 1], rel[k]
        index = {r: i for i, r in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, c in enumerate(cols):
            for pos in range(len(c)):
                r = c[:pos] + c[pos + 1:]
                if r in index:
                    mat[index[r]][j] = (-1) ** pos
        ranks.append(_rank(mat, p) if rows and cols else 0)
    out = []
    for k in range(-1, top + 1):
        r_out = ranks[k] if k >= 0 else 0
        r_in = ranks[k + 1] if k + 1 <= top else 0
        out.append(len(rel[k + 1]) - r_in - r_out)
    return out


def sigma_tilde(facets, sub_facets, ground, i: int, p: int = 0) -> Fraction:
    faces = faces_of(facets)
    sub = faces_of(sub_facets) if sub_facets is not None else set()
    top = max(len(f) for f in faces) - 1
    ground = sorted(ground)
    n = len(ground)
    total = Fraction(0)
    for k in range(n + 1):
        for w in combinations(ground, k):
            ws = set(w)
            fw = {f for f in faces if f <= ws}
            sw = {f for f in sub if f <= ws}
            b = reduced_betti(fw, sw, top, p)
            total += Fraction(b[i + 1], comb(n, k))
    return total / (n + 1)


def hochster_free_table(facets, sub_facets, ground, p: int = 0) -> dict[tuple[int, int], int]:
    """β_{i,j} = Σ_{|W|=j} b~_{j-i-1}(Δ_W, Γ_W), brute force."""
    faces = faces_of(facets)
    sub = faces_of(sub_facets) if sub_facets is not None else set()
    top = max(len(f) for f in faces) - 1
    table: dict[tuple[int, int], int] = {}
    ground = sorted(ground)
    for j in range(len(ground) + 1):
        for w in combinations(ground, j):
            ws = set(w)
            b = reduced_betti({f for f in faces if f <= ws}, {f for f in sub if f <= ws}, top, p)
            for deg, val in enumerate(b, start=-1):
                if val:
                    key = (j - deg - 1, j)
                    table[key] = table.get(key, 0) + val
    return table
