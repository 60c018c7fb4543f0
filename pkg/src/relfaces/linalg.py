"""Exact rank computations over Q and prime fields.

Sparse columns are dicts ``row -> coefficient``; characteristic 2 uses
Python ints as bitsets instead.  Reduction is the usual "lowest nonzero
row" column reduction, which touches only the nonzero pattern and is fast
for boundary matrices whose pivots are almost always ±1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from sympy import isprime

DEFAULT_PRIME = 2147483647
_NUMPY_PRIME_LIMIT = 1 << 31


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or (c != 0 and not isprime(c)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {c}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``q``, ``Q``, ``f2``, ``F3``, ``f<p>`` or a bare prime."""
        t = text.strip().lower()
        if t in ("q", "qq", "rational", "rationals", "0"):
            return cls(0)
        if t.startswith("f"):
            t = t[1:]
        try:
            p = int(t)
        except ValueError:
            raise ValueError(f"unrecognized field {text!r}") from None
        return cls(p)


Q = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)


def as_field(field) -> FieldSpec:
    if isinstance(field, FieldSpec):
        return field
    if isinstance(field, int):
        return FieldSpec(field)
    return FieldSpec.parse(str(field))


# -- sparse column reduction --------------------------------------------------

def _rank_f2(columns: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def _rank_mod_p(columns: Iterable[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    rank = 0
    for col in columns:
        col = {r: c % p for r, c in col.items() if c % p}
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                inv = pow(col[low], -1, p)
                pivots[low] = {r: c * inv % p for r, c in col.items()}
                rank += 1
                break
            factor = col[low]
            for r, c in other.items():
                v = (col.get(r, 0) - factor * c) % p
                if v:
                    col[r] = v
                else:
                    col.pop(r, None)
    return rank


def _rank_rational(columns: Iterable[dict]) -> int:
    # integer columns; cross-multiplication keeps everything integral and
    # the content is divided out after each step
    pivots: dict[int, dict] = {}
    rank = 0
    for col in columns:
        col = {r: c for r, c in col.items() if c}
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            a, b = col[low], other[low]
            if b in (1, -1):
                f = a * b
                for r, c in other.items():
                    v = col.get(r, 0) - f * c
                    if v:
                        col[r] = v
                    else:
                        col.pop(r, None)
            else:
                g = gcd(a, b)
                ma, mb = b // g, a // g
                new = {r: c * ma for r, c in col.items()}
                for r, c in other.items():
                    v = new.get(r, 0) - mb * c
                    if v:
                        new[r] = v
                    else:
                        new.pop(r, None)
                col = new
                if col:
                    g = 0
                    for c in col.values():
                        g = gcd(g, c)
                        if g == 1:
                            break
                    if g > 1:
                        col = {r: c // g for r, c in col.items()}
    return rank


def sparse_rank(columns: Sequence[dict], field: FieldSpec) -> int:
    """Rank of the matrix whose columns are the given sparse integer dicts."""
    p = field.characteristic
    if p == 2:
        bits = []
        for col in columns:
            m = 0
            for r, c in col.items():
                if c & 1:
                    m |= 1 << r
            bits.append(m)
        return _rank_f2(bits)
    if p == 0:
        return _rank_rational(columns)
    return _rank_mod_p(columns, p)


def bitset_rank(columns: Iterable[int]) -> int:
    """Rank over F2 of columns given as int bitsets."""
    return _rank_f2(columns)


# -- dense exact routines (oracles and small systems) -------------------------

def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        for r in range(rank + 1, nrows):
            arc = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col, ncols):
                row_r[c] = (row_r[c] * pv - arc * row_p[c]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def fraction_rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in matrix]
    pivots: list[int] = []
    if not a:
        return a, pivots
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def modular_rref(matrix: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p (pure Python, any prime size)."""
    a = [[x % p for x in row] for row in matrix]
    pivots: list[int] = []
    if not a:
        return a, pivots
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def nullspace_basis(matrix: Sequence[Sequence], ncols: int, field: FieldSpec) -> list[list]:
    """Basis of {x : A x = 0}; entries are Fractions over Q, ints mod p otherwise."""
    p = field.characteristic
    if matrix:
        rows, pivots = fraction_rref(matrix) if p == 0 else modular_rref(matrix, p)
    else:
        rows, pivots = [], []
    pivset = set(pivots)
    zero = Fraction(0) if p == 0 else 0
    one = Fraction(1) if p == 0 else 1
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for row, pc in zip(rows, pivots):
            v = -row[free]
            vec[pc] = v if p == 0 else v % p
        basis.append(vec)
    return basis


def dense_rank(matrix: Sequence[Sequence[int]], field: FieldSpec) -> int:
    p = field.characteristic
    if not matrix or not len(matrix[0]):
        return 0
    if p == 0:
        return bareiss_rank(matrix)
    if p == 2:
        return _rank_f2(int("".join("1" if x & 1 else "0" for x in row) or "0", 2) for row in matrix)
    if p < _NUMPY_PRIME_LIMIT:
        return numpy_rank_mod_p(np.asarray(matrix, dtype=np.int64) % p, p)
    return len(modular_rref(matrix, p)[1])


def numpy_rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over F_p for p < 2^31; products stay below 2^62 so int64 is exact."""
    if p >= _NUMPY_PRIME_LIMIT:
        return len(modular_rref(a.tolist(), p)[1])
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, c]
        idx = np.nonzero(below)[0]
        if idx.size:
            rows = idx + rank + 1
            a[rows] = (a[rows] - np.outer(a[rows, c], a[rank]) % p) % p
        rank += 1
    return rank
