"""Stanley-Reisner modules I_Γ/I_Δ: Hilbert functions, graded Betti numbers,
Artinian reductions by random linear forms, and the checks built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb

import numpy as np

from .complex import (
    ComplexError,
    RelativeComplex,
    SimplicialComplex,
    as_relative,
    members,
    popcount,
)
from .homology import betti, induced_betti_table
from .linalg import (
    DEFAULT_PRIME,
    F2,
    Q,
    FieldSpec,
    as_field,
    dense_rank,
    modular_rref,
    nullspace_basis,
    numpy_rank_mod_p,
)
from .report import CheckReport, skipped

ORACLE_MAX_VERTICES = 8


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


# -- Hilbert function and graded Betti tables ---------------------------------

def hilbert_function(psi, k: int) -> int:
    """dim of the degree-k piece: Σ_i f_{i-1} C(k-1, i-1), with f_{-1} in degree 0."""
    psi = as_relative(psi)
    if k < 0:
        return 0
    f = psi.f_vector()
    if k == 0:
        return f[0]
    return sum(f[i] * _binom(k - 1, i - 1) for i in range(1, len(f)))


@dataclass
class GradedBettiTable:
    """β_{i,j}; only nonzero entries are stored."""

    entries: dict[tuple[int, int], int]
    n: int
    field: FieldSpec
    degree_bound: int | None = None
    truncated: bool = False

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def within(self, bound: int) -> dict[tuple[int, int], int]:
        return {k: v for k, v in self.entries.items() if k[1] <= bound and v}

    def agrees_with(self, other: "GradedBettiTable") -> bool:
        bound = min(b for b in (self.degree_bound, other.degree_bound, self.n) if b is not None)
        return self.within(bound) == other.within(bound)

    @property
    def max_homological_degree(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def rows(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for (i, j), v in self.entries.items() if v)

    def to_tsv(self) -> str:
        lines = ["i\tj\tbeta"]
        lines += [f"{i}\t{j}\t{v}" for i, j, v in self.rows()]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.label,
            "degree_bound": self.degree_bound,
            "truncated": self.truncated,
            "entries": [{"i": i, "j": j, "beta": v} for i, j, v in self.rows()],
        }


def graded_betti(psi, field=F2) -> GradedBettiTable:
    """β_{i,i+j} = Σ_{|W|=i+j} b~_{j-1}(Δ_W, Γ_W) over subsets W of the ground set."""
    psi = as_relative(psi)
    field = as_field(field)
    n = popcount(psi.total.ground)
    entries: dict[tuple[int, int], int] = {}
    for w, vals in induced_betti_table(psi, field).items():
        size = popcount(w)
        for pos, b in enumerate(vals):
            if not b:
                continue
            j = pos  # vals[pos] is b~_{pos-1}
            key = (size - j, size)
            entries[key] = entries.get(key, 0) + b
    return GradedBettiTable(entries, n, field, n, False)


# -- resolution oracle ----------------------------------------------------------

class _Echelon:
    """Incrementally grown row-echelon basis over Q or F_p."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, list] = {}

    def _reduce(self, vec: list) -> list:
        vec = list(vec)
        p = self.p
        for pc, row in self.rows.items():
            c = vec[pc]
            if c:
                if p:
                    vec = [(a - c * b) % p for a, b in zip(vec, row)]
                else:
                    vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def insert(self, vec: list) -> bool:
        vec = self._reduce(vec)
        pc = next((i for i, v in enumerate(vec) if v), None)
        if pc is None:
            return False
        lead = vec[pc]
        if self.p:
            inv = pow(lead, -1, self.p)
            vec = [(v * inv) % self.p for v in vec]
        else:
            vec = [Fraction(v) / lead for v in vec]
        for q, row in self.rows.items():
            c = row[pc]
            if c:
                self.rows[q] = [(a - c * b) % self.p for a, b in zip(row, vec)] if self.p else [a - c * b for a, b in zip(row, vec)]
        self.rows[pc] = vec
        return True


def resolution_oracle(psi, field=Q, degree_bound: int | None = None, max_exponent: int = 1,
                      max_vertices: int = ORACLE_MAX_VERTICES) -> GradedBettiTable:
    """Graded Betti numbers from a minimal free resolution built by syzygy extraction.

    Works in the fine ℕ^n grading: in each multidegree α (up to ``max_exponent``
    per coordinate and total degree ``degree_bound``) the kernel of the current
    differential is computed and extended past the part generated from lower
    degrees; the new basis vectors are the next minimal generators.  Entries
    with j above the bound are absent and ``truncated`` is set.
    """
    psi = as_relative(psi)
    field = as_field(field)
    verts = members(psi.total.ground)
    n = len(verts)
    if n > max_vertices:
        raise ComplexError(f"oracle is capped at {max_vertices} vertices, got {n}")
    if max_exponent < 1:
        raise ComplexError("max_exponent must be >= 1")
    top = n * max_exponent
    if degree_bound is None:
        degree_bound = top
    if degree_bound < 0:
        raise ComplexError("degree bound must be >= 0")
    truncated = degree_bound < top
    p = field.characteristic
    rel = set()
    for k in range(-1, (psi.total.dim if not psi.total.is_void else -2) + 1):
        rel.update(psi.faces(k))

    def support(alpha):
        m = 0
        for v, e in zip(verts, alpha):
            if e:
                m |= 1 << v
        return m

    degrees = [a for a in product(range(max_exponent + 1), repeat=n) if sum(a) <= degree_bound]
    degrees.sort(key=lambda a: (sum(a), a))
    in_module = {a: support(a) in rel for a in degrees}

    def below(a, b):
        return all(x <= y for x, y in zip(a, b))

    def lower(a):
        for t in range(n):
            if a[t]:
                yield a[:t] + (a[t] - 1,) + a[t + 1:]

    # generators of the module itself: monomials not reachable from below
    gens = [a for a in degrees if in_module[a] and not any(in_module.get(b, False) for b in lower(a))]
    entries: dict[tuple[int, int], int] = {}
    for a in gens:
        entries[(0, sum(a))] = entries.get((0, sum(a)), 0) + 1
    prev_gens: list = gens  # multidegrees of generators of F_{i-1}
    images: list | None = None  # images of F_{i-1} generators in F_{i-2}; None means the module
    step = 0
    while prev_gens:
        step += 1
        kernel: dict[tuple, list[dict[int, object]]] = {}
        new_gens: list = []
        new_images: list = []
        for a in degrees:
            cols = [g for g, ga in enumerate(prev_gens) if below(ga, a)]
            if not cols:
                kernel[a] = []
                continue
            if images is None:
                matrix = [[1] * len(cols)] if in_module[a] else []
            else:
                rows = sorted({h for g in cols for h in images[g]})
                index = {h: r for r, h in enumerate(rows)}
                matrix = [[0] * len(cols) for _ in rows]
                for c, g in enumerate(cols):
                    for h, coeff in images[g].items():
                        matrix[index[h]][c] = coeff
            basis = nullspace_basis(matrix, len(cols), field) if matrix else [
                [Fraction(int(i == j)) if not p else int(i == j) for j in range(len(cols))] for i in range(len(cols))]
            vecs = [{cols[c]: v for c, v in enumerate(b) if v} for b in basis]
            kernel[a] = vecs
            if not vecs:
                continue
            ech = _Echelon(p)
            col_pos = {g: c for c, g in enumerate(cols)}
            for b in lower(a):
                for vec in kernel.get(b, ()):
                    dense = [0] * len(cols)
                    for g, v in vec.items():
                        dense[col_pos[g]] = v
                    ech.insert(dense)
            for vec in vecs:
                dense = [0] * len(cols)
                for g, v in vec.items():
                    dense[col_pos[g]] = v
                if ech.insert(dense):
                    new_gens.append(a)
                    new_images.append(vec)
                    key = (step, sum(a))
                    entries[key] = entries.get(key, 0) + 1
        prev_gens, images = new_gens, new_images
        if step > n + 1:
            raise ArithmeticError("resolution longer than the number of variables")
    return GradedBettiTable(entries, n, field, degree_bound, truncated)


# -- Artinian reductions --------------------------------------------------------

def _monomials(psi: RelativeComplex, k: int) -> list[tuple[int, ...]]:
    """Degree-k monomials of the module as sorted vertex multisets with support a relative face."""
    out = []
    if k == 0:
        return [()] if psi.faces(-1) else []
    top = psi.total.dim
    for size in range(1, min(k, top + 1) + 1):
        for face in psi.faces(size - 1):
            vs = members(face)
            for extra in combinations_with_replacement(vs, k - size):
                out.append(tuple(sorted(vs + extra)))
    return out


@dataclass
class ArtinianReduction:
    dims: list[int]
    forms: list[list[int]]
    prime: int
    seed: int | None
    count: int
    is_lsop: bool
    vertices: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {"dims": self.dims, "prime": self.prime, "seed": self.seed, "count": self.count,
                "is_lsop": self.is_lsop, "forms": self.forms}


def random_forms(n: int, count: int, prime: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randrange(prime) for _ in range(n)] for _ in range(count)]


def is_lsop(cx: SimplicialComplex, forms: list[list[int]], prime: int, vertices: tuple[int, ...] | None = None) -> bool:
    """Θ is an l.s.o.p. of F[Δ] iff its restriction to each facet has full column rank."""
    if vertices is None:
        vertices = cx.ground_set
    pos = {v: i for i, v in enumerate(vertices)}
    field = FieldSpec(prime)
    d = cx.dim + 1
    if len(forms) < d:
        return False
    for facet in cx.facet_masks:
        cols = [pos[v] for v in members(facet)]
        sub = [[row[c] for c in cols] for row in forms[:d]]
        if dense_rank(sub, field) != len(cols):
            return False
    return True


def _rank_mod(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    if p < (1 << 31):
        return numpy_rank_mod_p(np.asarray(rows, dtype=np.int64), p)
    return len(modular_rref(rows, p)[1])


def quotient_dims(psi, forms: list[list[int]], prime: int, degrees: range) -> list[int]:
    """dim (M / (forms)·M)_k for k in ``degrees``, by rank of the image of M_{k-1}."""
    psi = as_relative(psi)
    vertices = psi.total.ground_set
    total_faces = psi.total.face_set
    out = []
    prev = _monomials(psi, degrees.start - 1) if degrees.start > 0 else []
    for k in degrees:
        basis = _monomials(psi, k)
        if not basis:
            out.append(0)
            prev = basis
            continue
        index = {m: i for i, m in enumerate(basis)}
        cols = []
        for form in forms:
            for m in prev:
                col = {}
                for coeff, v in zip(form, vertices):
                    if not coeff % prime:
                        continue
                    prod = tuple(sorted(m + (v,)))
                    mask = 0
                    for u in prod:
                        mask |= 1 << u
                    if mask not in total_faces:
                        continue
                    r = index[prod]
                    col[r] = (col.get(r, 0) + coeff) % prime
                if col:
                    cols.append(col)
        if cols:
            dense = [[0] * len(cols) for _ in basis]
            for c, col in enumerate(cols):
                for r, v in col.items():
                    dense[r][c] = v
            rank = _rank_mod(dense, prime)
        else:
            rank = 0
        out.append(len(basis) - rank)
        prev = basis
    return out


def artinian_reduction(psi, prime: int = DEFAULT_PRIME, count: int | None = None, seed: int = 0,
                       top_degree: int | None = None) -> ArtinianReduction:
    """Per-degree dimensions of M/ΘM for ``count`` seeded random forms over F_p (count ∈ {d, d+1})."""
    field = FieldSpec(prime)  # rejects non-primes
    psi = as_relative(psi)
    if psi.total.is_void:
        raise ComplexError("void complex")
    d = psi.total.dim + 1
    if count is None:
        count = d
    if count not in (d, d + 1):
        raise ComplexError(f"count must be d={d} or d+1={d + 1}, got {count}")
    if top_degree is None:
        top_degree = d
    vertices = psi.total.ground_set
    forms = random_forms(len(vertices), count, field.characteristic, seed)
    dims = quotient_dims(psi, forms, prime, range(0, top_degree + 1))
    lsop = is_lsop(psi.total, forms, prime, vertices)
    return ArtinianReduction(dims, forms, prime, seed, count, lsop, vertices)


# -- h' and h'' -----------------------------------------------------------------

def h_prime(psi, field=F2) -> list[int]:
    """h'_j = h_j + C(d,j) Σ_{i=1}^{j-1} (-1)^{j-i-1} b~_{i-1}."""
    psi = as_relative(psi)
    field = as_field(field)
    d = psi.total.dim + 1
    h = psi.h_vector(d)
    b = betti(psi, field)
    out = []
    for j in range(d + 1):
        s = sum((-1) ** (j - i - 1) * b[i - 1] for i in range(1, j))
        out.append(h[j] + comb(d, j) * s)
    if out[d] != b[d - 1]:
        raise ArithmeticError(f"top h' entry {out[d]} differs from b~_{d - 1} = {b[d - 1]}")
    return out


def h_double_prime(psi, field=F2) -> list[int]:
    """h''_j = h'_j - C(d,j) b~_{j-1} for j < d, and h''_d = h'_d."""
    psi = as_relative(psi)
    field = as_field(field)
    d = psi.total.dim + 1
    hp = h_prime(psi, field)
    b = betti(psi, field)
    return [hp[j] - comb(d, j) * b[j - 1] if j < d else hp[j] for j in range(d + 1)]


# -- Schenzel and WLP -------------------------------------------------------------

def _derived_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [seed] + [rng.getrandbits(64) for _ in range(count - 1)]


def schenzel_check(cx: SimplicialComplex, prime: int = DEFAULT_PRIME, seed: int = 0, retries: int = 3,
                   label: str = "") -> CheckReport:
    """dims of F[Δ]/ΘF[Δ] against h'(Δ) over F_p; sampling misses are inconclusive."""
    from .recognition import classify_homology

    field = FieldSpec(prime)
    name = "schenzel"
    info = classify_homology(cx, field)
    if not info.is_manifold:
        return skipped(name, label, field.label, f"not an {field.label}-homology manifold: {info.reason}", seed)
    rhs = h_prime(cx, field)
    d = cx.dim + 1
    attempts = []
    last = None
    for s in _derived_seeds(seed, max(retries, 1)):
        red = artinian_reduction(cx, prime, d, s)
        attempts.append({"seed": s, "is_lsop": red.is_lsop, "dims": red.dims})
        last = red
        if red.is_lsop and red.dims == rhs:
            rep = CheckReport(name, label, field.label, "=", red.dims, rhs, s)
            rep.notes["attempts"] = attempts
            return rep
    rep = skipped(name, label, field.label, f"inconclusive after {len(attempts)} sampled form sets", seed)
    rep.notes["attempts"] = attempts
    rep.notes["last_dims"] = last.dims if last else None
    rep.notes["h_prime"] = rhs
    return rep


@dataclass
class WlpResult:
    status: str  # passes, fails_sampled, inconclusive
    prime: int
    trials: int
    witness_seed: int | None = None
    attempts: list = dc_field(default_factory=list)

    @property
    def passes(self) -> bool:
        return self.status == "passes"

    def to_dict(self) -> dict:
        return {"status": self.status, "prime": self.prime, "trials": self.trials,
                "witness_seed": self.witness_seed, "attempts": self.attempts}


def wlp_test(cx: SimplicialComplex, prime: int = DEFAULT_PRIME, trials: int = 3, seed: int = 0,
             check_class: bool = True) -> WlpResult:
    """Sample Θ (d forms) and ω; pass when ×ω is onto from degree ⌊d/2⌋ to ⌊d/2⌋+1.

    Onto is tested as (F[Δ]/(Θ,ω))_{⌊d/2⌋+1} = 0.  Θ must also pass the
    facet-minor test for an l.s.o.p., so a pass is an exact witness.
    """
    from .recognition import classify_homology

    field = FieldSpec(prime)
    if trials < 0:
        raise ComplexError("trials must be >= 0")
    if check_class:
        kind = classify_homology(cx, field).kind
        if kind not in ("ball", "sphere"):
            raise ComplexError(f"WLP is tested on homology balls and spheres, got {kind}")
    if trials == 0:
        return WlpResult("inconclusive", prime, 0)
    d = cx.dim + 1
    m = d // 2
    vertices = cx.ground_set
    attempts = []
    for s in _derived_seeds(seed, trials):
        forms = random_forms(len(vertices), d + 1, prime, s)
        lsop = is_lsop(cx, forms, prime, vertices)
        if not lsop:
            attempts.append({"seed": s, "is_lsop": False})
            continue
        dim_next = quotient_dims(RelativeComplex(cx), forms, prime, range(m + 1, m + 2))[0]
        attempts.append({"seed": s, "is_lsop": True, "cokernel": dim_next})
        if dim_next == 0:
            return WlpResult("passes", prime, trials, s, attempts)
    return WlpResult("fails_sampled", prime, trials, None, attempts)


def wlp_prime_for(field: FieldSpec) -> int:
    """Prime over which WLP witnesses are sampled for the given coefficient field.

    Integer forms that work mod p also work over Q, so Q uses the default
    large prime; F_p uses p itself.
    """
    return DEFAULT_PRIME if field.characteristic == 0 else field.characteristic


# -- alternating Betti sums -------------------------------------------------------

def prop43_sides(psi, table: GradedBettiTable | None = None, field=F2) -> tuple[list[int], list[int]]:
    """Σ_k (-1)^k β_{k,ℓ} and Σ_k (-1)^k H(ℓ-k) C(n,k), for ℓ = 0..n+dim+1."""
    psi = as_relative(psi)
    if table is None:
        table = graded_betti(psi, field)
    n = table.n
    top = n + psi.total.dim + 1
    lhs, rhs = [], []
    for ell in range(top + 1):
        lhs.append(sum((-1) ** k * table[(k, ell)] for k in range(ell + 1)))
        rhs.append(sum((-1) ** k * hilbert_function(psi, ell - k) * comb(n, k) for k in range(min(ell, n) + 1)))
    return lhs, rhs


def betti_sum_checks(cx: SimplicialComplex, field=F2, label: str = "", wlp_seed: int = 0,
                     wlp_trials: int = 3) -> list[CheckReport]:
    """Alternating Betti-sum bounds for F[Δ,∂Δ] and the Euler-Koszul equality for F[Δ,∂Δ]."""
    from .recognition import classify_homology, is_normal_pseudomanifold

    field = as_field(field)
    cx = cx.with_ground(cx.support)
    reports = []
    st = is_normal_pseudomanifold(cx)
    bd = st.boundary if st else None
    rel = RelativeComplex(cx, bd) if bd is not None else RelativeComplex(cx)
    table = graded_betti(rel, field)
    n = table.n
    d = cx.dim + 1

    lhs, rhs = prop43_sides(rel, table)
    reports.append(CheckReport("prop43_euler", label, field.label, "=", lhs, rhs))

    # ball or sphere with the WLP
    info = classify_homology(cx, field)
    if info.kind not in ("ball", "sphere"):
        reports.append(skipped("thm46", label, field.label, f"needs a homology ball or sphere, got {info.kind}"))
    else:
        w = wlp_test(cx, wlp_prime_for(field), wlp_trials, wlp_seed, check_class=False)
        if not w.passes:
            reports.append(skipped("thm46", label, field.label, f"WLP not witnessed ({w.status})", wlp_seed))
        else:
            mrel = RelativeComplex(cx, info.boundary)
            mtable = table if mrel == rel else graded_betti(mrel, field)
            g = mrel.g_vector(d)
            lh, rh, wit = [], [], []
            for ell in range(0, (d - 1) // 2 + 1):
                for i in range(0, n + 1):
                    lh.append(sum((-1) ** k * mtable[(i + k, i + ell)] for k in range(n - i + 1)))
                    rh.append(sum((-1) ** k * g[ell - k] * _binom(n - d - 1, i + k) for k in range(ell + 1)))
                    wit.append([i, ell])
            rep = CheckReport("thm46", label, field.label, "<=", lh, rh, w.witness_seed)
            rep.notes["index_pairs"] = wit
            rep.witnesses = [pair for pair, a, b in zip(wit, lh, rh) if a > b]
            reports.append(rep)

    # normal pseudomanifold with boundary
    if not st or st.status != "with_boundary":
        reports.append(skipped("thm49", label, field.label, "needs a normal pseudomanifold with nonempty boundary"))
    elif d < 3:
        reports.append(skipped("thm49", label, field.label, "needs dimension >= 2"))
    else:
        g1 = rel.g_vector(d)[1]
        lh = [table[(i, i + 1)] for i in range(n + 1)]
        rh = [g1 * _binom(n - d - 1, i) for i in range(n + 1)]
        rep = CheckReport("thm49", label, field.label, "<=", lh, rh)
        rep.witnesses = [i for i, (a, b) in enumerate(zip(lh, rh)) if a > b]
        reports.append(rep)
    return reports


def normalized_binomial_sum(n: int, d: int, r: int) -> tuple[Fraction, Fraction]:
    """Σ_k C(n-d-1, k-r) / ((n+1) C(n,k)) and 1/((d+2) C(d+1,r)), for n >= d+1 >= r >= 0."""
    if not n >= d + 1 >= r >= 0:
        raise ComplexError(f"need n >= d+1 >= r >= 0, got n={n}, d={d}, r={r}")
    lhs = sum((Fraction(_binom(n - d - 1, k - r), (n + 1) * comb(n, k)) for k in range(n + 1)), Fraction(0))
    rhs = Fraction(1, (d + 2) * comb(d + 1, r))
    return lhs, rhs
