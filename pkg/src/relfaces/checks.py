"""Check harness: each check id evaluates both sides of one relation on a complex."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .complex import (
    ComplexError,
    RelativeComplex,
    SimplicialComplex,
    members,
    missing_faces,
    popcount,
)
from .homology import betti, euler_characteristic, orientable
from .linalg import DEFAULT_PRIME, F2, Q, FieldSpec, as_field
from .recognition import (
    classify_homology,
    is_normal_pseudomanifold,
    is_stacked_sphere,
    property_L,
    ridge_boundary,
)
from .report import CheckReport, skipped
from .sigma_mu import duality_checks, morse_bounds, mu, sigma_tilde, vertex_link_pair
from .stanley_reisner import (
    ORACLE_MAX_VERTICES,
    betti_sum_checks,
    graded_betti,
    normalized_binomial_sum,
    prop43_sides,
    resolution_oracle,
    schenzel_check,
    wlp_prime_for,
    wlp_test,
)

CHECK_IDS = (
    "dehn_sommerville", "graebe", "h_and_g", "lbt_closed", "main1", "main1_equality",
    "h2_corollary", "main2", "thm55_mu", "prop52", "prop61", "lemma62", "thm63",
    "missing_faces_eq", "criterion_ball", "sharpness_facet_removed", "duality_sigma",
    "duality_mu", "morse", "hochster_oracle", "schenzel", "thm46", "thm49",
    "prop43_euler", "lemma53", "lemma54",
)
EXTRA_CHECK_IDS = ("linksum", "lbt_vertex_deletion")
ALL_CHECK_IDS = CHECK_IDS + EXTRA_CHECK_IDS

SIGMA_CAP = 14
ORACLE_CAP = ORACLE_MAX_VERTICES

DEFAULT_OPTIONS = {
    "wlp_trials": 3,
    "wlp_seed": 0,
    "reduction_seed": 0,
    "retries": 3,
    "prime": None,
    "sigma_cap": SIGMA_CAP,
    "oracle_cap": ORACLE_CAP,
}

_SIGMA_CHECKS = {"main1_equality", "thm55_mu", "prop52", "prop61", "lemma62", "thm63",
                 "missing_faces_eq", "morse", "duality_sigma", "duality_mu"}


@dataclass
class _Ctx:
    cx: SimplicialComplex
    sub: SimplicialComplex | None
    field: FieldSpec
    label: str
    seed: int | None
    opts: dict

    @property
    def n(self) -> int:
        return popcount(self.cx.ground)

    def report(self, check, relation, lhs, rhs, **kw) -> CheckReport:
        rep = CheckReport(check, self.label, self.field.label, relation, lhs, rhs, self.seed)
        for k, v in kw.items():
            if k == "witnesses":
                rep.witnesses = list(v)
            else:
                rep.notes[k] = v
        return rep

    def skip(self, check, reason) -> CheckReport:
        return skipped(check, self.label, self.field.label, reason, self.seed)


def _pseudo(ctx: _Ctx):
    st = is_normal_pseudomanifold(ctx.cx)
    return st


def _pair(ctx: _Ctx) -> RelativeComplex:
    """The given subcomplex, else the ridge boundary (void when closed or impure)."""
    if ctx.sub is not None:
        return RelativeComplex(ctx.cx, ctx.sub)
    if ctx.cx.is_pure:
        return RelativeComplex(ctx.cx, ridge_boundary(ctx.cx))
    return RelativeComplex(ctx.cx)


def _pad(vec: Sequence[int], length: int) -> list[int]:
    return list(vec) + [0] * (length - len(vec))


def _g_padded(h: Sequence[int], length: int) -> list[int]:
    h = _pad(h, length)
    return [h[0]] + [h[i] - h[i - 1] for i in range(1, length)]


def _manifold(ctx: _Ctx, check: str, need_boundary: bool | None = None, min_dim: int = 0):
    info = classify_homology(ctx.cx, ctx.field)
    if not info.is_manifold:
        return None, ctx.skip(check, f"not an {ctx.field.label}-homology manifold: {info.reason}")
    if need_boundary is True and not info.has_boundary:
        return None, ctx.skip(check, "needs nonempty boundary")
    if need_boundary is False and info.has_boundary:
        return None, ctx.skip(check, "needs a closed complex")
    if ctx.cx.dim < min_dim:
        return None, ctx.skip(check, f"needs dimension >= {min_dim}")
    return info, None


# -- identities -------------------------------------------------------------------

def _relative_dual_h(ctx: _Ctx) -> CheckReport:
    from .stanley_reisner import h_double_prime

    name = "dehn_sommerville"
    info, skip = _manifold(ctx, name, need_boundary=True)
    if skip:
        return skip
    if not orientable(ctx.cx, ctx.field):
        return ctx.skip(name, f"not orientable over {ctx.field.label}")
    d = ctx.cx.dim + 1
    rel = h_double_prime(RelativeComplex(ctx.cx, info.boundary), ctx.field)
    absolute = h_double_prime(ctx.cx, ctx.field)
    connected = len(ctx.cx.components()) == 1
    idx = list(range(0 if connected else 1, d + 1 if connected else d))
    lhs = [rel[i] for i in idx]
    rhs = [absolute[d - i] for i in idx]
    return ctx.report(name, "=", lhs, rhs, indices=idx, connected=connected,
                      witnesses=[i for i, a, b in zip(idx, lhs, rhs) if a != b])


def _h_reversal_euler(ctx: _Ctx) -> CheckReport:
    name = "graebe"
    info, skip = _manifold(ctx, name, need_boundary=True)
    if skip:
        return skip
    d = ctx.cx.dim + 1
    habs = RelativeComplex(ctx.cx).h_vector()
    hrel = RelativeComplex(ctx.cx, info.boundary).h_vector()
    chi = euler_characteristic(ctx.cx, ctx.field)
    lhs = [habs[d - i] + comb(d, i) * (-1) ** (d - i) * chi for i in range(d + 1)]
    rhs = [hrel[i] for i in range(d + 1)]
    return ctx.report(name, "=", lhs, rhs, witnesses=[i for i in range(d + 1) if lhs[i] != rhs[i]])


def _h_splits_over_boundary(ctx: _Ctx) -> CheckReport:
    name = "h_and_g"
    st = _pseudo(ctx)
    if st.status != "with_boundary":
        return ctx.skip(name, "needs a normal pseudomanifold with nonempty boundary")
    d = ctx.cx.dim + 1
    habs = RelativeComplex(ctx.cx).h_vector()
    hrel = RelativeComplex(ctx.cx, st.boundary).h_vector()
    gb = _g_padded(RelativeComplex(st.boundary).h_vector(), d + 1)
    lhs = habs
    rhs = [hrel[i] + gb[i] for i in range(d + 1)]
    return ctx.report(name, "=", lhs, rhs, witnesses=[i for i in range(d + 1) if lhs[i] != rhs[i]])


def _link_face_sum(ctx: _Ctx) -> CheckReport:
    psi = _pair(ctx)
    top = ctx.cx.dim
    lhs = [0] * (top + 1)
    for v in ctx.cx.vertices:
        f = vertex_link_pair(psi, v).f_vector(top + 1)
        for i in range(top + 1):
            lhs[i] += f[i]
    frel = psi.f_vector(top + 2)
    rhs = [(i + 1) * frel[i + 1] for i in range(top + 1)]
    return ctx.report("linksum", "=", lhs, rhs)


def _link_g_sum(ctx: _Ctx) -> CheckReport:
    name = "lemma54"
    if not ctx.cx.is_pure:
        return ctx.skip(name, "needs a pure complex")
    psi = _pair(ctx)
    d = ctx.cx.dim
    length = d + 2
    lhs = [0] * length
    for v in ctx.cx.vertices:
        lk = vertex_link_pair(psi, v)
        g = _g_padded(lk.h_vector(d), length)
        for k in range(length):
            lhs[k] += g[k]
    g = _g_padded(psi.h_vector(d + 1), length + 1)
    rhs = [(d + 2 - k) * g[k] + (k + 1) * g[k + 1] for k in range(length)]
    return ctx.report(name, "=", lhs, rhs)


def _binomial_identity(ctx: _Ctx) -> CheckReport:
    name = "lemma53"
    n = len(ctx.cx.vertices)
    d = ctx.cx.dim + 1
    if n < d + 1:
        return ctx.skip(name, f"needs n >= d+1, got n={n}, d={d}")
    lhs, rhs = [], []
    for r in range(d + 2):
        a, b = normalized_binomial_sum(n, d, r)
        lhs.append(a)
        rhs.append(b)
    return ctx.report(name, "=", lhs, rhs, n=n, d=d)


# -- lower bound inequalities -------------------------------------------------------

def _g2_closed_bound(ctx: _Ctx) -> CheckReport:
    name = "lbt_closed"
    st = _pseudo(ctx)
    if st.status != "closed":
        return ctx.skip(name, "needs a normal pseudomanifold without boundary")
    d = ctx.cx.dim
    if d < 3:
        return ctx.skip(name, "needs dimension >= 3")
    b = betti(ctx.cx, ctx.field)
    g2 = RelativeComplex(ctx.cx).g_vector()[2]
    rhs = comb(d + 2, 2) * (b[1] - b[0])
    return ctx.report(name, ">=", g2, rhs)


def _g2_relative_bound(ctx: _Ctx) -> CheckReport:
    name = "main1"
    st = _pseudo(ctx)
    if st.status != "with_boundary":
        return ctx.skip(name, "needs a normal pseudomanifold with nonempty boundary")
    d = ctx.cx.dim
    if d < 3:
        return ctx.skip(name, "needs dimension >= 3")
    rel = RelativeComplex(ctx.cx, st.boundary)
    b = betti(rel, ctx.field)
    g2 = rel.g_vector()[2]
    rhs = comb(d + 2, 2) * (b[1] - b[0])
    rep = ctx.report(name, ">=", g2, rhs)
    if g2 == rhs:
        info = classify_homology(ctx.cx, ctx.field)
        if info.has_boundary and ctx.n <= ctx.opts["sigma_cap"]:
            rep.notes["property_L"] = property_L(ctx.cx, ctx.field).holds
    return rep


def _g2_equality_vs_L(ctx: _Ctx) -> CheckReport:
    name = "main1_equality"
    info, skip = _manifold(ctx, name, need_boundary=True, min_dim=3)
    if skip:
        return skip
    d = ctx.cx.dim
    rel = RelativeComplex(ctx.cx, info.boundary)
    g2 = rel.g_vector()[2]
    b = betti(rel, ctx.field)
    c = comb(d + 2, 2)
    betti_eq = int(g2 == c * (b[1] - b[0]))
    mu_gap = g2 - c * (mu(rel, 1, ctx.field) - mu(rel, 0, ctx.field))
    mu_eq = int(mu_gap == 0)
    lres = property_L(ctx.cx, ctx.field)
    L = int(lres.holds)
    # mu-form equality iff (L); Betti-form equality implies (L)
    rep = ctx.report(name, "<=", [mu_eq, L, betti_eq], [L, mu_eq, L],
                     g2=g2, betti_gap=g2 - c * (b[1] - b[0]), mu_gap=mu_gap,
                     witnesses=[{"vertex": x.vertex, "location": x.location, "detail": x.detail}
                                for x in lres.failures])
    return rep


def _h2_interior_bound(ctx: _Ctx) -> CheckReport:
    name = "h2_corollary"
    st = _pseudo(ctx)
    if st.status != "with_boundary":
        return ctx.skip(name, "needs a normal pseudomanifold with nonempty boundary")
    d = ctx.cx.dim
    if d < 3:
        return ctx.skip(name, "needs dimension >= 3")
    bd = st.boundary
    if not is_normal_pseudomanifold(bd):
        return ctx.skip(name, "boundary is not a normal pseudomanifold")
    rel = RelativeComplex(ctx.cx, bd)
    h2 = RelativeComplex(ctx.cx).h_vector()[2]
    f0 = len(rel.faces(0))
    br = betti(rel, ctx.field)
    main = f0 + comb(d + 2, 2) * (br[1] - br[0])
    if d >= 4:
        bb = betti(bd, ctx.field)
        rhs = main + comb(d + 1, 2) * (bb[1] - bb[0])
        return ctx.report(name, ">=", h2, rhs)
    bb2 = betti(bd, F2)
    rhs = main + 3 * (bb2[1] - 2 * bb2[0])
    return ctx.report(name, ">=", h2, rhs, boundary_field="F2")


def _g2_vertex_link_bound(ctx: _Ctx) -> CheckReport:
    name = "lbt_vertex_deletion"
    st = _pseudo(ctx)
    if st.status != "closed":
        return ctx.skip(name, "needs a normal pseudomanifold without boundary")
    d = ctx.cx.dim
    if d < 4:
        return ctx.skip(name, "needs dimension >= 4")
    b = betti(ctx.cx, ctx.field)
    g2 = RelativeComplex(ctx.cx).g_vector()[2]
    base = comb(d + 2, 2) * (b[1] - b[0])
    verts = list(ctx.cx.vertices)
    rhs = []
    for v in verts:
        lk = ctx.cx.link(1 << v)
        rhs.append(base + comb(d + 1, 2) * betti(lk.with_ground(lk.support), ctx.field)[1])
    return ctx.report(name, ">=", [g2] * len(verts), rhs, vertices=verts)


# -- WLP-gated checks ---------------------------------------------------------------

def _links_have_wlp(ctx: _Ctx, check: str):
    """WLP witness seeds for every vertex link, or a skip report."""
    prime = ctx.opts["prime"] or wlp_prime_for(ctx.field)
    seeds = []
    for v in ctx.cx.vertices:
        lk = ctx.cx.link(1 << v)
        lk = lk.with_ground(lk.support)
        res = wlp_test(lk, prime, ctx.opts["wlp_trials"], ctx.opts["wlp_seed"], check_class=False)
        if not res.passes:
            return None, ctx.skip(check, f"WLP not witnessed for the link of vertex {v} ({res.status})")
        seeds.append({"vertex": v, "wlp_seed": res.witness_seed, "prime": prime})
    return seeds, None


def _gr_relative_bound(ctx: _Ctx) -> CheckReport:
    name = "main2"
    info, skip = _manifold(ctx, name)
    if skip:
        return skip
    seeds, skip = _links_have_wlp(ctx, name)
    if skip:
        return skip
    d = ctx.cx.dim
    rel = RelativeComplex(ctx.cx, info.boundary)
    g = rel.g_vector()
    b = betti(rel, ctx.field)
    rs = list(range(1, (d + 1) // 2 + 1))
    lhs = [g[r] for r in rs]
    rhs = [comb(d + 2, r) * sum((-1) ** (r - j) * b[j - 1] for j in range(1, r + 1)) for r in rs]
    return ctx.report(name, ">=", lhs, rhs, r_values=rs, witnesses=seeds)


def _gr_mu_bound(ctx: _Ctx) -> CheckReport:
    name = "thm55_mu"
    info, skip = _manifold(ctx, name)
    if skip:
        return skip
    seeds, skip = _links_have_wlp(ctx, name)
    if skip:
        return skip
    d = ctx.cx.dim
    rel = RelativeComplex(ctx.cx, info.boundary)
    g = rel.g_vector()
    rs = list(range(1, (d + 1) // 2 + 1))
    mus = [mu(rel, k, ctx.field) for k in range(max(rs, default=0))]
    lhs = [g[r] for r in rs]
    rhs = [comb(d + 2, r) * (sum((-1) ** (r - k) * mus[k - 1] for k in range(1, r + 1)) + (-1) ** r * g[0])
           for r in rs]
    return ctx.report(name, ">=", lhs, rhs, r_values=rs, witnesses=seeds)


def _sigma_alternating_bound(ctx: _Ctx) -> CheckReport:
    name = "prop52"
    info = classify_homology(ctx.cx, ctx.field)
    if info.kind not in ("ball", "sphere"):
        return ctx.skip(name, f"needs a homology ball or sphere, got {info.kind}")
    prime = ctx.opts["prime"] or wlp_prime_for(ctx.field)
    w = wlp_test(ctx.cx, prime, ctx.opts["wlp_trials"], ctx.opts["wlp_seed"], check_class=False)
    if not w.passes:
        return ctx.skip(name, f"WLP not witnessed ({w.status})")
    d = ctx.cx.dim + 1
    rel = RelativeComplex(ctx.cx, info.boundary)
    g = rel.g_vector()
    js = list(range(0, (d - 1) // 2 + 1))
    sig = [sigma_tilde(rel, i - 1, ctx.field) for i in range(max(js) + 1)]
    lhs = [sum((-1) ** (j - i) * sig[i] for i in range(j + 1)) for j in js]
    rhs = [Fraction(1, d + 2) * sum((Fraction((-1) ** (j - i) * g[i], comb(d + 1, i)) for i in range(j + 1)), Fraction(0))
           for j in js]
    return ctx.report(name, "<=", lhs, rhs, j_values=js,
                      witnesses=[{"wlp_seed": w.witness_seed, "prime": prime}])


# -- σ/μ inequalities ---------------------------------------------------------------

def _sigma0_interior_bound(ctx: _Ctx) -> CheckReport:
    name = "prop61"
    st = _pseudo(ctx)
    if st.status != "with_boundary":
        return ctx.skip(name, "needs a normal pseudomanifold with nonempty boundary")
    d = ctx.cx.dim + 1
    if d < 3:
        return ctx.skip(name, "needs dimension >= 2")
    rel = RelativeComplex(ctx.cx, st.boundary)
    lhs = comb(d + 2, 2) * sigma_tilde(rel, 0, ctx.field)
    rhs = Fraction(len(rel.faces(0)), 2)
    return ctx.report(name, "<=", lhs, rhs)


def _sigma0_closed_bound(ctx: _Ctx) -> CheckReport:
    name = "lemma62"
    st = _pseudo(ctx)
    if st.status != "closed":
        return ctx.skip(name, "needs a normal pseudomanifold without boundary")
    d = ctx.cx.dim + 1
    if d < 3:
        return ctx.skip(name, "needs dimension >= 2")
    lhs = comb(d + 2, 2) * (sigma_tilde(ctx.cx, 0, ctx.field) - sigma_tilde(ctx.cx, -1, ctx.field))
    rhs = Fraction(len(ctx.cx.vertices), 2) - (d + 1)
    rep = ctx.report(name, "<=", lhs, rhs)
    info = classify_homology(ctx.cx, ctx.field)
    rep.notes["stacked_sphere"] = info.kind == "sphere" and is_stacked_sphere(ctx.cx, ctx.field)
    return rep


def _g2_mu_bound(ctx: _Ctx) -> CheckReport:
    name = "thm63"
    st = _pseudo(ctx)
    if st.status != "with_boundary":
        return ctx.skip(name, "needs a normal pseudomanifold with nonempty boundary")
    d = ctx.cx.dim
    if d < 3:
        return ctx.skip(name, "needs dimension >= 3")
    rel = RelativeComplex(ctx.cx, st.boundary)
    g2 = rel.g_vector()[2]
    rhs = comb(d + 2, 2) * (mu(rel, 1, ctx.field) - mu(rel, 0, ctx.field))
    return ctx.report(name, ">=", g2, rhs)


def _sigma0_missing_faces(ctx: _Ctx) -> CheckReport:
    name = "missing_faces_eq"
    info = classify_homology(ctx.cx, ctx.field)
    if info.kind != "ball":
        return ctx.skip(name, f"needs a homology ball, got {info.kind}")
    d = ctx.cx.dim + 1
    if d < 3:
        return ctx.skip(name, "needs dimension >= 2")
    rel = RelativeComplex(ctx.cx, info.boundary)
    f0 = len(rel.faces(0))
    lhs = 2 * comb(d + 2, 2) * sigma_tilde(rel, 0, ctx.field)
    m = len(missing_faces(ctx.cx, d - 1))
    sigma_eq = int(lhs == f0)
    m_eq = int(m == f0)
    # 2C(d+2,2)σ~_0 <= f_0, m_{d-1} <= f_0, and σ-equality forces m_{d-1} = f_0
    return ctx.report(name, "<=", [lhs, m, sigma_eq], [f0, f0, m_eq],
                      sigma_equality=bool(sigma_eq), missing_top_faces=m)


def unstack_ball(cx: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    """Undo connected sums with simplex boundaries at interior vertices, greedily.

    An interior vertex whose link is the boundary of a simplex on G, with G not
    a face, is removed and G becomes a facet.  Smallest vertex id first.
    """
    bd = ridge_boundary(cx)
    removed = []
    while True:
        d = cx.dim
        for v in cx.vertices:
            if bd.support >> v & 1:
                continue
            bit = 1 << v
            star = [f for f in cx.facet_masks if f & bit]
            g = 0
            for f in star:
                g |= f
            g &= ~bit
            if popcount(g) != d + 1 or len(star) != d + 1 or g in cx.face_set:
                continue
            cx = SimplicialComplex([f for f in cx.facet_masks if not f & bit] + [g])
            removed.append(v)
            break
        else:
            return cx, removed


def _g2_zero_ball(ctx: _Ctx) -> CheckReport:
    name = "criterion_ball"
    info = classify_homology(ctx.cx, ctx.field)
    if info.kind != "ball":
        return ctx.skip(name, f"needs a homology ball, got {info.kind}")
    if ctx.cx.dim < 3:
        return ctx.skip(name, "needs dimension >= 3")
    rel = RelativeComplex(ctx.cx, info.boundary)
    g2 = rel.g_vector()[2]
    core, removed = unstack_ball(ctx.cx)
    core_rel = RelativeComplex(core, ridge_boundary(core))
    decomposed = not core_rel.faces(0) and not core_rel.faces(1)
    return ctx.report(name, "=", [int(g2 == 0)], [int(decomposed)], g2=g2, removed_vertices=removed,
                      core_interior_f=[len(core_rel.faces(0)), len(core_rel.faces(1))])


def _punctured_stacked_equality(ctx: _Ctx) -> CheckReport:
    name = "sharpness_facet_removed"
    info, skip = _manifold(ctx, name, need_boundary=False, min_dim=3)
    if skip:
        return skip
    d = ctx.cx.dim
    b = betti(ctx.cx, ctx.field)
    g = RelativeComplex(ctx.cx).g_vector()
    if g[1] == 0 and len(ctx.cx.vertices) == d + 2:
        s = 1
    elif g[2] == comb(d + 2, 2) * (b[1] - b[0]):
        s = 2
    else:
        return ctx.skip(name, "not certified as a stacked manifold (strict lower bound)")
    facet = ctx.cx.facet_masks[0]
    from .constructions import remove_facet

    punctured = remove_facet(ctx.cx, facet)
    rel = RelativeComplex(punctured, ridge_boundary(punctured))
    gr = rel.g_vector()
    br = betti(rel, ctx.field)
    rs = list(range(s, (d + 1) // 2 + 1))
    lhs = [gr[r] for r in rs]
    rhs = [comb(d + 2, r) * sum((-1) ** (r - j) * br[j - 1] for j in range(1, r + 1)) for r in rs]
    return ctx.report(name, "=", lhs, rhs, s=s, r_values=rs, removed_facet=list(members(facet)))


def _duality(ctx: _Ctx, which: str) -> CheckReport:
    info = classify_homology(ctx.cx, ctx.field)
    if which == "duality_sigma" and info.kind != "ball":
        return ctx.skip(which, f"needs a homology ball, got {info.kind}")
    if which == "duality_mu" and not info.has_boundary:
        return ctx.skip(which, f"needs a homology manifold with boundary, got {info.kind}")
    for rep in duality_checks(ctx.cx, ctx.field, ctx.label):
        if rep.check == which:
            rep.seed = ctx.seed
            return rep
    raise AssertionError(which)


def _morse_pair(ctx: _Ctx) -> CheckReport:
    psi = _pair(ctx)
    strong, weak = morse_bounds(psi, ctx.field)
    k = len(strong.lhs)
    return ctx.report("morse", "<=", list(strong.lhs) + list(weak.lhs), list(strong.rhs) + list(weak.rhs),
                      layout=f"b_0..b_{k - 1} then alternating sums",
                      witnesses=[i for i, (a, b) in enumerate(zip(strong.lhs + weak.lhs, strong.rhs + weak.rhs)) if a > b])


# -- algebra --------------------------------------------------------------------------

def _hochster_vs_resolution(ctx: _Ctx) -> CheckReport:
    name = "hochster_oracle"
    if ctx.n > ctx.opts["oracle_cap"]:
        return ctx.skip(name, f"oracle comparison is capped at {ctx.opts['oracle_cap']} vertices")
    psi = _pair(ctx)
    hoch = graded_betti(psi, ctx.field)
    orac = resolution_oracle(psi, ctx.field, max_vertices=ctx.opts["oracle_cap"])
    keys = sorted(set(hoch.within(orac.degree_bound)) | set(orac.entries))
    lhs = [hoch[k] for k in keys]
    rhs = [orac[k] for k in keys]
    return ctx.report(name, "=", lhs, rhs, index_pairs=[list(k) for k in keys],
                      witnesses=[list(k) for k, a, b in zip(keys, lhs, rhs) if a != b])


def _artinian_vs_h_prime(ctx: _Ctx) -> CheckReport:
    prime = ctx.opts["prime"] or (ctx.field.characteristic or DEFAULT_PRIME)
    rep = schenzel_check(ctx.cx, prime, ctx.opts["reduction_seed"], ctx.opts["retries"], ctx.label)
    rep.seed = ctx.seed
    return rep


def _graded_betti_sums(ctx: _Ctx, which: str) -> CheckReport:
    if which == "prop43_euler":
        psi = _pair(ctx)
        lhs, rhs = prop43_sides(psi, field=ctx.field)
        return ctx.report(which, "=", lhs, rhs)
    for rep in betti_sum_checks(ctx.cx, ctx.field, ctx.label, ctx.opts["wlp_seed"], ctx.opts["wlp_trials"]):
        if rep.check == which:
            if rep.seed is None:
                rep.seed = ctx.seed
            return rep
    raise AssertionError(which)


_DISPATCH: dict[str, Callable[[_Ctx], CheckReport]] = {
    "dehn_sommerville": _relative_dual_h,
    "graebe": _h_reversal_euler,
    "h_and_g": _h_splits_over_boundary,
    "lbt_closed": _g2_closed_bound,
    "main1": _g2_relative_bound,
    "main1_equality": _g2_equality_vs_L,
    "h2_corollary": _h2_interior_bound,
    "main2": _gr_relative_bound,
    "thm55_mu": _gr_mu_bound,
    "prop52": _sigma_alternating_bound,
    "prop61": _sigma0_interior_bound,
    "lemma62": _sigma0_closed_bound,
    "thm63": _g2_mu_bound,
    "missing_faces_eq": _sigma0_missing_faces,
    "criterion_ball": _g2_zero_ball,
    "sharpness_facet_removed": _punctured_stacked_equality,
    "duality_sigma": lambda c: _duality(c, "duality_sigma"),
    "duality_mu": lambda c: _duality(c, "duality_mu"),
    "morse": _morse_pair,
    "hochster_oracle": _hochster_vs_resolution,
    "schenzel": _artinian_vs_h_prime,
    "thm46": lambda c: _graded_betti_sums(c, "thm46"),
    "thm49": lambda c: _graded_betti_sums(c, "thm49"),
    "prop43_euler": lambda c: _graded_betti_sums(c, "prop43_euler"),
    "lemma53": _binomial_identity,
    "lemma54": _link_g_sum,
    "linksum": _link_face_sum,
    "lbt_vertex_deletion": _g2_vertex_link_bound,
}


def run_check(check_id: str, cx: SimplicialComplex, sub: SimplicialComplex | None = None, field=Q,
              label: str = "", seed: int | None = None, options: dict | None = None) -> CheckReport:
    """Evaluate one check; unmet hypotheses give a skipped report."""
    if check_id not in _DISPATCH:
        raise ComplexError(f"unknown check id {check_id!r}")
    opts = dict(DEFAULT_OPTIONS)
    for k, v in (options or {}).items():
        if k not in DEFAULT_OPTIONS:
            raise ComplexError(f"unknown option {k!r}")
        opts[k] = v
    field = as_field(field)
    if cx.is_void:
        raise ComplexError("void complex")
    if sub is not None and not sub.is_void:
        sub = sub.with_ground(sub.support)
    cx = cx.with_ground(cx.support)
    ctx = _Ctx(cx, sub, field, label, seed, opts)
    if check_id in _SIGMA_CHECKS and ctx.n > opts["sigma_cap"]:
        return ctx.skip(check_id, f"σ/μ evaluation is capped at {opts['sigma_cap']} vertices")
    return _DISPATCH[check_id](ctx)


# -- corpus ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    family: str
    params: tuple
    seed: int
    build: Callable[[], SimplicialComplex]

    @property
    def label(self) -> str:
        args = ",".join(str(p) for p in self.params)
        return f"{self.family}({args})#seed={self.seed}"


def _entries() -> dict[str, list[CorpusEntry]]:
    from . import constructions as C

    def e(family, params, seed, fn):
        return CorpusEntry(family, tuple(params), seed, fn)

    def first_facet_removed(cx):
        return C.remove_facet(cx, cx.facet_masks[0])

    def last_vertex_deleted(cx):
        return cx.delete_vertex(max(cx.vertices))

    spheres = [
        e("boundary_of_simplex", (4,), 0, lambda: C.boundary_of_simplex(4)),
        e("boundary_of_simplex", (5,), 0, lambda: C.boundary_of_simplex(5)),
        e("cross_polytope_boundary", (4,), 0, lambda: C.cross_polytope_boundary(4)),
        e("cyclic_polytope_boundary", (4, 6), 0, lambda: C.cyclic_polytope_boundary(4, 6)),
        e("cyclic_polytope_boundary", (4, 7), 0, lambda: C.cyclic_polytope_boundary(4, 7)),
        e("cyclic_polytope_boundary", (4, 8), 0, lambda: C.cyclic_polytope_boundary(4, 8)),
        e("cyclic_polytope_boundary", (5, 8), 0, lambda: C.cyclic_polytope_boundary(5, 8)),
        e("octahedron", (), 0, C.octahedron),
        e("stacked_sphere", (3, 7), 1, lambda: C.stacked_sphere(3, 7, 1)),
        e("stacked_sphere", (3, 8), 7, lambda: C.stacked_sphere(3, 8, 7)),
        e("stacked_sphere", (4, 8), 2, lambda: C.stacked_sphere(4, 8, 2)),
        e("stacked_sphere", (4, 9), 3, lambda: C.stacked_sphere(4, 9, 3)),
        e("linear_stacked_sphere", (3, 8), 0, lambda: C.linear_stacked_sphere(3, 8)),
        e("stacked_sphere", (3, 12), 4, lambda: C.stacked_sphere(3, 12, 4)),
        e("cyclic_polytope_boundary", (4, 11), 0, lambda: C.cyclic_polytope_boundary(4, 11)),
    ]
    balls = [
        e("simplex", (3,), 0, lambda: C.simplex(3)),
        e("simplex", (4,), 0, lambda: C.simplex(4)),
        e("stacked_ball", (3, 2), 0, lambda: C.stacked_ball(3, 2, 0)),
        e("stacked_ball", (3, 4), 5, lambda: C.stacked_ball(3, 4, 5)),
        e("stacked_ball", (4, 3), 6, lambda: C.stacked_ball(4, 3, 6)),
        e("ball_with_stacked_sums", (3, 2, 2), 11, lambda: C.ball_with_stacked_sums(3, 2, 2, 11)),
        e("ball_with_stacked_sums", (3, 3, 3), 12, lambda: C.ball_with_stacked_sums(3, 3, 3, 12)),
        e("ball_with_stacked_sums", (4, 2, 2), 13, lambda: C.ball_with_stacked_sums(4, 2, 2, 13)),
        e("remove_facet:boundary_of_simplex", (4,), 0, lambda: first_facet_removed(C.boundary_of_simplex(4))),
        e("remove_facet:cyclic_polytope_boundary", (4, 7), 0,
          lambda: first_facet_removed(C.cyclic_polytope_boundary(4, 7))),
        e("remove_facet:cyclic_polytope_boundary", (4, 8), 0,
          lambda: first_facet_removed(C.cyclic_polytope_boundary(4, 8))),
        e("remove_facet:cyclic_polytope_boundary", (5, 8), 0,
          lambda: first_facet_removed(C.cyclic_polytope_boundary(5, 8))),
        e("remove_facet:stacked_sphere", (4, 8), 2, lambda: first_facet_removed(C.stacked_sphere(4, 8, 2))),
        e("remove_facet:stacked_sphere", (3, 8), 7, lambda: first_facet_removed(C.stacked_sphere(3, 8, 7))),
        e("remove_facet:cyclic_polytope_boundary", (4, 10), 0,
          lambda: first_facet_removed(C.cyclic_polytope_boundary(4, 10))),
        e("ball_with_stacked_sums", (3, 5, 5), 14, lambda: C.ball_with_stacked_sums(3, 5, 5, 14)),
        e("delete_vertex:cyclic_polytope_boundary", (4, 8), 0,
          lambda: last_vertex_deleted(C.cyclic_polytope_boundary(4, 8))),
        e("delete_vertex:cross_polytope_boundary", (4,), 0,
          lambda: last_vertex_deleted(C.cross_polytope_boundary(4))),
        e("cone", (9, "octahedron"), 0, lambda: C.cone(9, C.octahedron())),
        e("connected_sum:simplex+boundary_of_simplex", (4,), 0,
          lambda: C.connected_sum(C.simplex(4), C.simplex(4).facet_masks[0],
                                  C.boundary_of_simplex(5), C.boundary_of_simplex(5).facet_masks[0])),
    ]
    manifolds = [
        e("handle_addition", (3, 14), 0, lambda: C.handle_addition(3, 14, True)),
        e("handle_addition:twisted", (3, 13), 0, lambda: C.handle_addition(3, 13, False)),
        e("remove_facet:handle_addition", (3, 14), 0, lambda: first_facet_removed(C.handle_addition(3, 14, True))),
        e("remove_facet:handle_addition:twisted", (3, 13), 0,
          lambda: first_facet_removed(C.handle_addition(3, 13, False))),
        e("delete_vertex:handle_addition", (3, 14), 0, lambda: last_vertex_deleted(C.handle_addition(3, 14, True))),
        e("handle_addition", (4, 16), 0, lambda: C.handle_addition(4, 16, True)),
        e("remove_facet:handle_addition", (4, 16), 0, lambda: first_facet_removed(C.handle_addition(4, 16, True))),
        e("handle_addition:twisted", (4, 17), 0, lambda: C.handle_addition(4, 17, False)),
        e("remove_facet:handle_addition:twisted", (4, 17), 0,
          lambda: first_facet_removed(C.handle_addition(4, 17, False))),
        e("minimal_rp2", (), 0, C.minimal_rp2),
        e("suspension:minimal_rp2", (), 0, lambda: C.suspension(C.minimal_rp2())),
        e("remove_facet:suspension:minimal_rp2", (), 0, lambda: first_facet_removed(C.suspension(C.minimal_rp2()))),
    ]
    return {
        "default": spheres + balls + manifolds,
        "spheres-small": spheres,
        "balls-small": balls,
        "manifolds": manifolds,
        "empty": [],
    }


def suite_names() -> list[str]:
    return sorted(_entries())


def suite(name: str) -> list[CorpusEntry]:
    table = _entries()
    if name not in table:
        raise ComplexError(f"unknown suite {name!r}; known: {', '.join(sorted(table))}")
    return table[name]


def _run_entry(args) -> list[dict]:
    entry_index, suite_name, ids, field_label, options = args
    entry = suite(suite_name)[entry_index]
    cx = entry.build()
    out = []
    for cid in ids:
        out.append(run_check(cid, cx, None, FieldSpec.parse(field_label), entry.label, entry.seed, options))
    return out


def run_corpus(suite_name: str, ids: Iterable[str] | None = None, field=Q, jobs: int = 1,
               options: dict | None = None, max_vertices: int = SIGMA_CAP) -> tuple[list[CheckReport], dict]:
    """Run ids over a named suite; reports are sorted by (check, input)."""
    field = as_field(field)
    ids = list(CHECK_IDS if ids is None else ids)
    for cid in ids:
        if cid not in _DISPATCH:
            raise ComplexError(f"unknown check id {cid!r}")
    entries = suite(suite_name)
    for entry in entries:
        n = len(entry.build().vertices)
        if n > max_vertices:
            raise ComplexError(f"{entry.label} has {n} vertices, above the cap of {max_vertices}")
    tasks = [(i, suite_name, ids, field.label, options) for i in range(len(entries))]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_entry, tasks))
    else:
        chunks = [_run_entry(t) for t in tasks]
    reports = sorted((r for chunk in chunks for r in chunk), key=lambda r: (r.check, r.input))
    summary = {"pass": 0, "fail": 0, "skip": 0}
    for r in reports:
        summary[r.status] += 1
    summary["total"] = len(reports)
    return reports, summary
