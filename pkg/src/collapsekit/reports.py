"""Invariant reports, the theorem-verification registry, and conjecture
search.

Reports are plain dicts serialized as sorted-key JSON, so identical
(instance, flags, seed) give byte-identical output.  Every witness placed in
a report re-validates against the instance through the library predicates.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import random
from dataclasses import replace
from typing import Optional

from . import hypergraphs as hg
from .complexes import Face, FreePair, SimplicialComplex
from .errors import Budget, HypothesisNotMetError
from .generators import GeneratorSpec, generate
from .homology import (
    is_cohen_macaulay,
    is_cohen_macaulay_induced,
    is_k_vertex_decomposable,
    is_shellable,
    leray_number,
    reduced_betti,
    shedding_leray_inequality_check,
)
from .hypergraphs import Hypergraph, nc_facet_order, non_cover_complex
from .invariants import (
    FacetOrdering,
    canonical_ordering,
    claim_inequality_check,
    collapsibility_number_with_certificate,
    d_of_ordering,
    mes,
    mk_chain,
    tancer_inequality_check,
    _MkEngine,
)
from .io import instance_to_json, instance_to_obj

SCHEMA_VERSION = 1


def _serialize_certificate(cert) -> dict:
    return {
        "claimed_d": cert.claimed_d,
        "steps": [
            [list(p.free_face.vertices), list(p.facet.vertices)]
            for p in cert.steps
        ],
    }


def certificate_from_obj(obj) -> "CollapseCertificate":
    from .invariants import CollapseCertificate

    steps = tuple(
        FreePair(Face.of(g), Face.of(s)) for g, s in obj["steps"]
    )
    return CollapseCertificate(steps, obj["claimed_d"])


def _descriptor(inst) -> dict:
    payload = instance_to_json(inst).encode()
    kind = "complex" if isinstance(inst, SimplicialComplex) else "hypergraph"
    return {
        "format": kind,
        "sha256": hashlib.sha256(payload).hexdigest(),
        "content": instance_to_obj(inst),
    }


# -- invariant registry ----------------------------------------------------

def _inv_C(x, budget, field, values, witnesses):
    d, cert = collapsibility_number_with_certificate(x, budget)
    values["C"] = d
    witnesses["collapse_certificate"] = _serialize_certificate(cert)


def _inv_mk(k):
    def run(x, budget, field, values, witnesses):
        values[f"M{k}"] = mk_chain(x, k, budget)[k]
    return run


def _inv_d_mes(x, budget, field, values, witnesses):
    ordering = canonical_ordering(x)
    values["d_mes"] = d_of_ordering(x, ordering)
    witnesses["facet_ordering"] = [list(f.vertices)
                                   for f in ordering.ordered_facets]


def _inv_leray(x, budget, field, values, witnesses):
    values["leray"] = leray_number(x, field)


def _inv_betti(x, budget, field, values, witnesses):
    b = reduced_betti(x, field)
    values["betti"] = {"field": b.coefficient_field,
                       "rank_neg1": b.rank_neg1,
                       "ranks": list(b.ranks)}


def _inv_shellable(x, budget, field, values, witnesses):
    ok, order = is_shellable(x, budget)
    values["shellable"] = ok
    if ok:
        witnesses["shelling_order"] = [list(f.vertices) for f in order]


def _inv_cm(x, budget, field, values, witnesses):
    values["cohen_macaulay"] = is_cohen_macaulay(x, field)


def _inv_kvd(k):
    def run(x, budget, field, values, witnesses):
        ok, wit = is_k_vertex_decomposable(x, k, budget)
        values[f"kvd{k}"] = ok
        if ok:
            witnesses[f"shedding_sequence_k{k}"] = [
                [list(w.face.vertices), w.dim_bound] for w in wit
            ]
    return run


def _inv_gamma(name, fn):
    def run(h, budget, field, values, witnesses):
        res = fn(h)
        values[name] = res.value
        witnesses[name + "_witness"] = {
            "witness": [list(w) if isinstance(w, tuple) else w
                        for w in res.witness],
            "target": list(res.target),
        }
    return run


def _inv_nc(name):
    def run(h, budget, field, values, witnesses):
        nc = non_cover_complex(h)
        if name == "nc_C":
            d, cert = collapsibility_number_with_certificate(nc, budget)
            values["nc_C"] = d
            witnesses["nc_collapse_certificate"] = _serialize_certificate(cert)
        elif name == "nc_d":
            order = nc_facet_order(h)
            values["nc_d"] = d_of_ordering(nc, order)
            witnesses["nc_facet_ordering"] = [list(f.vertices)
                                              for f in order.ordered_facets]
        elif name == "nc_leray":
            values["nc_leray"] = leray_number(nc, field)
    return run


COMPLEX_INVARIANTS = {
    "C": _inv_C,
    "M0": _inv_mk(0),
    "M1": _inv_mk(1),
    "M2": _inv_mk(2),
    "d_mes": _inv_d_mes,
    "leray": _inv_leray,
    "betti": _inv_betti,
    "shellable": _inv_shellable,
    "cohen_macaulay": _inv_cm,
    "kvd0": _inv_kvd(0),
    "kvd1": _inv_kvd(1),
    "kvd2": _inv_kvd(2),
}

HYPERGRAPH_INVARIANTS = {
    "gamma_i": _inv_gamma("gamma_i", hg.gamma_i),
    "gamma_tilde": _inv_gamma("gamma_tilde", hg.gamma_tilde),
    "gamma_si": _inv_gamma("gamma_si", hg.gamma_si),
    "gamma_E": _inv_gamma("gamma_E", hg.gamma_E),
    "nc_C": _inv_nc("nc_C"),
    "nc_d": _inv_nc("nc_d"),
    "nc_leray": _inv_nc("nc_leray"),
}


def registry_for(inst) -> dict:
    if isinstance(inst, SimplicialComplex):
        return COMPLEX_INVARIANTS
    return HYPERGRAPH_INVARIANTS


def compute(
    inst,
    which: Optional[list[str]] = None,
    budget_limit: int = 10_000_000,
    field="Q",
    seed: Optional[int] = None,
) -> dict:
    """Evaluate the requested invariants and return a report dict.

    Budget exhaustion on one invariant is recorded per-invariant and does not
    abort the rest.
    """
    registry = registry_for(inst)
    if which is None or which == ["all"]:
        which = list(registry)
    unknown = [name for name in which if name not in registry]
    if unknown:
        raise KeyError(f"unknown invariant(s) {unknown}; "
                       f"known: {sorted(registry)}")
    values: dict = {}
    witnesses: dict = {}
    exhausted = []
    used = 0
    for name in which:
        budget = Budget(budget_limit)
        try:
            registry[name](inst, budget, field, values, witnesses)
        except Exception as exc:  # budget or infeasibility, flagged per-invariant
            from .errors import BudgetExceededError

            if isinstance(exc, BudgetExceededError):
                exhausted.append(name)
            else:
                raise
        used += budget.used
    report = {
        "schema": SCHEMA_VERSION,
        "instance": _descriptor(inst),
        "values": values,
        "witnesses": witnesses,
        "budget": {"limit_per_invariant": budget_limit, "used_total": used,
                   "exhausted": exhausted},
        "field": field if isinstance(field, str) else str(field),
    }
    if seed is not None:
        report["seed"] = seed
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


# -- theorem registry ------------------------------------------------------

class Counterexample(Exception):
    def __init__(self, inst, detail: str):
        super().__init__(detail)
        self.instance = inst
        self.detail = detail


def _trial_instance(spec: GeneratorSpec, index: int):
    return generate(replace(spec, seed=(spec.seed * 1_000_003 + index)))


def _chk(cond: bool, inst, detail: str):
    if not cond:
        raise Counterexample(inst, detail)


def _random_orderings(x: SimplicialComplex, rng: random.Random, count: int):
    for _ in range(count):
        perm = list(x.facets)
        rng.shuffle(perm)
        yield FacetOrdering(x, perm)


def _thm_nc_bound(h: Hypergraph, rng, budget) -> str:
    gi = hg.gamma_i(h).value
    bound = h.n - gi - 1
    if non_cover_complex(h).is_empty:
        _chk(0 <= bound, h, f"NC empty but bound {bound} < 0")
        return "pass"
    # the d bound needs the maximizing cover relabeled to an initial segment
    nc, order = hg.nc_bound_order(h)
    d = d_of_ordering(nc, order)
    c, _ = collapsibility_number_with_certificate(nc, budget)
    _chk(c <= d <= bound, h, f"C={c}, d={d}, |V|-gamma_i-1={bound}")
    return "pass"


def _thm_mk_chain(x: SimplicialComplex, rng, budget) -> str:
    l = leray_number(x)
    c, _ = collapsibility_number_with_certificate(x, budget)
    m0_, m1_, m2_ = mk_chain(x, 2, budget)
    _chk(l <= c <= m2_ <= m1_ <= m0_, x,
         f"L={l}, C={c}, M2={m2_}, M1={m1_}, M0={m0_}")
    for order in _random_orderings(x, rng, 3):
        d = d_of_ordering(x, order)
        _chk(m0_ <= d, x, f"M0={m0_} > d={d} for {order!r}")
    return "pass"


def _thm_m0_le_mes(x: SimplicialComplex, rng, budget) -> str:
    m0_ = mk_chain(x, 0, budget)[0]
    for order in _random_orderings(x, rng, 3):
        d = d_of_ordering(x, order)
        _chk(m0_ <= d, x, f"M0={m0_} > d={d}")
    return "pass"


def _thm_kvd_equality(x: SimplicialComplex, rng, budget) -> str:
    # the equality C = M_k = M'_k is tied to the least k admitting a
    # shedding sequence: whenever open k-faces exist, M'_k pays k+1 and can
    # overshoot C on complexes that are already (k-1)-decomposable, e.g. the
    # two triangles {123},{234} have C = M_1 = 1 but M'_1 = 2
    k = None
    for candidate in (0, 1):
        ok, _ = is_k_vertex_decomposable(x, candidate, budget)
        if ok:
            k = candidate
            break
    if k is None:
        return "skip"
    c, _ = collapsibility_number_with_certificate(x, budget)
    engine = _MkEngine(budget)
    mkv = engine.m(x, k)
    mkp = engine.m_prime(x, k)
    _chk(c == mkv == mkp, x, f"k={k}: C={c}, M_k={mkv}, M'_k={mkp}")
    return "pass"


def _thm_gamma_si_eq(h: Hypergraph, rng, budget) -> str:
    if any(e.bit_count() > 2 for e in h.edges):
        return "skip"
    gi = hg.gamma_i(h).value
    gsi = hg.gamma_si(h).value
    _chk(gi == gsi, h, f"gamma_i={gi} != gamma_si={gsi}")
    return "pass"


def _thm_tancer(x: SimplicialComplex, rng, budget) -> str:
    for v in x.vertices:
        _chk(tancer_inequality_check(x, [v], budget), x,
             f"Tancer inequality fails at vertex {v}")
    return "pass"


def _thm_claim(x: SimplicialComplex, rng, budget) -> str:
    for k in range(0, min(x.dim, 2) + 1):
        for sigma in sorted(x.faces(k)):
            _chk(claim_inequality_check(x, sigma, budget), x,
                 f"claim inequality fails at {sigma!r}")
    return "pass"


def _thm_link_del_commute(x: SimplicialComplex, rng, budget) -> str:
    faces = sorted(x.all_faces())
    for sigma in faces:
        if sigma == 0:
            continue
        for tau in faces:
            if int(sigma) & int(tau):
                continue
            lhs = x.deletion(sigma).link(tau) if tau in x.deletion(sigma) else None
            rhs = x.link(tau).deletion(sigma)
            if lhs is None:
                continue
            _chk(lhs == rhs, x,
                 f"link/deletion commutativity fails for {sigma!r},{tau!r}")
    return "pass"


def _thm_open_faces_simplex(x: SimplicialComplex, rng, budget) -> str:
    for k in range(0, x.dim + 1):
        if not x.open_faces(k):
            _chk(x.is_simplex, x, f"open {k}-faces empty on a non-simplex")
    return "pass"


def _thm_neighbor_inequality(h: Hypergraph, rng, budget) -> str:
    for cover in h.minimal_covers():
        for r in range(len(cover) + 1):
            for s in itertools.combinations(cover, r):
                _chk(hg.neighbor_inequality_check(h, cover, s), h,
                     f"neighbor inequality fails: D={cover}, S={s}")
    return "pass"


def _thm_mes_equal(h: Hypergraph, rng, budget) -> str:
    try:
        d = hg.maximizing_minimal_cover(h)
    except ValueError:
        return "skip"
    relabeled, perm = hg.cover_initial_relabeling(h, d)
    nc = non_cover_complex(relabeled)
    if nc.is_empty:
        return "skip"
    dm = 0
    for v in range(1, len(d) + 1):
        dm |= 1 << v
    order = nc_facet_order(relabeled)
    vmask = relabeled.vertex_mask
    groups: dict[int, set] = {}
    for gamma in nc.all_faces():
        key = (vmask & ~int(gamma)) & dm
        if not any(int(e) & ~key == 0 for e in relabeled.edges):
            continue  # hypothesis: the cover part must contain an edge
        groups.setdefault(key, set()).add(mes(gamma, order))
    for key, seqs in groups.items():
        _chk(len(seqs) == 1, h,
             f"mes not constant on cover-complement class {key:b}: {seqs}")
    return "pass"


def _thm_leray_methods(x: SimplicialComplex, rng, budget) -> str:
    leray_number(x, method="both")  # raises on disagreement
    return "pass"


def _thm_cm_equivalence(x: SimplicialComplex, rng, budget) -> str:
    # one-directional: induced homological connectivity forces Reisner's
    # criterion, but not conversely ({145},{345},{156} satisfies the link
    # condition while its induced subcomplex on {1,3,6} is disconnected)
    pure = x.pure_skeleton(x.dim) if not x.is_pure() else x
    if not is_cohen_macaulay_induced(pure):
        return "skip"
    _chk(is_cohen_macaulay(pure), pure, "induced-CM but not links-CM")
    return "pass"


def _thm_shed_leray(x: SimplicialComplex, rng, budget) -> str:
    ok, _ = is_k_vertex_decomposable(x, 1, budget)
    if not ok:
        return "skip"
    checked = False
    for k in range(0, min(x.dim, 1) + 1):
        for sigma in sorted(x.faces(k)):
            try:
                _chk(shedding_leray_inequality_check(x, sigma), x,
                     f"shedding Leray inequality fails at {sigma!r}")
                checked = True
            except HypothesisNotMetError:
                continue
    return "pass" if checked else "skip"


def _thm_euler(x: SimplicialComplex, rng, budget) -> str:
    b = reduced_betti(x)
    chi_faces = -1  # the empty face counts once (also for the empty complex)
    for f in x.all_faces(include_empty=False):
        chi_faces += (-1) ** f.dim
    chi_betti = -b.rank_neg1 + sum(
        (-1) ** i * r for i, r in enumerate(b.ranks)
    )
    _chk(chi_faces == chi_betti, x,
         f"Euler mismatch: faces {chi_faces} vs betti {chi_betti}")
    return "pass"


def _thm_kim_kim(h: Hypergraph, rng, budget) -> str:
    nc = non_cover_complex(h)
    l = leray_number(nc) if not nc.is_empty else 0
    max_edge = max(e.bit_count() for e in h.edges)
    ge = hg.gamma_E(h).value
    _chk(l <= h.n - ge - 1, h, f"L={l} > n-gamma_E-1={h.n - ge - 1}")
    if max_edge <= 3:
        gt = hg.gamma_tilde(h).value
        bound = h.n - math.ceil(gt / 2) - 1
        _chk(l <= bound, h, f"L={l} > n-ceil(gamma_tilde/2)-1={bound}")
    if max_edge <= 2:
        gsi = hg.gamma_si(h).value
        _chk(l <= h.n - gsi - 1, h, f"L={l} > n-gamma_si-1={h.n - gsi - 1}")
    return "pass"


def _thm_gamma_monotone(h: Hypergraph, rng, budget) -> str:
    from .errors import UndominatableError

    verts = list(range(1, h.n + 1))
    rng.shuffle(verts)
    prev = -1
    acc = []
    for v in verts:
        acc.append(v)
        try:
            val = hg.gamma_A(h, acc).value
        except UndominatableError:
            break
        _chk(val >= prev, h, f"gamma_A not monotone along {acc}")
        prev = val
    return "pass"


THEOREMS = {
    "nc-bound": ("random-hypergraph", _thm_nc_bound),
    "mk-chain": ("random-complex", _thm_mk_chain),
    "m0-le-mes": ("random-complex", _thm_m0_le_mes),
    "kvd-equality": ("random-kvd", _thm_kvd_equality),
    "gamma-si-eq": ("random-graph", _thm_gamma_si_eq),
    "tancer": ("random-complex", _thm_tancer),
    "claim": ("random-complex", _thm_claim),
    "link-del-commute": ("random-complex", _thm_link_del_commute),
    "open-faces-simplex": ("random-complex", _thm_open_faces_simplex),
    "neighbor-inequality": ("random-graph", _thm_neighbor_inequality),
    "mes-equal": ("random-hypergraph", _thm_mes_equal),
    "leray-methods": ("random-complex", _thm_leray_methods),
    "cm-equivalence": ("random-complex", _thm_cm_equivalence),
    "shed-leray": ("random-kvd", _thm_shed_leray),
    "euler": ("random-complex", _thm_euler),
    "kim-kim": ("random-hypergraph", _thm_kim_kim),
    "gamma-monotone": ("random-hypergraph", _thm_gamma_monotone),
}


def verify(
    theorem: str,
    spec: Optional[GeneratorSpec] = None,
    trials: int = 100,
    budget_limit: int = 10_000_000,
) -> dict:
    """Run `trials` independent random instances through one theorem check.

    Any failure stops the run and attaches the counterexample instance to
    the summary.
    """
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem {theorem!r}; known: {sorted(THEOREMS)}")
    default_kind, fn = THEOREMS[theorem]
    spec = spec or GeneratorSpec(kind=default_kind)
    summary = {"theorem": theorem, "trials": trials,
               "passes": 0, "fails": 0, "skips": 0}
    for i in range(trials):
        inst = _trial_instance(spec, i)
        rng = random.Random(f"{spec.seed}:{theorem}:{i}")
        try:
            outcome = fn(inst, rng, Budget(budget_limit))
        except Counterexample as cx:
            summary["fails"] += 1
            summary["counterexample"] = {
                "trial": i,
                "detail": cx.detail,
                "instance": instance_to_obj(cx.instance),
            }
            return summary
        if outcome == "pass":
            summary["passes"] += 1
        else:
            summary["skips"] += 1
    return summary


def conjecture_search(
    k: int,
    spec: Optional[GeneratorSpec] = None,
    trials: int = 100,
    budget_limit: int = 10_000_000,
) -> list[dict]:
    """Look for complexes with M_k < M_{k-1}.  An empty list is an honest
    outcome; every candidate re-verifies with a fresh memo table."""
    if k < 1:
        raise ValueError("k must be >= 1")
    spec = spec or GeneratorSpec(kind="random-complex")
    found = []
    for i in range(trials):
        x = _trial_instance(spec, i)
        chain = mk_chain(x, k, Budget(budget_limit))
        if chain[k] < chain[k - 1]:
            # recompute with fresh memo tables before reporting
            again = mk_chain(x, k, Budget(budget_limit))
            assert again == chain
            found.append({
                "instance": instance_to_obj(x),
                f"M{k - 1}": chain[k - 1],
                f"M{k}": chain[k],
                "trial": i,
            })
    return found
