"""End-to-end acceptance suite.

Each test covers one numbered criterion and prints a single pass/fail line
even under pytest's output capture.  Certificates and shedding sequences
produced along the way are accumulated and re-validated independently by the
final criterion.
"""

import math
import random

from collapsekit import (
    SimplicialComplex,
    collapsibility_number_with_certificate,
    d_of_ordering,
    gamma_E,
    gamma_i,
    gamma_tilde,
    is_k_vertex_decomposable,
    leray_number,
    mk_chain,
    mk_prime,
    nc_bound_order,
    non_cover_complex,
    reduced_betti,
    verify_shedding_sequence,
)
from collapsekit.generators import GeneratorSpec, generate, star_family, v6f10_6
from collapsekit.invariants import FacetOrdering
from collapsekit.reports import verify

# artifacts produced by criteria 1-5, replayed by criterion 9
COLLAPSE_CERTS = []   # (source complex, certificate)
SHEDDING_SEQS = []    # (source complex, k, witness)


def _report(capsys, label, ok, detail=""):
    with capsys.disabled():
        suffix = f"  ({detail})" if detail and not ok else ""
        print(f"[acceptance] {label}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, f"{label}: {detail}"


def _instances(kind, count, **kw):
    base = GeneratorSpec(kind=kind, **kw)
    for i in range(count):
        yield generate(GeneratorSpec(kind=kind, seed=base.seed * 1_000_003 + i,
                                     **{k: v for k, v in kw.items()
                                        if k != "seed"}))


def test_criterion_1_golden_case(capsys):
    x = v6f10_6()
    failures = []
    c, cert = collapsibility_number_with_certificate(x)
    if c != 2:
        failures.append(f"C={c}")
    COLLAPSE_CERTS.append((x, cert))
    chain = mk_chain(x, 1)
    if chain[1] != 2:
        failures.append(f"M1={chain[1]}")
    if chain[0] < 3:
        failures.append(f"M0={chain[0]}")
    ok1, wit1 = is_k_vertex_decomposable(x, 1)
    if not ok1:
        failures.append("not 1-vertex decomposable")
    else:
        SHEDDING_SEQS.append((x, 1, wit1))
    ok0, _ = is_k_vertex_decomposable(x, 0)
    if ok0:
        failures.append("unexpectedly 0-vertex decomposable")
    _report(capsys, "1 golden 6-vertex example", not failures, "; ".join(failures))


def test_criterion_2_star_family(capsys):
    failures = []
    for n in range(2, 6):
        h = star_family(n, (1,) * n)
        gi = gamma_i(h).value
        ge = gamma_E(h).value
        gt = gamma_tilde(h).value
        if gi < n:
            failures.append(f"n={n}: gamma_i={gi} < {n}")
        if ge != 1:
            failures.append(f"n={n}: gamma_E={ge} != 1")
        if gt > n:
            failures.append(f"n={n}: gamma_tilde={gt} > {n}")
        if n >= 3:
            gap = gi - max(math.ceil(gt / 2), ge)
            if gap < n - math.ceil(n / 2):
                failures.append(f"n={n}: gap={gap}")
    _report(capsys, "2 star-family domination gap", not failures,
            "; ".join(failures))


def test_criterion_3_main_theorem_sweep(capsys):
    failures = []
    for i, h in enumerate(_instances("random-hypergraph", 200,
                                     seed=3, n=7, m=8, max_size=3)):
        bound = h.n - gamma_i(h).value - 1
        if non_cover_complex(h).is_empty:
            if bound < 0:
                failures.append(f"trial {i}: empty NC but bound {bound}")
            continue
        # the lex order bounds d only once the maximizing minimal cover sits
        # on the initial labels, so work with the relabeled copy
        nc, order = nc_bound_order(h)
        d = d_of_ordering(nc, order)
        c, cert = collapsibility_number_with_certificate(nc)
        COLLAPSE_CERTS.append((nc, cert))
        if not c <= d <= bound:
            failures.append(f"trial {i}: C={c}, d={d}, bound={bound}")
    _report(capsys, "3 main theorem, 200 hypergraphs", not failures,
            "; ".join(failures[:3]))


def test_criterion_4_invariant_chain_sweep(capsys):
    failures = []
    rng = random.Random(4)
    for i, x in enumerate(_instances("random-complex", 100,
                                     seed=4, n=7, m=8, max_size=3)):
        l = leray_number(x)
        c, cert = collapsibility_number_with_certificate(x)
        COLLAPSE_CERTS.append((x, cert))
        m0_, m1_, m2_ = mk_chain(x, 2)
        if not l <= c <= m2_ <= m1_ <= m0_:
            failures.append(
                f"trial {i}: L={l}, C={c}, M2={m2_}, M1={m1_}, M0={m0_}")
            continue
        for _ in range(3):
            perm = list(x.facets)
            rng.shuffle(perm)
            d = d_of_ordering(x, FacetOrdering(x, perm))
            if m0_ > d:
                failures.append(f"trial {i}: M0={m0_} > d={d}")
    _report(capsys, "4 invariant chain, 100 complexes x3 orderings",
            not failures, "; ".join(failures[:3]))


def test_criterion_5_equality_theorem(capsys):
    # the C = M_k = M'_k identity holds at the least k that admits a
    # shedding sequence; at any larger k the M'_k recursion pays k+1 per
    # open k-face and can exceed C (two triangles sharing an edge are
    # 0-decomposable with C = M_1 = 1 yet M'_1 = 2), so each instance is
    # checked at its minimal k
    failures = []
    for i, x in enumerate(_instances("random-kvd", 50,
                                     seed=5, n=7, m=8, max_size=3, k=1)):
        ok1, wit1 = is_k_vertex_decomposable(x, 1)
        if not ok1:
            failures.append(f"trial {i}: generator emitted a non-kvd complex")
            continue
        ok0, wit0 = is_k_vertex_decomposable(x, 0)
        k, wit = (0, wit0) if ok0 else (1, wit1)
        SHEDDING_SEQS.append((x, k, wit))
        c, cert = collapsibility_number_with_certificate(x)
        COLLAPSE_CERTS.append((x, cert))
        mkv = mk_chain(x, k)[k]
        mkp = mk_prime(x, k)
        if not c == mkv == mkp:
            failures.append(f"trial {i}: k={k}, C={c}, M_k={mkv}, M'_k={mkp}")
    # strictly 1-decomposable instances are rare under random generation;
    # pin the k = 1 branch on the golden example
    strict = v6f10_6()
    ok0, _ = is_k_vertex_decomposable(strict, 0)
    c = collapsibility_number_with_certificate(strict)[0]
    m1 = mk_chain(strict, 1)[1]
    m1p = mk_prime(strict, 1)
    if ok0 or not c == m1 == m1p == 2:
        failures.append(f"strict: 0-vd={ok0}, C={c}, M1={m1}, M1'={m1p}")
    _report(capsys, "5 equality at minimal k on 50 decomposable complexes",
            not failures, "; ".join(failures[:3]))


def test_criterion_6_gamma_si_equality(capsys):
    summary = verify("gamma-si-eq",
                     GeneratorSpec(kind="random-graph", seed=6, n=6, m=8),
                     trials=200)
    ok = summary["fails"] == 0 and summary["passes"] > 0
    _report(capsys, "6 gamma_i = gamma_si on 200 graphs", ok,
            str(summary.get("counterexample", "")))


def test_criterion_7_structural_property_suites(capsys):
    suites = [
        ("link-del-commute", GeneratorSpec(kind="random-complex", seed=71,
                                           n=6, m=6)),
        ("open-faces-simplex", GeneratorSpec(kind="random-complex", seed=72,
                                             n=7, m=8)),
        ("neighbor-inequality", GeneratorSpec(kind="random-graph", seed=73,
                                              n=6, m=8)),
        ("mes-equal", GeneratorSpec(kind="random-hypergraph", seed=74,
                                    n=6, m=7)),
        ("tancer", GeneratorSpec(kind="random-complex", seed=75, n=6, m=7)),
        ("claim", GeneratorSpec(kind="random-complex", seed=76, n=5, m=6)),
    ]
    failures = []
    for theorem, spec in suites:
        summary = verify(theorem, spec, trials=200)
        if summary["fails"]:
            failures.append(f"{theorem}: {summary['counterexample']['detail']}")
        elif summary["passes"] == 0:
            failures.append(f"{theorem}: all 200 trials skipped")
    _report(capsys, "7 structural property suites x200", not failures,
            "; ".join(failures))


def test_criterion_8_homology_oracles(capsys):
    failures = []
    cyc = SimplicialComplex([(1, 2), (2, 3), (1, 3)])
    if reduced_betti(cyc).ranks != (0, 1):
        failures.append("three-cycle betti")
    tetra = SimplicialComplex([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    if reduced_betti(tetra).ranks != (0, 0, 1):
        failures.append("tetra-boundary betti")
    euler = verify("euler", GeneratorSpec(kind="random-complex", seed=81,
                                          n=7, m=8), trials=200)
    if euler["fails"]:
        failures.append(f"euler: {euler['counterexample']['detail']}")
    leray = verify("leray-methods",
                   GeneratorSpec(kind="random-complex", seed=82, n=8, m=9),
                   trials=100)
    if leray["fails"]:
        failures.append(f"leray-methods: {leray['counterexample']['detail']}")
    cm = verify("cm-equivalence",
                GeneratorSpec(kind="random-complex", seed=83, n=6, m=7),
                trials=100)
    if cm["fails"]:
        failures.append(f"cm-equivalence: {cm['counterexample']['detail']}")
    elif cm["passes"] == 0:
        failures.append("cm-equivalence: no induced-CM instances sampled")
    _report(capsys, "8 homology oracles", not failures, "; ".join(failures))


def test_criterion_9_certificate_replay(capsys):
    failures = []
    if not COLLAPSE_CERTS or not SHEDDING_SEQS:
        failures.append("no artifacts accumulated (criteria 1-5 must run first)")
    for i, (source, cert) in enumerate(COLLAPSE_CERTS):
        if not cert.replay(source):
            failures.append(f"collapse certificate {i} fails replay")
    for i, (source, k, wit) in enumerate(SHEDDING_SEQS):
        if not verify_shedding_sequence(source, k, wit):
            failures.append(f"shedding sequence {i} fails replay")
    _report(capsys,
            f"9 replay of {len(COLLAPSE_CERTS)} certificates and "
            f"{len(SHEDDING_SEQS)} shedding sequences",
            not failures, "; ".join(failures[:3]))
