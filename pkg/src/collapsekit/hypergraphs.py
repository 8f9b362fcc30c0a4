"""Hypergraphs, covers, the non-cover complex and exact domination numbers.

Vertices are 1-based: V = {1, ..., n}.  Subsets are passed around as Python
sets/iterables at the API surface and handled as bitmasks internally.  All
optimizers are increasing-cardinality exhaustive searches with early exit;
exactness over speed, and every result carries a re-checkable witness.

Neighborhood convention: w is a neighbour of v only if w != v, even when a
singleton edge {v} exists (so "isolated" means what it does for graphs).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import Face, SimplicialComplex, as_face
from .errors import HypothesisNotMetError, IsolatedVertexError, UndominatableError
from .invariants import FacetOrdering, mes


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _subsets_by_size(pool: tuple[int, ...]):
    for r in range(len(pool) + 1):
        for comb in itertools.combinations(pool, r):
            yield _mask(comb), comb


class Hypergraph:
    """An ordered pair (V, E): V = {1..n}, E a family of nonempty subsets.

    Exact duplicate edges are dropped; nested edges are kept (domination
    parameters quantify over all edges, only the non-cover complex restricts
    to inclusion-minimal ones).
    """

    __slots__ = ("n", "edges", "_nbr")

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        vmask = _mask(range(1, n + 1))
        masks = []
        seen = set()
        for e in edges:
            m = int(as_face(e))
            if m == 0:
                raise ValueError("empty edge rejected")
            if m & ~vmask:
                raise ValueError(f"edge {sorted(as_face(e).vertices)} outside 1..{n}")
            if m not in seen:
                seen.add(m)
                masks.append(m)
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "edges", tuple(sorted((Face(m) for m in masks),
                                        key=lambda f: f.vertices))
        )
        nbr = [0] * (n + 1)
        for m in masks:
            for v in _bits(m):
                nbr[v] |= m & ~(1 << v)
        object.__setattr__(self, "_nbr", tuple(nbr))

    def __setattr__(self, *a):
        raise AttributeError("Hypergraph is immutable")

    def __eq__(self, other):
        return (isinstance(other, Hypergraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={[sorted(e.vertices) for e in self.edges]})"

    @property
    def vertex_mask(self) -> int:
        return _mask(range(1, self.n + 1))

    # -- neighborhoods -----------------------------------------------------

    def neighbors(self, v: int) -> set[int]:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")
        return set(_bits(self._nbr[v]))

    def neighbors_set(self, subset) -> set[int]:
        m = 0
        for v in as_face(subset).vertices:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside 1..{self.n}")
            m |= self._nbr[v]
        return set(_bits(m))

    def _nbr_mask(self, mask: int) -> int:
        m = 0
        for v in _bits(mask):
            m |= self._nbr[v]
        return m

    def isolated_vertices(self) -> set[int]:
        return {v for v in range(1, self.n + 1) if not self._nbr[v]}

    def induced(self, subset) -> "Hypergraph":
        """Induced sub-hypergraph, keeping the ambient vertex count: edges
        entirely inside the subset."""
        s = int(as_face(subset))
        return Hypergraph(self.n, (e for e in self.edges if int(e) & ~s == 0))

    # -- covers and independence -------------------------------------------

    def is_cover(self, subset) -> bool:
        b = int(as_face(subset))
        return all(e & b for e in self.edges)

    def is_independent(self, subset) -> bool:
        i = int(as_face(subset))
        return not any(int(e) & ~i == 0 for e in self.edges)

    def is_strongly_independent(self, subset) -> bool:
        i = int(as_face(subset))
        return self.is_independent(i) and all(
            (int(e) & i).bit_count() <= 1 for e in self.edges
        )

    def minimal_covers(self):
        """All inclusion-minimal covers, as sorted vertex tuples."""
        out = []
        for m, comb in _subsets_by_size(tuple(range(1, self.n + 1))):
            if self.is_cover(m) and not any(
                self.is_cover(m & ~(1 << v)) for v in comb
            ):
                out.append(comb)
        return out


@dataclass(frozen=True)
class DominationResult:
    """An exact domination value with its certifying witness."""

    value: int
    witness: tuple  # vertices, or edges (as sorted vertex tuples) for gamma_E
    target: tuple[int, ...]  # the dominated vertex set


def non_cover_complex(h: Hypergraph) -> SimplicialComplex:
    """NC(H): vertex sets missing some edge entirely.  Facets are the
    complements of the inclusion-minimal edges."""
    if not h.edges:
        raise ValueError("edgeless hypergraph: every set is a cover, NC is empty")
    vmask = h.vertex_mask
    minimal = [e for e in h.edges
               if not any(int(f) & ~int(e) == 0 and f != e for f in h.edges)]
    return SimplicialComplex(Face(vmask & ~e) for e in minimal)


def nc_facet_order(h: Hypergraph) -> FacetOrdering:
    """Order the facets of NC(H) by their complementary edges written as
    strictly decreasing vertex sequences, compared lexicographically."""
    nc = non_cover_complex(h)
    if nc.is_empty:
        raise ValueError("NC(H) is empty; no facet order")
    vmask = h.vertex_mask

    def edge_key(facet: Face):
        return tuple(sorted(Face(vmask & ~facet).vertices, reverse=True))

    ordered = sorted(nc.facets, key=edge_key)
    return FacetOrdering(nc, ordered)


def nc_bound_order(h: Hypergraph):
    """NC and its facet order after relabeling the maximizing minimal cover
    to the initial segment {1..|D|}.

    The lex facet order only guarantees d(NC, order) <= |V| - gamma_i - 1
    when the cover occupies the smallest labels; with an arbitrary labeling
    the d bound can fail even though C(NC) itself is label-invariant.
    Returns (nc, ordering) for the relabeled copy.
    """
    relabeled, _ = cover_initial_relabeling(h, maximizing_minimal_cover(h))
    nc = non_cover_complex(relabeled)
    return nc, nc_facet_order(relabeled)


def gamma_A(h: Hypergraph, target) -> DominationResult:
    """Minimum W inside the complement of the target with target <= N(W)."""
    a = int(as_face(target))
    if a & ~h.vertex_mask:
        raise ValueError("target outside the vertex set")
    pool = tuple(v for v in range(1, h.n + 1) if not (a >> v) & 1)
    if a & ~h._nbr_mask(_mask(pool)):
        raise UndominatableError(
            f"target {sorted(_bits(a))} cannot be dominated from its complement"
        )
    for m, comb in _subsets_by_size(pool):
        if a & ~h._nbr_mask(m) == 0:
            return DominationResult(len(comb), comb, tuple(_bits(a)))
    raise AssertionError("unreachable: feasibility checked above")


def gamma_i(h: Hypergraph) -> DominationResult:
    """Independence domination number: max over independent sets I of
    gamma_I.

    gamma_A is monotone in A, so the max is attained on a maximal
    independent set, i.e. on the complement of a minimal cover; only those
    are enumerated.
    """
    if h.isolated_vertices():
        raise IsolatedVertexError(
            f"isolated vertices {sorted(h.isolated_vertices())}"
        )
    best = None
    for cover in h.minimal_covers():
        ind = h.vertex_mask & ~_mask(cover)
        res = gamma_A(h, ind)
        if best is None or res.value > best.value:
            best = res
    if best is None:
        # no edges means no isolated-vertex-free instance reaches here
        raise ValueError("hypergraph has no edges")
    return best


# -- Kim-Kim parameters ----------------------------------------------------

def strongly_totally_dominates_vertex(h: Hypergraph, b, v: int) -> bool:
    """Some subset of b - {v}, together with v, forms an edge."""
    bm = int(as_face(b)) & ~(1 << v)
    return any((e >> v) & 1 and int(e) & ~(bm | (1 << v)) == 0 for e in h.edges)


def strongly_dominates(h: Hypergraph, b, w) -> bool:
    bm = int(as_face(b))
    return all(
        strongly_totally_dominates_vertex(h, bm, v)
        for v in as_face(w).vertices
    )


def gamma_strong(h: Hypergraph, w) -> DominationResult:
    """gamma(H; W): minimum B (anywhere in V) strongly dominating W."""
    wm = int(as_face(w))
    if wm & ~h.vertex_mask:
        raise ValueError("target outside the vertex set")
    pool = tuple(range(1, h.n + 1))
    if not strongly_dominates(h, _mask(pool), wm):
        raise UndominatableError(
            f"{sorted(_bits(wm))} cannot be strongly dominated"
        )
    for m, comb in _subsets_by_size(pool):
        if strongly_dominates(h, m, wm):
            return DominationResult(len(comb), comb, tuple(_bits(wm)))
    raise AssertionError("unreachable: feasibility checked above")


def gamma_tilde(h: Hypergraph) -> DominationResult:
    """Strong total domination number: gamma(H; V)."""
    if h.isolated_vertices():
        raise IsolatedVertexError(
            f"isolated vertices {sorted(h.isolated_vertices())}"
        )
    return gamma_strong(h, Face(h.vertex_mask))


def gamma_si(h: Hypergraph) -> DominationResult:
    """Strong independence domination number: max of gamma(H; I) over
    strongly independent I (monotone, so maximal ones suffice)."""
    if h.isolated_vertices():
        raise IsolatedVertexError(
            f"isolated vertices {sorted(h.isolated_vertices())}"
        )
    strongly_ind = [m for m, _ in _subsets_by_size(tuple(range(1, h.n + 1)))
                    if h.is_strongly_independent(m)]
    si_set = set(strongly_ind)
    best = DominationResult(0, (), ())
    for m in strongly_ind:
        if any((m | (1 << v)) in si_set and not (m >> v) & 1
               for v in range(1, h.n + 1)):
            continue  # not maximal
        res = gamma_strong(h, m)
        if res.value > best.value:
            best = res
    return best


def gamma_E(h: Hypergraph) -> DominationResult:
    """Edgewise domination: fewest edges whose union strongly dominates V."""
    if h.isolated_vertices():
        raise IsolatedVertexError(
            f"isolated vertices {sorted(h.isolated_vertices())}"
        )
    vmask = h.vertex_mask
    union_all = 0
    for e in h.edges:
        union_all |= e
    if not strongly_dominates(h, union_all, vmask):
        raise UndominatableError("V cannot be strongly dominated edgewise")
    for r in range(1, len(h.edges) + 1):
        for fam in itertools.combinations(h.edges, r):
            u = 0
            for e in fam:
                u |= e
            if strongly_dominates(h, u, vmask):
                witness = tuple(tuple(e.vertices) for e in fam)
                return DominationResult(r, witness, tuple(_bits(vmask)))
    raise AssertionError("unreachable: feasibility checked above")


# -- probes used by property suites ---------------------------------------

def neighbor_inequality_check(h: Hypergraph, cover, subset) -> bool:
    """|N(S) & complement(D)| - |S| <= |complement(D)| - gamma_{complement(D)}
    for S inside a minimal cover D."""
    dm = int(as_face(cover))
    sm = int(as_face(subset))
    d_verts = tuple(_bits(dm))
    if not (h.is_cover(dm)
            and not any(h.is_cover(dm & ~(1 << v)) for v in d_verts)):
        raise HypothesisNotMetError("D must be an inclusion-minimal cover")
    if sm & ~dm:
        raise HypothesisNotMetError("S must be a subset of D")
    dbar = h.vertex_mask & ~dm
    lhs = (h._nbr_mask(sm) & dbar).bit_count() - sm.bit_count()
    rhs = dbar.bit_count() - gamma_A(h, dbar).value
    return lhs <= rhs


def maximizing_minimal_cover(h: Hypergraph) -> tuple[int, ...]:
    """The lexicographically-first minimal cover D maximizing gamma over its
    complement (the cover realizing gamma_i)."""
    best_val = -1
    best = None
    for cover in h.minimal_covers():
        val = gamma_A(h, h.vertex_mask & ~_mask(cover)).value
        if val > best_val:
            best_val, best = val, cover
    if best is None:
        raise ValueError("hypergraph has no cover (no edges?)")
    return best


def cover_initial_relabeling(h: Hypergraph, cover) -> tuple["Hypergraph", dict[int, int]]:
    """Relabel vertices by an explicit permutation so the given cover becomes
    the initial segment {1..|D|} (order preserved inside the cover and inside
    its complement)."""
    d = sorted(as_face(cover).vertices)
    rest = [v for v in range(1, h.n + 1) if v not in set(d)]
    perm = {old: new + 1 for new, old in enumerate(d + rest)}
    relabeled = Hypergraph(
        h.n, ([perm[v] for v in e.vertices] for e in h.edges)
    )
    return relabeled, perm


def mes_equal_check(h: Hypergraph, gamma, gamma_prime) -> bool:
    """After relabeling the maximizing minimal cover D to {1..|D|}: if the
    two faces of NC(H) have the same complement inside D and the induced
    sub-hypergraph on that complement contains an edge, their minimal
    exclusion sequences under the NC facet order must coincide."""
    d = maximizing_minimal_cover(h)
    relabeled, perm = cover_initial_relabeling(h, d)
    dm = _mask(range(1, len(d) + 1))
    g1 = _mask(perm[v] for v in as_face(gamma).vertices)
    g2 = _mask(perm[v] for v in as_face(gamma_prime).vertices)
    nc = non_cover_complex(relabeled)
    if Face(g1) not in nc or Face(g2) not in nc:
        raise HypothesisNotMetError("both faces must lie in NC(H)")
    vmask = relabeled.vertex_mask
    c1 = (vmask & ~g1) & dm
    c2 = (vmask & ~g2) & dm
    if c1 != c2:
        raise HypothesisNotMetError("complements must agree inside the cover")
    if not any(int(e) & ~c1 == 0 for e in relabeled.edges):
        raise HypothesisNotMetError(
            "induced sub-hypergraph on the cover part contains no edge"
        )
    order = nc_facet_order(relabeled)
    return mes(Face(g1), order) == mes(Face(g2), order)
