"""Deterministic instance generators for the verification harness.

Identical spec (kind, parameters, seed) always yields an identical instance;
every random draw goes through one seeded random.Random.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .complexes import Face, SimplicialComplex
from .homology import is_k_vertex_decomposable
from .hypergraphs import Hypergraph

Instance = Union[SimplicialComplex, Hypergraph]

#: The 1-vertex-decomposable but not 0-vertex-decomposable 6-vertex,
#: 10-facet, 2-dimensional golden example.
V6F10_6_FACETS = (
    (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 6),
    (2, 4, 5), (2, 5, 6), (3, 4, 6), (3, 5, 6), (4, 5, 6),
)


def v6f10_6() -> SimplicialComplex:
    return SimplicialComplex(V6F10_6_FACETS)


NAMED_EXAMPLES = {
    "v6f10-6": v6f10_6,
    "triangle": lambda: SimplicialComplex([(1, 2, 3)]),
    "three-cycle": lambda: SimplicialComplex([(1, 2), (1, 3), (2, 3)]),
    "tetra-boundary": lambda: SimplicialComplex(
        [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    ),
}


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate; identical spec implies identical instance."""

    kind: str  # random-complex | random-hypergraph | random-graph |
    #            star-family | named-example | random-kvd
    seed: int = 0
    n: int = 6                 # vertex count (random kinds)
    m: int = 8                 # facet / edge count target
    max_size: int = 3          # max facet / edge cardinality
    leaves: tuple[int, ...] = ()   # star-family: leaves per star
    name: str = ""             # named-example
    k: int = 1                 # random-kvd: decomposability parameter
    no_isolated: bool = True   # hypergraph kinds: drop isolated vertices


def _random_complex(rng: random.Random, n: int, m: int, max_size: int
                    ) -> SimplicialComplex:
    verts = list(range(1, n + 1))
    facets = []
    for _ in range(m):
        size = rng.randint(1, min(max_size, n))
        facets.append(Face.of(rng.sample(verts, size)))
    x = SimplicialComplex(facets)
    if x.is_empty:  # m == 0 shouldn't happen, but never emit the empty complex
        x = SimplicialComplex([Face.of([1])])
    return x


def _random_hypergraph(rng: random.Random, n: int, m: int, max_size: int,
                       no_isolated: bool) -> Hypergraph:
    verts = list(range(1, n + 1))
    edges = []
    for _ in range(m):
        size = rng.randint(1, min(max_size, n))
        edges.append(tuple(sorted(rng.sample(verts, size))))
    h = Hypergraph(n, edges)
    if no_isolated:
        h = _drop_isolated(h)
    return h


def _drop_isolated(h: Hypergraph) -> Hypergraph:
    """Remove isolated vertices, compacting labels back to 1..n'.

    A hypergraph whose every vertex is isolated degenerates to the single
    edge {1, 2} on two vertices so theorem hypotheses stay satisfiable.
    """
    iso = h.isolated_vertices()
    if not iso:
        return h
    keep = [v for v in range(1, h.n + 1) if v not in iso]
    if len(keep) < 2:
        return Hypergraph(2, [(1, 2)])
    relabel = {old: i + 1 for i, old in enumerate(keep)}
    edges = [
        tuple(relabel[v] for v in e.vertices)
        for e in h.edges
        if all(v in relabel for v in e.vertices)
    ]
    out = Hypergraph(len(keep), edges)
    # singleton-only incidences can leave fresh isolated vertices
    return _drop_isolated(out) if out.isolated_vertices() else out


def _random_graph(rng: random.Random, n: int, m: int, no_isolated: bool
                  ) -> Hypergraph:
    verts = list(range(1, n + 1))
    edges = []
    for _ in range(m):
        edges.append(tuple(sorted(rng.sample(verts, 2))))
    h = Hypergraph(n, edges)
    if no_isolated:
        h = _drop_isolated(h)
    return h


def star_family(n: int, leaves: tuple[int, ...]) -> Hypergraph:
    """n star graphs with centers a_1..a_n, joined by consecutive center
    edges and one long edge {a_1..a_n}."""
    if n < 2:
        raise ValueError("star family needs n >= 2")
    if len(leaves) != n or any(l < 1 for l in leaves):
        raise ValueError("need one positive leaf count per star")
    centers = list(range(1, n + 1))
    edges = []
    next_label = n + 1
    for i, l in enumerate(leaves):
        for _ in range(l):
            edges.append((centers[i], next_label))
            next_label += 1
    edges.extend((centers[i], centers[i + 1]) for i in range(n - 1))
    edges.append(tuple(centers))
    return Hypergraph(next_label - 1, edges)


def _random_kvd(rng: random.Random, n: int, m: int, max_size: int, k: int
                ) -> SimplicialComplex:
    """Rejection-sample pure complexes until one is k-vertex decomposable."""
    while True:
        size = rng.randint(2, min(max_size, n))
        verts = list(range(1, n + 1))
        count = rng.randint(1, m)
        x = SimplicialComplex(
            Face.of(rng.sample(verts, size)) for _ in range(count)
        )
        if x.is_empty or not x.is_pure():
            continue
        ok, _ = is_k_vertex_decomposable(x, k)
        if ok:
            return x


def generate(spec: GeneratorSpec) -> Instance:
    rng = random.Random(spec.seed)
    if spec.kind == "named-example":
        try:
            return NAMED_EXAMPLES[spec.name]()
        except KeyError:
            raise ValueError(f"unknown named example {spec.name!r}") from None
    if spec.kind == "random-complex":
        return _random_complex(rng, spec.n, spec.m, spec.max_size)
    if spec.kind == "random-hypergraph":
        return _random_hypergraph(rng, spec.n, spec.m, spec.max_size,
                                  spec.no_isolated)
    if spec.kind == "random-graph":
        return _random_graph(rng, spec.n, spec.m, spec.no_isolated)
    if spec.kind == "star-family":
        leaves = spec.leaves or (1,) * spec.n
        return star_family(spec.n, leaves)
    if spec.kind == "random-kvd":
        return _random_kvd(rng, spec.n, spec.m, spec.max_size, spec.k)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
