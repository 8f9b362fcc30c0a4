"""Text file formats for instances.

Complex files:   {"vertices": [int...], "facets": [[int...]...]}
Hypergraph files: {"n": int, "edges": [[int...]...]}   (1-based vertices)

Facet lists need not be pre-canonicalized; the complex loader canonicalizes
and reports what it removed.
"""

from __future__ import annotations

import json
from typing import Union

from .complexes import Face, SimplicialComplex
from .hypergraphs import Hypergraph

Instance = Union[SimplicialComplex, Hypergraph]


def complex_to_obj(x: SimplicialComplex) -> dict:
    return {
        "vertices": list(x.vertices),
        "facets": [list(f.vertices) for f in x.facets],
    }


def hypergraph_to_obj(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [list(e.vertices) for e in h.edges]}


def instance_to_obj(inst: Instance) -> dict:
    if isinstance(inst, SimplicialComplex):
        return complex_to_obj(inst)
    return hypergraph_to_obj(inst)


def instance_to_json(inst: Instance) -> str:
    return json.dumps(instance_to_obj(inst), sort_keys=True)


def complex_from_obj(obj: dict) -> tuple[SimplicialComplex, list[list[int]]]:
    """Returns the canonicalized complex and the raw facets that were dropped
    (duplicates / non-maximal)."""
    raw = obj["facets"]
    x = SimplicialComplex(raw)
    kept = {int(f) for f in x.facets}
    dropped = []
    seen = set()
    for r in raw:
        m = int(Face.of(r))
        if m not in kept or m in seen:
            dropped.append(sorted(set(r)))
        seen.add(m)
    declared = obj.get("vertices")
    if declared is not None:
        have = set(x.vertices)
        extra = [v for v in declared if v not in have]
        # isolated vertices must be represented as singleton facets
        if extra:
            x = SimplicialComplex(list(x.facets) + [Face.of([v]) for v in extra])
    return x, dropped


def hypergraph_from_obj(obj: dict) -> Hypergraph:
    return Hypergraph(obj["n"], obj["edges"])


def load_instance(path: str) -> Instance:
    with open(path) as fh:
        obj = json.load(fh)
    if "edges" in obj:
        return hypergraph_from_obj(obj)
    if "facets" in obj:
        return complex_from_obj(obj)[0]
    raise ValueError(f"{path}: neither a complex nor a hypergraph file")


def dump_instance(inst: Instance, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(instance_to_json(inst))
        fh.write("\n")
