"""Bitmask-backed faces and canonical finite simplicial complexes.

A face is a set of small non-negative integer vertex labels, packed into a
single Python int (bit v set <=> vertex v present), so subset, union and
intersection are single word operations.  A complex is stored as its
canonical facet list: an antichain of faces, sorted by bitmask value.

Conventions pinned here and relied on everywhere else:

* the empty complex is the empty facet list; a complex "containing only the
  empty face" is identified with it (the collapse terminal state),
* (empty face, sigma) is a free pair exactly when the complex is a simplex,
  which makes simplices 0-collapsible,
* canonicalization never relabels vertices; equality is label-sensitive.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple

from .errors import NotAFaceError, NotFreeError, VertexRangeError

#: Highest representable vertex label.  Faces are one 128-bit mask word.
MAX_VERTEX = 127

_FULL = (1 << (MAX_VERTEX + 1)) - 1


class Face(int):
    """An immutable vertex set packed as a bitmask.

    Being an int subclass, plain bit operations (``a & b``, ``a | ~b``...)
    work directly; they return plain ints, re-wrap with ``Face`` where the
    nicer repr matters.
    """

    __slots__ = ()

    def __new__(cls, mask: int = 0):
        if mask < 0 or mask > _FULL:
            raise VertexRangeError(
                f"face mask out of range (labels must be 0..{MAX_VERTEX})"
            )
        return super().__new__(cls, mask)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Face":
        m = 0
        for v in vertices:
            if not 0 <= v <= MAX_VERTEX:
                raise VertexRangeError(
                    f"vertex label {v!r} outside 0..{MAX_VERTEX}"
                )
            m |= 1 << v
        return cls(m)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.bit_length()) if (self >> v) & 1)

    @property
    def dim(self) -> int:
        return self.bit_count() - 1

    def issubset(self, other: int) -> bool:
        return self & ~other == 0

    def __repr__(self):
        return "Face{%s}" % ",".join(map(str, self.vertices))


EMPTY_FACE = Face(0)


def as_face(obj) -> Face:
    """Coerce an int mask or an iterable of vertex labels to a Face."""
    if isinstance(obj, Face):
        return obj
    if isinstance(obj, int):
        return Face(obj)
    return Face.of(obj)


class FreePair(NamedTuple):
    """A pair (free_face, facet) where facet is the unique facet containing
    free_face; the seed of an elementary collapse."""

    free_face: Face
    facet: Face


def _vertices_of_mask(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if (mask >> v) & 1)


def _antichain(masks: Iterable[int]) -> list[int]:
    """Keep only the maximal masks (subset order), deduplicated, sorted."""
    uniq = sorted(set(masks), key=int.bit_count, reverse=True)
    out: list[int] = []
    for m in uniq:
        for big in out:
            if m & ~big == 0:
                break
        else:
            out.append(m)
    out.sort()
    return out


class SimplicialComplex:
    """A finite simplicial complex given by its canonical facet list.

    Construction canonicalizes: duplicates and non-maximal input faces are
    dropped, facets are sorted by increasing bitmask value.  Instances are
    immutable, hashable and safe to share.
    """

    __slots__ = ("facets", "_hash")

    facets: tuple[Face, ...]

    def __init__(self, facets: Iterable = ()):
        masks = _antichain(
            int(f) if type(f) is Face else int(as_face(f)) for f in facets
        )
        if masks == [0]:
            # identified with the empty complex
            masks = []
        object.__setattr__(self, "facets", tuple(map(Face, masks)))
        object.__setattr__(self, "_hash", hash(self.facets))

    def __setattr__(self, *a):
        raise AttributeError("SimplicialComplex is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return _vertices_of_mask(self.vertex_mask)

    @property
    def dim(self) -> int:
        return max((f.dim for f in self.facets), default=-1)

    @property
    def is_empty(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def is_pure(self) -> bool:
        dims = {f.dim for f in self.facets}
        return len(dims) <= 1

    def __contains__(self, face) -> bool:
        m = int(as_face(face))
        return any(m & ~f == 0 for f in self.facets)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inside = ", ".join(repr(f) for f in self.facets)
        return f"SimplicialComplex([{inside}])"

    # -- face enumeration --------------------------------------------------

    def faces(self, k: int) -> set[Face]:
        """All faces of dimension exactly k (k = -1 gives {empty face} for a
        nonempty complex)."""
        if k < -1:
            raise ValueError("dimension must be >= -1")
        if k == -1:
            return {EMPTY_FACE} if self.facets else set()
        out: set[Face] = set()
        for f in self.facets:
            vs = f.vertices
            if len(vs) >= k + 1:
                for comb in itertools.combinations(vs, k + 1):
                    out.add(Face.of(comb))
        return out

    def all_faces(self, include_empty: bool = True) -> Iterator[Face]:
        """Every face, each exactly once (empty face included iff the complex
        is nonempty)."""
        seen: set[int] = set()
        if include_empty and self.facets:
            seen.add(0)
            yield EMPTY_FACE
        for f in self.facets:
            vs = f.vertices
            for r in range(1, len(vs) + 1):
                for comb in itertools.combinations(vs, r):
                    m = 0
                    for v in comb:
                        m |= 1 << v
                    if m not in seen:
                        seen.add(m)
                        yield Face(m)

    def num_faces(self) -> int:
        """Number of nonempty faces."""
        return sum(1 for _ in self.all_faces(include_empty=False))

    def facet_count_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.facets:
            out[f.dim] = out.get(f.dim, 0) + 1
        return out

    # -- structural operations --------------------------------------------

    def link(self, sigma) -> "SimplicialComplex":
        """lk(sigma, X) = {tau : sigma and tau disjoint, union a face of X}."""
        s = int(as_face(sigma))
        if s == 0:
            return self
        if not any(s & ~f == 0 for f in self.facets):
            raise NotAFaceError(f"{as_face(sigma)!r} is not a face of the complex")
        return SimplicialComplex(
            Face(f & ~s) for f in self.facets if s & ~f == 0
        )

    def deletion(self, sigma) -> "SimplicialComplex":
        """del(sigma, X) = faces of X not containing sigma.

        sigma must be nonempty: deleting the empty face would empty the
        complex and is almost surely a caller bug.
        """
        s = int(as_face(sigma))
        if s == 0:
            raise ValueError("deletion of the empty face is rejected")
        cand: list[int] = []
        for f in self.facets:
            if s & ~f:
                cand.append(int(f))
            else:
                cand.extend(f & ~(1 << v) for v in _vertices_of_mask(s))
        return SimplicialComplex(cand)

    def induced(self, subset) -> "SimplicialComplex":
        """X[A]: faces contained in the vertex set A (labels outside V(X) are
        harmless)."""
        a = int(as_face(subset))
        return SimplicialComplex(f & a for f in self.facets)

    def open_faces(self, k: int) -> set[Face]:
        """Faces sigma of dimension k whose link differs from the induced
        complex on the complementary vertex set.

        For k = 0 this is the set of non-cone vertices (link != deletion).
        """
        if k < 0:
            raise ValueError("k must be >= 0")
        facets = [int(f) for f in self.facets]
        out = set()
        for sigma in self.faces(k):
            s = int(sigma)
            # link(sigma) is always inside the induced complement; equality
            # fails iff some facet g of the induced complement has
            # sigma | g outside the complex
            for g in _antichain(f & ~s for f in facets):
                gs = g | s
                if not any(gs & ~f == 0 for f in facets):
                    out.add(sigma)
                    break
        return out

    def free_pairs(self, d: int) -> list[FreePair]:
        """All free pairs (gamma, sigma) with |gamma| <= d.

        gamma = sigma is allowed (every facet is free in itself); gamma empty
        qualifies exactly when the complex is a simplex.
        """
        if d < 0:
            raise ValueError("d must be >= 0")
        pairs: list[FreePair] = []
        if self.is_simplex:
            pairs.append(FreePair(EMPTY_FACE, self.facets[0]))
        seen: set[int] = set()
        for f in self.facets:
            vs = f.vertices
            for r in range(1, min(d, len(vs)) + 1):
                for comb in itertools.combinations(vs, r):
                    m = 0
                    for v in comb:
                        m |= 1 << v
                    if m in seen:
                        continue
                    seen.add(m)
                    holders = [g for g in self.facets if m & ~g == 0]
                    if len(holders) == 1:
                        pairs.append(FreePair(Face(m), holders[0]))
        pairs.sort(key=lambda p: (p.free_face.bit_count(),
                                  p.free_face.vertices, p.facet.vertices))
        return pairs

    def is_free_pair(self, pair: FreePair) -> bool:
        gamma, sigma = int(pair.free_face), int(pair.facet)
        if gamma & ~sigma:
            return False
        if sigma not in {int(f) for f in self.facets}:
            return False
        holders = sum(1 for f in self.facets if gamma & ~f == 0)
        return holders == 1

    def collapse(self, pair: FreePair) -> "SimplicialComplex":
        """Elementary collapse: remove the interval [gamma, sigma]."""
        if not self.is_free_pair(pair):
            raise NotFreeError(f"{pair!r} is not a free pair of the complex")
        gamma, sigma = int(pair.free_face), int(pair.facet)
        cand = [int(f) for f in self.facets if int(f) != sigma]
        cand.extend(sigma & ~(1 << v) for v in _vertices_of_mask(gamma))
        return SimplicialComplex(cand)

    def skeleton(self, n: int) -> "SimplicialComplex":
        """All faces of dimension <= n."""
        if n > self.dim:
            raise ValueError(f"skeleton dimension {n} exceeds dim {self.dim}")
        cand: list[int] = []
        for f in self.facets:
            if f.dim <= n:
                cand.append(int(f))
            else:
                cand.extend(
                    int(Face.of(c))
                    for c in itertools.combinations(f.vertices, n + 1)
                )
        return SimplicialComplex(cand)

    def pure_skeleton(self, n: int) -> "SimplicialComplex":
        """The subcomplex spanned by the n-dimensional faces."""
        if n > self.dim:
            raise ValueError(f"skeleton dimension {n} exceeds dim {self.dim}")
        return SimplicialComplex(self.faces(n))


def from_facets(raw: Iterable) -> SimplicialComplex:
    """Build a complex from raw vertex sets (duplicates and non-maximal sets
    are removed)."""
    return SimplicialComplex(raw)


def simplex_on(vertices) -> SimplicialComplex:
    return SimplicialComplex([as_face(vertices)])


def boundary(sigma) -> SimplicialComplex:
    """The boundary complex of a single face: all its proper subsets."""
    s = as_face(sigma)
    vs = s.vertices
    if len(vs) <= 1:
        return SimplicialComplex()
    return SimplicialComplex(
        Face.of(c) for c in itertools.combinations(vs, len(vs) - 1)
    )


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join of complexes on disjoint vertex sets."""
    if x.vertex_mask & y.vertex_mask:
        raise ValueError("join requires disjoint vertex sets")
    if x.is_empty:
        return y
    if y.is_empty:
        return x
    return SimplicialComplex(Face(f | g) for f in x.facets for g in y.facets)
