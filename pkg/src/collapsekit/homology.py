"""Exact reduced simplicial homology and the invariants built on it.

Betti numbers come from ranks of boundary matrices of the augmented chain
complex, computed by fraction-free (Bareiss) integer elimination for the
rational field, or by modular elimination for a prime field.  Torsion is out
of scope; only ranks are ever needed.

On top of that: Leray numbers (two cross-checked routes), homological
connectivity, both Cohen-Macaulay predicates, shellability and k-vertex
decomposability with replayable shedding witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .complexes import Face, SimplicialComplex, as_face
from .errors import Budget, HypothesisNotMetError, NotPureError

#: Above this many vertices the brute-force Leray route is refused.
LERAY_VERTEX_CAP = 14

Field = Union[str, int]  # "Q" or a prime modulus


def _parse_field(field: Field) -> Optional[int]:
    """None for the rationals, else the prime modulus."""
    if field in ("Q", "rational", None):
        return None
    if isinstance(field, str):
        if field.lower().startswith("gf"):
            field = int(field[2:])
        else:
            field = int(field)
    p = int(field)
    if p < 2:
        raise ValueError(f"not a valid prime field: {field!r}")
    return p


def _field_tag(field: Field) -> str:
    p = _parse_field(field)
    return "Q" if p is None else f"GF{p}"


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    a = [row[:] for row in rows]
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        for r in range(row + 1, m):
            f = a[r][col]
            # zero-pivot rows still need rescaling for the exact division
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * p - a[row][c] * f) // prev
            a[r][col] = 0
        prev = p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    a = [[v % p for v in row] for row in rows]
    rank = 0
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], p - 2, p)
        arow = a[row]
        for r in range(row + 1, m):
            f = a[r][col]
            if f:
                f = f * inv % p
                ar = a[r]
                for c in range(col, n):
                    ar[c] = (ar[c] - f * arow[c]) % p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over a fixed coefficient field.

    `ranks[i]` is the rank of reduced homology in degree i >= 0; `rank_neg1`
    is the degree -1 rank (1 exactly for the empty complex, by the standard
    reduced convention the rest of the code relies on).
    """

    coefficient_field: str
    rank_neg1: int
    ranks: tuple[int, ...]

    def rank(self, i: int) -> int:
        if i == -1:
            return self.rank_neg1
        if i < -1:
            return 0
        return self.ranks[i] if i < len(self.ranks) else 0

    def top_nonzero_degree(self) -> int:
        """Largest i >= 0 with a nonzero rank, or -1 if none."""
        for i in range(len(self.ranks) - 1, -1, -1):
            if self.ranks[i]:
                return i
        return -1


def _boundary_matrix(
    lower: list[Face], upper: list[Face]
) -> list[list[int]]:
    """Rows indexed by (k-1)-faces, columns by k-faces, entries the usual
    alternating signs."""
    index = {int(f): i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for col, f in enumerate(upper):
        vs = f.vertices
        for i in range(len(vs)):
            sub = int(f) & ~(1 << vs[i])
            rows[index[sub]][col] = -1 if i % 2 else 1
    return rows


def reduced_betti(x: SimplicialComplex, field: Field = "Q") -> BettiVector:
    """Reduced Betti numbers of x over the chosen field.

    The empty complex is identified with the complex whose only face is the
    empty face, so its degree -1 rank is 1.
    """
    p = _parse_field(field)
    tag = _field_tag(field)
    if x.is_empty:
        return BettiVector(tag, 1, ())
    dim = x.dim
    by_dim: list[list[Face]] = [sorted(x.faces(k)) for k in range(dim + 1)]
    counts = [len(fs) for fs in by_dim]
    # augmented d_0: every vertex maps to the empty face
    ranks_of_boundary = [1 if counts[0] else 0]
    for k in range(1, dim + 1):
        mat = _boundary_matrix(by_dim[k - 1], by_dim[k])
        ranks_of_boundary.append(
            _rank_bareiss(mat) if p is None else _rank_mod_p(mat, p)
        )
    ranks_of_boundary.append(0)
    betti = tuple(
        counts[k] - ranks_of_boundary[k] - ranks_of_boundary[k + 1]
        for k in range(dim + 1)
    )
    return BettiVector(tag, 1 - ranks_of_boundary[0], betti)


class _BettiCache:
    """Per-evaluation cache of Betti vectors, keyed on exact facet tuples."""

    def __init__(self, field: Field):
        self.field = field
        self._memo: dict[tuple, BettiVector] = {}

    def get(self, y: SimplicialComplex) -> BettiVector:
        key = y.facets
        if key not in self._memo:
            self._memo[key] = reduced_betti(y, self.field)
        return self._memo[key]


def is_homologically_connected(
    x: SimplicialComplex, n: int, field: Field = "Q"
) -> bool:
    """True iff the reduced homology vanishes in every degree i <= n.

    n < -1 is vacuously true; at n = -1 the empty complex fails (its degree
    -1 rank is nonzero).
    """
    if n < -1:
        return True
    b = reduced_betti(x, field)
    if b.rank_neg1:
        return False
    return all(b.ranks[i] == 0 for i in range(min(n, len(b.ranks) - 1) + 1))


def leray_number(
    x: SimplicialComplex,
    field: Field = "Q",
    method: str = "both",
    vertex_cap: int = LERAY_VERTEX_CAP,
) -> int:
    """Least k such that reduced homology vanishes in degrees >= k for every
    induced subcomplex.

    method "induced" is the brute force over all vertex subsets (the oracle,
    refused above `vertex_cap` vertices); "links" uses the equivalent link
    criterion (L >= d iff some link has nonzero homology in degree d-1) and
    scales past the cap; "both" runs the two and insists they agree.
    """
    if method not in ("both", "induced", "links"):
        raise ValueError(f"unknown leray method {method!r}")
    cache = _BettiCache(field)
    results = {}
    if method in ("both", "induced"):
        verts = x.vertices
        if len(verts) > vertex_cap:
            raise ValueError(
                f"brute-force Leray refused above {vertex_cap} vertices; "
                "use method='links'"
            )
        best = -1
        for r in range(len(verts) + 1):
            for comb in itertools.combinations(verts, r):
                sub = x.induced(Face.of(comb))
                best = max(best, cache.get(sub).top_nonzero_degree())
        results["induced"] = best + 1
    if method in ("both", "links"):
        best = -1
        for gamma in x.all_faces():
            best = max(best, cache.get(x.link(gamma)).top_nonzero_degree())
        results["links"] = best + 1
    if method == "both" and results["induced"] != results["links"]:
        raise AssertionError(
            f"leray routes disagree: {results} on {x!r}"
        )
    return next(iter(results.values()))


def is_cohen_macaulay(x: SimplicialComplex, field: Field = "Q") -> bool:
    """Pure, and every link is homologically (dim(link) - 1)-connected."""
    if not x.is_pure():
        return False
    cache = _BettiCache(field)
    for sigma in x.all_faces():
        lk = x.link(sigma)
        b = cache.get(lk)
        n = lk.dim - 1
        if n >= -1:
            if b.rank_neg1 or any(b.ranks[i] for i in range(n + 1)):
                return False
    return True


def is_cohen_macaulay_induced(x: SimplicialComplex, field: Field = "Q") -> bool:
    """The alternative predicate: pure, and every induced subcomplex is
    homologically (dim - 1)-connected."""
    if not x.is_pure():
        return False
    cache = _BettiCache(field)
    verts = x.vertices
    for r in range(1, len(verts) + 1):
        for comb in itertools.combinations(verts, r):
            sub = x.induced(Face.of(comb))
            b = cache.get(sub)
            n = sub.dim - 1
            if n >= -1:
                if b.rank_neg1 or any(b.ranks[i] for i in range(n + 1)):
                    return False
    return True


def is_shellable(
    x: SimplicialComplex, budget: Optional[Budget] = None
) -> tuple[bool, Optional[tuple[Face, ...]]]:
    """Backtracking search for a shelling order of a pure complex.

    Returns the witness order on success.  Non-pure input is an error, not
    False.
    """
    if not x.is_pure():
        raise NotPureError("shellability is defined for pure complexes")
    budget = budget or Budget()
    facets = x.facets
    if len(facets) <= 1:
        return True, facets
    d = x.dim
    n = len(facets)

    def can_extend(chosen: tuple[int, ...], cand: int) -> bool:
        f = facets[cand]
        inters = [int(f) & int(facets[i]) for i in chosen]
        ridge_size = f.bit_count() - 1
        ridges = [m for m in inters if m.bit_count() == ridge_size]
        if d >= 1 and not ridges:
            return False
        return all(
            any(m & ~rm == 0 for rm in ridges) or m.bit_count() == ridge_size
            for m in inters
        )

    dead: set[frozenset] = set()
    order: list[int] = []

    def search(chosen: tuple[int, ...]) -> bool:
        budget.spend()
        if len(chosen) == n:
            return True
        key = frozenset(chosen)
        if key in dead:
            return False
        for cand in range(n):
            if cand in chosen:
                continue
            if not chosen or can_extend(chosen, cand):
                order.append(cand)
                if search(chosen + (cand,)):
                    return True
                order.pop()
        dead.add(key)
        return False

    if search(()):
        return True, tuple(facets[i] for i in order)
    return False, None


class SheddingWitness(NamedTuple):
    """One node of a shedding sequence: the face shed and the dimension
    bound in force."""

    face: Face
    dim_bound: int


def _is_shedding_face(y: SimplicialComplex, sigma: Face) -> bool:
    dele = y.deletion(sigma)
    return dele.is_pure() and dele.dim == y.dim


def is_k_vertex_decomposable(
    x: SimplicialComplex, k: int, budget: Optional[Budget] = None
) -> tuple[bool, Optional[tuple[SheddingWitness, ...]]]:
    """Memoized search for a k-vertex decomposition of a pure complex.

    The witness is a pre-order shedding sequence: first the shedding face of
    the complex, then the sequence for its deletion, then for its link;
    simplices (and the empty complex) contribute nothing.  Candidate faces
    are tried by dimension then vertex tuple, so runs are deterministic.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if not x.is_pure():
        raise NotPureError("k-vertex decomposability is defined for pure complexes")
    budget = budget or Budget()
    memo: dict[tuple, Optional[tuple[SheddingWitness, ...]]] = {}

    def rec(y: SimplicialComplex) -> Optional[tuple[SheddingWitness, ...]]:
        if y.is_empty or y.is_simplex:
            return ()
        key = y.facets
        if key in memo:
            return memo[key]
        budget.spend()
        candidates: list[Face] = []
        for j in range(min(k, y.dim) + 1):
            candidates.extend(sorted(y.faces(j), key=lambda f: f.vertices))
        result = None
        for sigma in candidates:
            if not _is_shedding_face(y, sigma):
                continue
            sub_del = rec(y.deletion(sigma))
            if sub_del is None:
                continue
            sub_lk = rec(y.link(sigma))
            if sub_lk is None:
                continue
            result = (SheddingWitness(sigma, k),) + sub_del + sub_lk
            break
        memo[key] = result
        return result

    witness = rec(x)
    if witness is None:
        return False, None
    return True, witness


def verify_shedding_sequence(
    x: SimplicialComplex, k: int, witness: tuple[SheddingWitness, ...]
) -> bool:
    """Replay a pre-order shedding sequence and check every step."""

    def consume(y: SimplicialComplex, pos: int) -> Optional[int]:
        if y.is_empty or y.is_simplex:
            return pos
        if pos >= len(witness):
            return None
        face, bound = witness[pos]
        if bound != k or face.dim > k or face.dim < 0:
            return None
        if face not in y or not _is_shedding_face(y, face):
            return None
        after_del = consume(y.deletion(face), pos + 1)
        if after_del is None:
            return None
        return consume(y.link(face), after_del)

    return consume(x, 0) == len(witness)


def shedding_leray_inequality_check(
    x: SimplicialComplex, sigma, field: Field = "Q"
) -> bool:
    """L(X) >= max(L(del), L(lk) + k + 1) for a shedding k-face whose
    deletion is Cohen-Macaulay; hypothesis failures raise, they are never
    reported as False."""
    s = as_face(sigma)
    if s not in x or s.dim < 0:
        raise HypothesisNotMetError("sigma must be a nonempty face of x")
    if not x.is_pure():
        raise HypothesisNotMetError("x must be pure")
    dele = x.deletion(s)
    if not _is_shedding_face(x, s):
        raise HypothesisNotMetError("sigma is not a shedding face")
    if not is_cohen_macaulay(dele, field):
        raise HypothesisNotMetError("deletion(sigma, x) is not Cohen-Macaulay")
    k = s.dim
    lhs = leray_number(x, field)
    rhs = max(leray_number(dele, field), leray_number(x.link(s), field) + k + 1)
    return lhs >= rhs
