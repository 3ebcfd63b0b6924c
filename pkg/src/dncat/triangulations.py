"""Triangulations of the punctured polygon: enumeration, flips, the
translation/tag-swap equivalence with canonical orbit representatives, the
four structural types, and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import edges as ed
from .edges import TaggedEdge
from .errors import (
    InvalidQuotientError,
    ModelInconsistencyError,
    NotATriangulationError,
    UnsupportedSizeError,
)
from .kernels import maximal_cliques

DEFAULT_MAX_N = 9

TYPE1, TYPE2, TYPE3, TYPE4 = 1, 2, 3, 4


@dataclass(frozen=True, slots=True)
class Triangulation:
    """A maximal set of n pairwise non-crossing tagged edges, stored in
    canonical edge order."""

    n: int
    edges: tuple[TaggedEdge, ...]

    @classmethod
    def from_edges(cls, n: int, items) -> "Triangulation":
        """Validating constructor; raises NotATriangulationError with a
        witness when the set is not a triangulation."""
        items = tuple(items)
        validate_triangulation(n, items)
        return cls(n, _sorted_edges(n, items))

    @classmethod
    def from_indices(cls, n: int, indices) -> "Triangulation":
        """Trusted fast path for enumeration output (already canonical)."""
        universe = ed.all_edges(n)
        return cls(n, tuple(universe[i] for i in indices))

    def edge_indices(self) -> tuple[int, ...]:
        return tuple(ed.edge_index(self.n, e) for e in self.edges)

    def token(self) -> str:
        return ",".join(e.token() for e in self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [e.to_json() for e in self.edges]}

    def spokes(self) -> tuple[TaggedEdge, ...]:
        return tuple(e for e in self.edges if e.is_spoke)

    def plains(self) -> tuple[TaggedEdge, ...]:
        return tuple(e for e in self.edges if e.is_plain)

    def __repr__(self) -> str:
        return f"Triangulation[n={self.n}: {self.token()}]"


def _sorted_edges(n: int, items) -> tuple[TaggedEdge, ...]:
    return tuple(sorted(items, key=lambda e: ed.sort_key(n, e)))


def fan(n: int) -> Triangulation:
    """The fan at vertex 1: arcs 1->3 .. 1->n plus both spokes at 1."""
    ed.check_size(n)
    items = [ed.plain(1, k) for k in range(3, n + 1)]
    items += [ed.spoke(1, 1), ed.spoke(1, -1)]
    return Triangulation(n, _sorted_edges(n, items))


def parse_triangulation(n: int, text: str) -> Triangulation:
    """Parse a comma-separated token list and validate it."""
    items = [ed.parse_edge(tok) for tok in text.split(",") if tok.strip()]
    return Triangulation.from_edges(n, items)


def triangulation_from_json(obj: dict) -> Triangulation:
    n = int(obj["n"])
    items = [ed.edge_from_json(e) for e in obj["edges"]]
    return Triangulation.from_edges(n, items)


def validate_triangulation(n: int, items) -> None:
    items = tuple(items)
    for e in items:
        ed.check_edge(n, e)
    if len(set(items)) != len(items):
        raise NotATriangulationError("duplicate edges in set")
    for i, m in enumerate(items):
        for other in items[i + 1:]:
            if ed.crossing_number(n, m, other) != 0:
                raise NotATriangulationError(
                    f"edges cross: {m.token()} x {other.token()}"
                )
    witness = _extension_witness(n, items)
    if witness is not None:
        raise NotATriangulationError(
            f"set is not maximal: {witness.token()} is compatible with all members"
        )
    if len(items) != n:
        raise ModelInconsistencyError(
            f"maximal non-crossing set of size {len(items)} != {n}"
        )


def _extension_witness(n: int, items) -> TaggedEdge | None:
    member = set(items)
    for cand in ed.all_edges(n):
        if cand in member:
            continue
        if all(ed.crossing_number(n, cand, m) == 0 for m in items):
            return cand
    return None


def is_triangulation(n: int, items) -> bool:
    """True iff the set is pairwise non-crossing and maximal.  Maximality and
    the size-n criterion are both evaluated and must agree."""
    items = tuple(items)
    for e in items:
        ed.check_edge(n, e)
    if len(set(items)) != len(items):
        return False
    for i, m in enumerate(items):
        for other in items[i + 1:]:
            if ed.crossing_number(n, m, other) != 0:
                return False
    maximal = _extension_witness(n, items) is None
    if maximal != (len(items) == n):
        raise ModelInconsistencyError(
            f"maximality ({maximal}) and size-n ({len(items)}=={n}) checks disagree"
        )
    return maximal


@lru_cache(maxsize=None)
def _all_index_sets(n: int) -> tuple[tuple[int, ...], ...]:
    masks = ed.compatibility_masks(n)
    cliques = maximal_cliques(masks, len(masks))
    for c in cliques:
        if len(c) != n:
            raise ModelInconsistencyError(
                f"maximal non-crossing set of size {len(c)} at n={n}"
            )
    return tuple(cliques)


def enumerate_all(n: int, max_n: int = DEFAULT_MAX_N):
    """Every triangulation exactly once, in lexicographic canonical order."""
    ed.check_size(n)
    if n > max_n:
        raise UnsupportedSizeError(
            f"n={n} above the configured bound {max_n}; raise it explicitly"
        )
    for indices in _all_index_sets(n):
        yield Triangulation.from_indices(n, indices)


def count_all(n: int, max_n: int = DEFAULT_MAX_N) -> int:
    ed.check_size(n)
    if n > max_n:
        raise UnsupportedSizeError(
            f"n={n} above the configured bound {max_n}; raise it explicitly"
        )
    return len(_all_index_sets(n))


def cluster_count_formula(n: int) -> int:
    """Closed-form cross-check for the number of triangulations: the type-D
    cluster count (3n-2)/n * C(2n-2, n-1), in exact integer arithmetic."""
    from math import comb

    num = (3 * n - 2) * comb(2 * n - 2, n - 1)
    if num % n:
        raise ModelInconsistencyError(f"cluster count formula not integral at n={n}")
    return num // n


def flip(tri: Triangulation, m: TaggedEdge) -> tuple[Triangulation, TaggedEdge]:
    """Exchange edge m for the unique other edge restoring maximality."""
    n = tri.n
    if m not in tri.edges:
        raise NotATriangulationError(f"{m.token()} is not an edge of the triangulation")
    masks = ed.compatibility_masks(n)
    kept = [e for e in tri.edges if e != m]
    cand = (1 << len(masks)) - 1
    for e in kept:
        cand &= masks[ed.edge_index(n, e)]
    cand &= ~(1 << ed.edge_index(n, m))
    if cand == 0 or cand & (cand - 1):
        found = []
        while cand:
            low = cand & -cand
            found.append(ed.all_edges(n)[low.bit_length() - 1].token())
            cand ^= low
        raise ModelInconsistencyError(
            f"flip of {m.token()} has {len(found)} replacements {found}; expected 1"
        )
    replacement = ed.all_edges(n)[cand.bit_length() - 1]
    new_tri = Triangulation(n, _sorted_edges(n, kept + [replacement]))
    return new_tri, replacement


def apply_tau(tri: Triangulation) -> Triangulation:
    n = tri.n
    return Triangulation(n, _sorted_edges(n, (ed.tau(n, e) for e in tri.edges)))


def apply_tau_inv(tri: Triangulation) -> Triangulation:
    n = tri.n
    return Triangulation(n, _sorted_edges(n, (ed.tau_inv(n, e) for e in tri.edges)))


def apply_sigma(tri: Triangulation) -> Triangulation:
    n = tri.n
    return Triangulation(n, _sorted_edges(n, (ed.sigma(n, e) for e in tri.edges)))


def orbit(tri: Triangulation) -> list[Triangulation]:
    """The orbit under the group generated by the translation and the tag
    swap, as a deduplicated list sorted by edge indices."""
    n = tri.n
    seen: dict[tuple[int, ...], Triangulation] = {}
    current = tri
    for _ in range(ed.tau_order(n)):
        for image in (current, apply_sigma(current)):
            seen.setdefault(image.edge_indices(), image)
        current = apply_tau(current)
    return [seen[k] for k in sorted(seen)]


def canonical_form(tri: Triangulation) -> tuple[Triangulation, int]:
    """Lexicographic minimum of the orbit plus the orbit's cardinality."""
    images = orbit(tri)
    return images[0], len(images)


def classify_type(tri: Triangulation) -> int:
    """The structural type: 1 with a length-n arc, else by the degenerate
    edge configuration (double / two separate spokes / three or more)."""
    n = tri.n
    if any(ed.edge_length(n, e) == n for e in tri.plains()):
        return TYPE1
    spokes = tri.spokes()
    if len(spokes) == 2:
        if spokes[0].a == spokes[1].a:
            return TYPE2
        return TYPE3
    if len(spokes) >= 3:
        return TYPE4
    raise ModelInconsistencyError(
        f"triangulation with {len(spokes)} degenerate edges: {tri.token()}"
    )


@dataclass(frozen=True, slots=True)
class TriangulationClass:
    """An equivalence class under translation and tag swap."""

    representative: Triangulation
    orbit_size: int
    type: int

    def to_json(self) -> dict:
        return {
            "representative": self.representative.token(),
            "orbitSize": self.orbit_size,
            "type": self.type,
        }


@lru_cache(maxsize=None)
def equivalence_classes(n: int) -> tuple[TriangulationClass, ...]:
    """Orbit representatives of all triangulations, in canonical order."""
    reps: dict[tuple[int, ...], TriangulationClass] = {}
    for tri in enumerate_all(n):
        rep, size = canonical_form(tri)
        key = rep.edge_indices()
        if key not in reps:
            reps[key] = TriangulationClass(rep, size, classify_type(rep))
    return tuple(reps[k] for k in sorted(reps))


def type_census(n: int) -> dict[int, int]:
    census = {TYPE1: 0, TYPE2: 0, TYPE3: 0, TYPE4: 0}
    for tri in enumerate_all(n):
        census[classify_type(tri)] += 1
    return census


def class_census(n: int) -> dict[int, int]:
    census = {TYPE1: 0, TYPE2: 0, TYPE3: 0, TYPE4: 0}
    for cls in equivalence_classes(n):
        census[cls.type] += 1
    return census


def quotient(tri: Triangulation, m: TaggedEdge) -> Triangulation:
    """Factor out a close-to-border arc M(a, a+2): delete boundary vertex
    a+1 and relabel downward, yielding a triangulation one size smaller."""
    n = tri.n
    if m not in tri.edges:
        raise InvalidQuotientError(f"{m.token()} is not an edge of the triangulation")
    if ed.classify_edge(n, m) != ed.CLOSE_TO_BORDER:
        raise InvalidQuotientError(f"{m.token()} is not close to the border")
    if n - 1 < ed.MIN_N:
        raise UnsupportedSizeError(f"quotient would leave n={n - 1} < {ed.MIN_N}")
    dropped = ed.wrap(n, m.a + 1)

    def relabel(v: int) -> int:
        if v == dropped:
            raise ModelInconsistencyError(
                f"edge at deleted vertex {dropped} survived the quotient"
            )
        return v - 1 if v > dropped else v

    new_edges = []
    for e in tri.edges:
        if e == m:
            continue
        if e.is_spoke:
            new_edges.append(ed.spoke(relabel(e.a), e.tag))
        else:
            new_edges.append(ed.plain(relabel(e.a), relabel(e.b)))
    return Triangulation.from_edges(n - 1, new_edges)


def pairwise_hom_matrix(tri: Triangulation) -> list[list[int]]:
    """Matrix of morphism-space dimensions between the edges, in canonical
    edge order; the diagonal records each edge's endomorphisms."""
    n = tri.n
    return [[ed.hom_dim(n, a, b) for b in tri.edges] for a in tri.edges]
