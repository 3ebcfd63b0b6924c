"""Tagged edges of the punctured polygon.

Boundary vertices are labelled 1..n counterclockwise.  An edge is either a
plain arc M(a,b) between distinct boundary vertices, homotopic to the
counterclockwise boundary path from a to b, or a tagged spoke M(a,a)^tag
from vertex a to the central puncture.  All label arithmetic is mod n with
representatives in 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidEdgeError, InvalidVertexError, UnsupportedSizeError

MIN_N = 4

CLOSE_TO_BORDER = "closeToBorder"
CONNECTED = "connected"
DEGENERATE = "degenerate"


@dataclass(frozen=True, slots=True, order=False)
class TaggedEdge:
    """A plain arc (a != b, tag == +1) or a tagged spoke (a == b, tag == +-1)."""

    a: int
    b: int
    tag: int = 1

    @property
    def is_spoke(self) -> bool:
        return self.a == self.b

    @property
    def is_plain(self) -> bool:
        return self.a != self.b

    def token(self) -> str:
        if self.is_spoke:
            return f"s:{self.a}:{'+' if self.tag == 1 else '-'}"
        return f"p:{self.a}-{self.b}"

    def to_json(self) -> dict:
        if self.is_spoke:
            return {"kind": "spoke", "a": self.a, "tag": self.tag}
        return {"kind": "plain", "a": self.a, "b": self.b}

    def __repr__(self) -> str:
        return f"TaggedEdge[{self.token()}]"


def plain(a: int, b: int) -> TaggedEdge:
    return TaggedEdge(a, b, 1)


def spoke(a: int, tag: int) -> TaggedEdge:
    return TaggedEdge(a, a, tag)


def check_size(n: int) -> None:
    if n < MIN_N:
        raise UnsupportedSizeError(f"polygon size n={n} unsupported, need n >= {MIN_N}")


def check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise InvalidVertexError(f"vertex {v} out of range 1..{n}")


def wrap(n: int, v: int) -> int:
    """Reduce a label to the representative in 1..n."""
    return (v - 1) % n + 1


def delta_length(n: int, a: int, b: int) -> int:
    """Number of vertices on the counterclockwise boundary path from a to b,
    both endpoints included; the full loop a -> a counts n + 1."""
    check_size(n)
    check_vertex(n, a)
    check_vertex(n, b)
    if a == b:
        return n + 1
    return (b - a) % n + 1


def check_edge(n: int, e: TaggedEdge) -> None:
    check_size(n)
    check_vertex(n, e.a)
    check_vertex(n, e.b)
    if e.tag not in (1, -1):
        raise InvalidEdgeError(f"tag must be +1 or -1, got {e.tag}")
    if e.is_plain:
        if e.tag != 1:
            raise InvalidEdgeError("plain edges carry no tag (tag must be +1)")
        if delta_length(n, e.a, e.b) < 3:
            raise InvalidEdgeError(
                f"{e.token()} is not an edge: |delta({e.a},{e.b})| >= 3 is required"
            )


def edge_length(n: int, e: TaggedEdge) -> int:
    """Length of a plain edge; spokes have length 1 by convention."""
    if e.is_spoke:
        return 1
    return delta_length(n, e.a, e.b)


def classify_edge(n: int, e: TaggedEdge) -> str:
    check_edge(n, e)
    if e.is_spoke:
        return DEGENERATE
    if delta_length(n, e.a, e.b) == 3:
        return CLOSE_TO_BORDER
    return CONNECTED


def sort_key(n: int, e: TaggedEdge) -> tuple:
    """Canonical order: plain edges by (a, length), then spokes by (a, tag)
    with +1 before -1."""
    if e.is_plain:
        return (0, e.a, delta_length(n, e.a, e.b))
    return (1, e.a, 0 if e.tag == 1 else 1)


@lru_cache(maxsize=None)
def all_edges(n: int) -> tuple[TaggedEdge, ...]:
    """All n*n tagged edges in canonical order: n(n-2) plain arcs, 2n spokes."""
    check_size(n)
    edges = []
    for a in range(1, n + 1):
        for length in range(3, n + 1):
            edges.append(plain(a, wrap(n, a + length - 1)))
    for a in range(1, n + 1):
        edges.append(spoke(a, 1))
        edges.append(spoke(a, -1))
    edges.sort(key=lambda e: sort_key(n, e))
    return tuple(edges)


@lru_cache(maxsize=None)
def _edge_index_map(n: int) -> dict[TaggedEdge, int]:
    return {e: i for i, e in enumerate(all_edges(n))}


def edge_index(n: int, e: TaggedEdge) -> int:
    check_edge(n, e)
    return _edge_index_map(n)[e]


def _in_open_interval(n: int, lo: int, hi: int, v: int) -> bool:
    """True iff v lies strictly inside the counterclockwise interval (lo, hi)."""
    return 0 < (v - lo) % n < (hi - lo) % n


def crossing_number(n: int, m: TaggedEdge, other: TaggedEdge) -> int:
    """Minimal number of interior intersections of two tagged edges.

    Spoke pairs follow the tag rule: spokes at distinct vertices cross once
    exactly when their tags differ.  A spoke crosses a plain arc exactly when
    its base lies strictly inside the arc's counterclockwise interval.  Two
    plain arcs are compared on the universal cover of the annulus: each lift
    of one arc forces a crossing when exactly one of its endpoints falls
    strictly inside the other arc's interval and the other falls strictly
    outside (endpoint coincidences never force a crossing, since curves may
    pick their side at a shared corner).
    """
    check_edge(n, m)
    check_edge(n, other)
    if m == other:
        return 0
    if m.is_spoke and other.is_spoke:
        return 1 if (m.a != other.a and m.tag != other.tag) else 0
    if m.is_spoke or other.is_spoke:
        s, p = (m, other) if m.is_spoke else (other, m)
        return 1 if _in_open_interval(n, p.a, p.b, s.a) else 0
    # plain vs plain, on the line: window (a, a+p), lifts (c+kn, c+q+kn)
    a = m.a
    span = (m.b - m.a) % n
    c = other.a
    q = (other.b - other.a) % n
    hi = a + span
    count = 0
    for k in (-2, -1, 0, 1, 2):
        x = c + k * n
        y = x + q
        x_in = a < x < hi
        y_in = a < y < hi
        x_out = x < a or x > hi
        y_out = y < a or y > hi
        if (x_in and y_out) or (y_in and x_out):
            count += 1
    return count


def tau(n: int, e: TaggedEdge) -> TaggedEdge:
    """Translation: rotate both endpoints clockwise; spoke tags flip."""
    check_edge(n, e)
    if e.is_spoke:
        return spoke(wrap(n, e.a - 1), -e.tag)
    return plain(wrap(n, e.a - 1), wrap(n, e.b - 1))


def tau_inv(n: int, e: TaggedEdge) -> TaggedEdge:
    check_edge(n, e)
    if e.is_spoke:
        return spoke(wrap(n, e.a + 1), -e.tag)
    return plain(wrap(n, e.a + 1), wrap(n, e.b + 1))


def sigma(n: int, e: TaggedEdge) -> TaggedEdge:
    """Tag swap: fixes plain edges, flips the tag of every spoke."""
    check_edge(n, e)
    if e.is_spoke:
        return spoke(e.a, -e.tag)
    return e


def tau_order(n: int) -> int:
    """Order of the translation on the full edge alphabet: n for even n,
    2n for odd n (the tag flip only closes up after an even number of laps)."""
    return n if n % 2 == 0 else 2 * n


def ext_dim(n: int, m: TaggedEdge, other: TaggedEdge) -> int:
    """dim Ext^1 between the two objects: the crossing number."""
    return crossing_number(n, m, other)


def hom_dim(n: int, m: TaggedEdge, other: TaggedEdge) -> int:
    """dim Hom between the two objects: crossing number against the
    translate tau^{-1} of the target."""
    return crossing_number(n, m, tau_inv(n, other))


def parse_edge(token: str) -> TaggedEdge:
    """Parse "p:a-b" or "s:a:+" / "s:a:-"."""
    token = token.strip()
    try:
        if token.startswith("p:"):
            a_s, b_s = token[2:].split("-")
            return plain(int(a_s), int(b_s))
        if token.startswith("s:"):
            a_s, t_s = token[2:].split(":")
            if t_s not in ("+", "-"):
                raise ValueError(t_s)
            return spoke(int(a_s), 1 if t_s == "+" else -1)
    except (ValueError, IndexError) as exc:
        raise InvalidEdgeError(f"malformed edge token {token!r}") from exc
    raise InvalidEdgeError(f"malformed edge token {token!r}")


def edge_from_json(obj: dict) -> TaggedEdge:
    kind = obj.get("kind")
    if kind == "plain":
        return plain(int(obj["a"]), int(obj["b"]))
    if kind == "spoke":
        return spoke(int(obj["a"]), int(obj["tag"]))
    raise InvalidEdgeError(f"unknown edge kind {kind!r}")


@lru_cache(maxsize=None)
def compatibility_masks(n: int) -> tuple[int, ...]:
    """Bitset row per edge index: bit j set iff edge j is distinct from and
    non-crossing with edge i."""
    edges = all_edges(n)
    m = len(edges)
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if crossing_number(n, edges[i], edges[j]) == 0:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)
