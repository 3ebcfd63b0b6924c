"""Quivers of the cluster-tilted algebras attached to triangulations.

Two independent constructions are provided.  The normative one transports
the base quiver along flip paths from the fan, mutating at the exchanged
vertex and carrying the vertex-to-edge labelling through every flip.  The
oracle construction reads the quiver off the triangulation directly: the
polygon regions cut out by the central configuration each contribute a
type-A quiver by the triangle rule, and the central configuration itself
contributes one of four templates.  The two must agree edge for edge.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from . import edges as ed
from . import triangulations as tr
from .errors import ModelInconsistencyError, UnsupportedSizeError

DEFAULT_CLASS_BOUND = 8


def _label_key(v):
    return (0, "", v) if isinstance(v, int) else (1, str(v), 0)


@dataclass(frozen=True, slots=True)
class Quiver:
    """Finite directed multigraph; vertices are opaque labels (edge tokens
    or integers), arrows a multiset of ordered pairs."""

    vertices: tuple
    arrows: tuple

    @classmethod
    def build(cls, vertices, arrows) -> "Quiver":
        vs = tuple(sorted(set(vertices), key=_label_key))
        known = set(vs)
        for s, t in arrows:
            if s not in known or t not in known:
                raise ValueError(f"arrow ({s},{t}) uses unknown vertex")
        ar = tuple(sorted(arrows, key=lambda a: (_label_key(a[0]), _label_key(a[1]))))
        return cls(vs, ar)

    @property
    def arrow_counts(self) -> Counter:
        return Counter(self.arrows)

    def out_neighbors(self, v) -> list:
        return [t for s, t in self.arrows if s == v]

    def in_neighbors(self, v) -> list:
        return [s for s, t in self.arrows if t == v]

    def neighbors(self, v) -> set:
        return {t for s, t in self.arrows if s == v} | {s for s, t in self.arrows if t == v}

    def relabel(self, mapping: dict) -> "Quiver":
        f = lambda v: mapping.get(v, v)
        return Quiver.build([f(v) for v in self.vertices],
                            [(f(s), f(t)) for s, t in self.arrows])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "arrows": [[s, t] for s, t in self.arrows]}

    def to_dot(self, name: str = "Q") -> str:
        index = {v: i + 1 for i, v in enumerate(self.vertices)}
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  {index[v]} [label="{v}"];')
        for s, t in self.arrows:
            lines.append(f"  {index[s]} -> {index[t]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def quiver_from_json(obj: dict) -> Quiver:
    return Quiver.build(obj["vertices"], [tuple(a) for a in obj["arrows"]])


def mutate(q: Quiver, v) -> Quiver:
    """Fomin-Zelevinsky mutation at v: compose through v, reverse at v,
    cancel opposite arrow pairs maximally."""
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    counts = Counter()
    ins, outs = [], []
    for s, t in q.arrows:
        if s == v or t == v:
            counts[(t, s)] += 1
            if t == v:
                ins.append(s)
            else:
                outs.append(t)
        else:
            counts[(s, t)] += 1
    for u in ins:
        for w in outs:
            if u == w:
                raise ModelInconsistencyError("2-cycle through mutation vertex")
            counts[(u, w)] += 1
    for s, t in list(counts):
        if _label_key(s) < _label_key(t):
            cancel = min(counts[(s, t)], counts.get((t, s), 0))
            if cancel:
                counts[(s, t)] -= cancel
                counts[(t, s)] -= cancel
    arrows = []
    for pair, c in counts.items():
        arrows.extend([pair] * c)
    return Quiver.build(q.vertices, arrows)


def assert_cluster_quiver(q: Quiver, context: str = "") -> None:
    """No loops, no 2-cycles, no multiple arrows; raised as a model bug."""
    counts = q.arrow_counts
    for (s, t), c in counts.items():
        if s == t:
            raise ModelInconsistencyError(f"loop at {s!r} {context}")
        if c > 1:
            raise ModelInconsistencyError(f"multiple arrow {s!r}->{t!r} {context}")
        if counts.get((t, s)):
            raise ModelInconsistencyError(f"2-cycle {s!r}<->{t!r} {context}")


def base_quiver(n: int) -> Quiver:
    """The fan's quiver: a chain through the plain arcs, forking into the
    two spokes at the end.  Vertex k is the k-th edge in canonical order."""
    ed.check_size(n)
    chain = [ed.plain(1, k).token() for k in range(3, n + 1)]
    forks = [ed.spoke(1, 1).token(), ed.spoke(1, -1).token()]
    arrows = list(zip(chain, chain[1:]))
    arrows += [(chain[-1], forks[0]), (chain[-1], forks[1])]
    return Quiver.build(chain + forks, arrows)


@lru_cache(maxsize=None)
def transport_table(n: int, max_n: int = tr.DEFAULT_MAX_N) -> dict:
    """Quivers for every triangulation, by breadth-first transport from the
    fan.  Every flip-graph edge is checked for consistency on the way, which
    makes the result path independent by construction."""
    start = tr.fan(n)
    table: dict[tuple[int, ...], Quiver] = {start.edge_indices(): base_quiver(n)}
    queue = deque([start])
    while queue:
        tri = queue.popleft()
        q = table[tri.edge_indices()]
        for m in tri.edges:
            tri2, m2 = tr.flip(tri, m)
            q2 = mutate(q, m.token()).relabel({m.token(): m2.token()})
            assert_cluster_quiver(q2, f"(transport to {tri2.token()})")
            key = tri2.edge_indices()
            if key in table:
                if table[key] != q2:
                    raise ModelInconsistencyError(
                        f"transported quiver depends on the flip path at {tri2.token()}"
                    )
            else:
                table[key] = q2
                queue.append(tri2)
    if len(table) != tr.count_all(n, max_n):
        raise ModelInconsistencyError(
            f"flip graph disconnected at n={n}: reached {len(table)} triangulations"
        )
    return table


def quiver_of(tri: tr.Triangulation) -> Quiver:
    """The quiver of the cluster-tilted algebra of the triangulation, by
    mutation transport from the fan."""
    return transport_table(tri.n)[tri.edge_indices()]


# ---------------------------------------------------------------------------
# direct construction


@dataclass(frozen=True, slots=True)
class Decomposition:
    """A triangulation cut along its central configuration.

    regions: one entry per polygon region, as (corner vertices ccw, junction
    token, list of triangle side-triples); each triangle side is an edge
    token or None for a boundary segment.  central: template arrows between
    junction and spoke tokens.  For type 4, f/g/h carry the template roles.
    """

    type: int
    regions: tuple
    central_arrows: tuple
    spoke_cycle: tuple      # type 4 only: spoke tokens in ccw base order
    junctions: tuple        # type 4 only: junction token or None per gap


def _region_triangles(n: int, corners: list[int], diagonals: set) -> list:
    """Triangles of a triangulated polygon region.  The region's corners are
    contiguous boundary vertices in ccw order and the closing side between
    the first and last corner is an edge of the triangulation; diagonals is
    the set of unordered corner pairs carried by the region's interior
    edges.  Each triangle is returned as its three sides, each side either
    an edge token or None for a boundary segment."""
    m = len(corners)
    index_pairs = {frozenset(p): None for p in diagonals}

    def side_token(i: int, j: int):
        if j == i + 1:
            return None  # boundary segment
        return ed.plain(corners[i], corners[j]).token()

    def has_edge(i: int, j: int) -> bool:
        if j == i + 1 or (i, j) == (0, m - 1):
            return True
        return frozenset((corners[i], corners[j])) in index_pairs

    triangles = []

    def split(i: int, j: int) -> None:
        if j <= i + 1:
            return
        for k in range(i + 1, j):
            if has_edge(i, k) and has_edge(k, j):
                triangles.append((side_token(i, k), side_token(k, j), side_token(i, j)))
                split(i, k)
                split(k, j)
                return
        raise ModelInconsistencyError(
            f"region {corners} not triangulated between positions {i} and {j}"
        )

    split(0, m - 1)
    return triangles


def _span(n: int, a: int, b: int) -> list[int]:
    """Boundary vertices from a to b inclusive, counterclockwise."""
    return [ed.wrap(n, a + t) for t in range((b - a) % n + 1)]


def decompose(tri: tr.Triangulation) -> Decomposition:
    """Cut the triangulation along its degenerate and length-n edges."""
    n = tri.n
    kind = tr.classify_type(tri)
    spokes = sorted(tri.spokes(), key=lambda s: (s.a, -s.tag))
    eset = set(tri.edges)

    regions = []
    central = []
    spoke_cycle: tuple = ()
    junctions: tuple = ()

    def add_region(a: int, b: int, junction_token: str, interior: list) -> None:
        corners = _span(n, a, b)
        diag = {frozenset((e.a, e.b)) for e in interior}
        regions.append((tuple(corners), junction_token,
                        tuple(_region_triangles(n, corners, diag))))

    def interior_edges(a: int, b: int, exclude: set) -> list:
        pos = {v: i for i, v in enumerate(_span(n, a, b))}
        picked = []
        for e in tri.plains():
            if e in exclude:
                continue
            if e.a in pos and e.b in pos and pos[e.a] < pos[e.b]:
                picked.append(e)
        return picked

    if kind == tr.TYPE1:
        m = next(e for e in tri.plains() if ed.edge_length(n, e) == n)
        add_region(m.a, m.b, m.token(), interior_edges(m.a, m.b, {m}))
        for s in spokes:
            if s.a == m.a:
                central.append((m.token(), s.token()))
            elif s.a == m.b:
                central.append((s.token(), m.token()))
            else:
                raise ModelInconsistencyError(
                    f"type 1 spoke {s.token()} away from the long arc {m.token()}"
                )
    elif kind == tr.TYPE2:
        a = spokes[0].a
        bases = [x for x in range(1, n + 1) if x != a
                 and ed.plain(a, x) in eset and ed.plain(x, a) in eset]
        if len(bases) != 1:
            raise ModelInconsistencyError(
                f"type 2 needs one return vertex, found {bases} in {tri.token()}"
            )
        b = bases[0]
        j_out, j_in = ed.plain(a, b), ed.plain(b, a)
        used = {j_out, j_in}
        add_region(a, b, j_out.token(), interior_edges(a, b, used))
        add_region(b, a, j_in.token(), interior_edges(b, a, used))
        s_plus = next(s for s in spokes if s.tag == 1)
        s_minus = next(s for s in spokes if s.tag == -1)
        central += [
            (j_out.token(), s_plus.token()), (s_plus.token(), j_in.token()),
            (j_out.token(), s_minus.token()), (s_minus.token(), j_in.token()),
            (j_in.token(), j_out.token()),
        ]
    elif kind == tr.TYPE3:
        a, b = spokes[0].a, spokes[1].a
        j_out, j_in = ed.plain(a, b), ed.plain(b, a)
        if j_out not in eset or j_in not in eset:
            raise ModelInconsistencyError(
                f"type 3 junctions missing from {tri.token()}"
            )
        used = {j_out, j_in}
        add_region(a, b, j_out.token(), interior_edges(a, b, used))
        add_region(b, a, j_in.token(), interior_edges(b, a, used))
        s_a, s_b = spokes[0].token(), spokes[1].token()
        central += [
            (j_out.token(), s_a), (s_a, j_in.token()),
            (j_in.token(), s_b), (s_b, j_out.token()),
        ]
    else:
        bases = [s.a for s in spokes]
        toks = [s.token() for s in spokes]
        t = len(bases)
        gap_junctions = []
        for i in range(t):
            a, nxt = bases[i], bases[(i + 1) % t]
            central.append((toks[i], toks[(i + 1) % t]))
            if ed.delta_length(n, a, nxt) == 2:
                gap_junctions.append(None)
                continue
            j = ed.plain(a, nxt)
            if j not in eset:
                raise ModelInconsistencyError(
                    f"connecting arc {j.token()} missing from {tri.token()}"
                )
            gap_junctions.append(j.token())
            central.append((toks[(i + 1) % t], j.token()))
            central.append((j.token(), toks[i]))
            add_region(a, nxt, j.token(), interior_edges(a, nxt, {j}))
        spoke_cycle = tuple(toks)
        junctions = tuple(gap_junctions)

    return Decomposition(kind, tuple(regions), tuple(central),
                         spoke_cycle, junctions)


def region_arrows(triangles) -> list:
    """Triangle rule: within each triangle, arrows run clockwise between the
    sides that carry triangulation edges."""
    arrows = []
    for s1, s2, s3 in triangles:
        for src, dst in ((s2, s1), (s3, s2), (s1, s3)):
            if src is not None and dst is not None:
                arrows.append((src, dst))
    return arrows


def region_three_cycles(triangles) -> list:
    """Oriented 3-cycles of the triangle rule: triangles whose three sides
    are all triangulation edges, as (x, z, y) vertex cycles."""
    cycles = []
    for s1, s2, s3 in triangles:
        if s1 is not None and s2 is not None and s3 is not None:
            cycles.append((s1, s3, s2))
    return cycles


def direct_quiver_of(tri: tr.Triangulation) -> Quiver:
    """Template assembly of the quiver, independent of mutation transport."""
    dec = decompose(tri)
    arrows = list(dec.central_arrows)
    for _, _, triangles in dec.regions:
        arrows.extend(region_arrows(triangles))
    q = Quiver.build([e.token() for e in tri.edges], arrows)
    assert_cluster_quiver(q, f"(direct at {tri.token()})")
    return q


# ---------------------------------------------------------------------------
# isomorphism, canonical keys, vertex deletion


def _refine_colors(n_verts: int, adj_out, adj_in, colors):
    while True:
        sig = [
            (colors[v],
             tuple(sorted(colors[w] for w in adj_out[v])),
             tuple(sorted(colors[w] for w in adj_in[v])))
            for v in range(n_verts)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _index_graph(q: Quiver):
    idx = {v: i for i, v in enumerate(q.vertices)}
    n_verts = len(q.vertices)
    adj_out = [[] for _ in range(n_verts)]
    adj_in = [[] for _ in range(n_verts)]
    for s, t in q.arrows:
        adj_out[idx[s]].append(idx[t])
        adj_in[idx[t]].append(idx[s])
    return idx, adj_out, adj_in


def is_isomorphic(q1: Quiver, q2: Quiver):
    """Vertex-bijection test preserving the arrow multiset; returns
    (bool, witness dict or None).  Colors are refined by in/out degree
    signatures, then a backtracking matcher runs inside the color classes."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return False, None
    _, out1, in1 = _index_graph(q1)
    _, out2, in2 = _index_graph(q2)
    n_verts = len(q1.vertices)
    c1 = _refine_colors(n_verts, out1, in1, [0] * n_verts)
    c2 = _refine_colors(n_verts, out2, in2, [0] * n_verts)
    if sorted(c1) != sorted(c2):
        return False, None
    cnt1 = [Counter(out1[v]) for v in range(n_verts)]
    cnt2 = [Counter(out2[v]) for v in range(n_verts)]

    order = sorted(range(n_verts), key=lambda v: (c1.count(c1[v]), c1[v], v))
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == n_verts:
            return True
        v = order[pos]
        for w in range(n_verts):
            if w in used or c2[w] != c1[v]:
                continue
            ok = True
            for u, x in assigned.items():
                if cnt1[v][u] != cnt2[w][x] or cnt1[u][v] != cnt2[x][w]:
                    ok = False
                    break
            if ok:
                assigned[v] = w
                used.add(w)
                if extend(pos + 1):
                    return True
                del assigned[v]
                used.remove(w)
        return False

    if extend(0):
        witness = {q1.vertices[v]: q2.vertices[w] for v, w in assigned.items()}
        return True, witness
    return False, None


def canonical_key(q: Quiver):
    """Label-free canonical encoding: minimal sorted arrow list over all
    vertex orderings consistent with individualization-refinement."""
    n_verts = len(q.vertices)
    _, adj_out, adj_in = _index_graph(q)
    arrow_pairs = []
    idx = {v: i for i, v in enumerate(q.vertices)}
    for s, t in q.arrows:
        arrow_pairs.append((idx[s], idx[t]))

    best = [None]

    def encode(perm: list[int]):
        pos = [0] * n_verts
        for rank, v in enumerate(perm):
            pos[v] = rank
        return tuple(sorted((pos[s], pos[t]) for s, t in arrow_pairs))

    def search(colors):
        classes: dict[int, list[int]] = {}
        for v in range(n_verts):
            classes.setdefault(colors[v], []).append(v)
        split = next((c for c in sorted(classes) if len(classes[c]) > 1), None)
        if split is None:
            perm = sorted(range(n_verts), key=lambda v: colors[v])
            cand = encode(perm)
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        for v in classes[split]:
            new = list(colors)
            new[v] = -1  # individualize ahead of its class
            palette = {c: i for i, c in enumerate(sorted(set(new)))}
            new = _refine_colors(n_verts, adj_out, adj_in,
                                 [palette[c] for c in new])
            search(new)

    search(_refine_colors(n_verts, adj_out, adj_in, [0] * n_verts))
    return (n_verts, best[0])


def delete_vertex(q: Quiver, v) -> Quiver:
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    return Quiver.build([w for w in q.vertices if w != v],
                        [(s, t) for s, t in q.arrows if s != v and t != v])


def connected_components(q: Quiver) -> int:
    remaining = set(q.vertices)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            v = stack.pop()
            for w in q.neighbors(v):
                if w in remaining:
                    remaining.remove(w)
                    stack.append(w)
    return count


def is_connected(q: Quiver) -> bool:
    return connected_components(q) <= 1


# ---------------------------------------------------------------------------
# mutation classes


def linear_a_quiver(k: int) -> Quiver:
    return Quiver.build(range(1, k + 1), [(i, i + 1) for i in range(1, k)])


def base_quiver_d(k: int) -> Quiver:
    """The base type-D shape on integer vertices 1..k."""
    arrows = [(i, i + 1) for i in range(1, k - 1)]
    arrows.append((k - 2, k))
    return Quiver.build(range(1, k + 1), arrows)


def simple_cycles(q: Quiver) -> list[tuple]:
    """All directed simple cycles, each rooted at its minimal vertex."""
    verts = list(q.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    out = {v: sorted(set(q.out_neighbors(v)), key=_label_key) for v in verts}
    cycles = []

    def walk(root, v, path, on_path):
        for w in out[v]:
            if w == root:
                cycles.append(tuple(path))
            elif pos[w] > pos[root] and w not in on_path:
                on_path.add(w)
                path.append(w)
                walk(root, w, path, on_path)
                path.pop()
                on_path.remove(w)

    for root in verts:
        walk(root, root, [root], {root})
    return cycles


def _three_cycles_through(q: Quiver, v) -> list[tuple]:
    found = []
    outs = set(q.out_neighbors(v))
    ins = set(q.in_neighbors(v))
    for x in outs:
        for y in set(q.out_neighbors(x)):
            if y in ins and y != v and x != y:
                found.append((v, x, y))
    return found


def check_type_a_shape(q: Quiver) -> None:
    """Structural facts that every quiver mutation-equivalent to a linear
    type-A orientation satisfies."""
    for cyc in simple_cycles(q):
        if len(cyc) != 3:
            raise ModelInconsistencyError(
                f"type-A member with a {len(cyc)}-cycle {cyc}"
            )
    for v in q.vertices:
        nbrs = q.neighbors(v)
        if len(nbrs) > 4:
            raise ModelInconsistencyError(f"type-A member with degree {len(nbrs)}")
        tri_nbrs = [frozenset((x, y)) for _, x, y in _three_cycles_through(q, v)]
        covered = set().union(*tri_nbrs) if tri_nbrs else set()
        if len(nbrs) == 4:
            if len(tri_nbrs) != 2 or covered != nbrs or (tri_nbrs[0] & tri_nbrs[1]):
                raise ModelInconsistencyError(
                    f"degree-4 vertex {v!r} not split into two 3-cycles"
                )
        if len(nbrs) == 3:
            if len(tri_nbrs) != 1 or len(covered) != 2:
                raise ModelInconsistencyError(
                    f"degree-3 vertex {v!r} without the 3-cycle pattern"
                )


def _mutation_class_keys(seed: Quiver, check_a: bool) -> frozenset:
    seen = {canonical_key(seed)}
    frontier = [seed]
    if check_a:
        check_type_a_shape(seed)
    while frontier:
        nxt = []
        for q in frontier:
            for v in q.vertices:
                q2 = mutate(q, v)
                key = canonical_key(q2)
                if key not in seen:
                    seen.add(key)
                    if check_a:
                        check_type_a_shape(q2)
                    nxt.append(q2)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def mutation_class_a(k: int, bound: int = DEFAULT_CLASS_BOUND) -> frozenset:
    if k > bound:
        raise UnsupportedSizeError(f"k={k} above the mutation-class bound {bound}")
    if k < 1:
        raise UnsupportedSizeError("k must be at least 1")
    return _mutation_class_keys(linear_a_quiver(k), check_a=True)


@lru_cache(maxsize=None)
def mutation_class_d(k: int, bound: int = DEFAULT_CLASS_BOUND) -> frozenset:
    if k > bound:
        raise UnsupportedSizeError(f"k={k} above the mutation-class bound {bound}")
    if k < 4:
        raise UnsupportedSizeError("type D needs k >= 4")
    return _mutation_class_keys(base_quiver_d(k), check_a=False)


def in_mutation_class_a(q: Quiver, k: int, bound: int = DEFAULT_CLASS_BOUND) -> bool:
    if len(q.vertices) != k:
        return False
    return canonical_key(q) in mutation_class_a(k, bound)


def in_mutation_class_d(q: Quiver, k: int, bound: int = DEFAULT_CLASS_BOUND) -> bool:
    if len(q.vertices) != k:
        return False
    return canonical_key(q) in mutation_class_d(k, bound)
