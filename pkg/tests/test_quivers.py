import pytest

from dncat.edges import plain, spoke, tau, sigma
from dncat.errors import UnsupportedSizeError
from dncat.quivers import (
    Quiver,
    base_quiver,
    base_quiver_d,
    canonical_key,
    connected_components,
    delete_vertex,
    direct_quiver_of,
    in_mutation_class_a,
    in_mutation_class_d,
    is_isomorphic,
    linear_a_quiver,
    mutate,
    mutation_class_a,
    quiver_of,
    simple_cycles,
    transport_table,
)
from dncat.triangulations import (
    Triangulation,
    apply_sigma,
    apply_tau,
    enumerate_all,
    fan,
    flip,
)


def b_matrix_mutate(matrix, k):
    """Independent skew-symmetric matrix mutation, the classical formula."""
    size = len(matrix)
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == k or j == k:
                out[i][j] = -matrix[i][j]
            else:
                out[i][j] = matrix[i][j] + (
                    abs(matrix[i][k]) * matrix[k][j] + matrix[i][k] * abs(matrix[k][j])
                ) // 2
    return out


def to_b_matrix(q):
    index = {v: i for i, v in enumerate(q.vertices)}
    size = len(q.vertices)
    matrix = [[0] * size for _ in range(size)]
    for s, t in q.arrows:
        matrix[index[s]][index[t]] += 1
        matrix[index[t]][index[s]] -= 1
    return matrix


def test_mutate_sink_reflection():
    q = Quiver.build([1, 2], [(1, 2)])
    assert mutate(q, 2) == Quiver.build([1, 2], [(2, 1)])


def test_mutate_path_to_cycle():
    path = Quiver.build([1, 2, 3], [(1, 2), (2, 3)])
    cycle = mutate(path, 2)
    assert cycle == Quiver.build([1, 2, 3], [(1, 3), (3, 2), (2, 1)])
    assert mutate(cycle, 2) == path


def test_mutate_involution_and_matrix_oracle():
    count = 0
    for tri in list(enumerate_all(5)) + list(enumerate_all(4)):
        q = quiver_of(tri)
        for v in q.vertices:
            mutated = mutate(q, v)
            assert mutate(mutated, v) == q
            k = q.vertices.index(v)
            assert to_b_matrix(mutated) == b_matrix_mutate(to_b_matrix(q), k)
            count += 1
        if count > 500:
            break
    assert count > 100


def test_base_quiver_shape():
    q = base_quiver(5)
    assert q.arrows == (
        ("p:1-3", "p:1-4"), ("p:1-4", "p:1-5"),
        ("p:1-5", "s:1:+"), ("p:1-5", "s:1:-"),
    )
    for n in range(4, 9):
        q = base_quiver(n)
        assert len(q.vertices) == n and len(q.arrows) == n - 1
        assert not simple_cycles(q)


def test_quiver_of_fan_and_all_spokes():
    assert quiver_of(fan(5)) == base_quiver(5)
    all_spokes = Triangulation.from_edges(5, [spoke(v, 1) for v in range(1, 6)])
    q = quiver_of(all_spokes)
    cycle5 = Quiver.build(range(5), [(i, (i + 1) % 5) for i in range(5)])
    ok, _ = is_isomorphic(q, cycle5)
    assert ok


def test_quiver_is_symmetry_equivariant():
    for n in (4, 5):
        table = transport_table(n)
        for tri in enumerate_all(n):
            q = table[tri.edge_indices()]
            tau_map = {e.token(): tau(n, e).token() for e in tri.edges}
            sigma_map = {e.token(): sigma(n, e).token() for e in tri.edges}
            assert q.relabel(tau_map) == table[apply_tau(tri).edge_indices()]
            assert q.relabel(sigma_map) == table[apply_sigma(tri).edge_indices()]


def test_flip_mutation_commutation():
    for n in (4, 5):
        table = transport_table(n)
        for tri in enumerate_all(n):
            q = table[tri.edge_indices()]
            for m in tri.edges:
                tri2, m2 = flip(tri, m)
                moved = mutate(q, m.token()).relabel({m.token(): m2.token()})
                assert moved == table[tri2.edge_indices()]


def test_direct_equals_transport():
    for n in (4, 5, 6):
        table = transport_table(n)
        for tri in enumerate_all(n):
            assert direct_quiver_of(tri) == table[tri.edge_indices()]


def test_direct_type_two_shape():
    tri = Triangulation.from_edges(
        5, [spoke(1, 1), spoke(1, -1), plain(1, 3), plain(3, 1), plain(3, 5)])
    q = direct_quiver_of(tri)
    assert len(q.vertices) == 5
    cycles = simple_cycles(q)
    # two 3-cycles sharing the return arrow
    assert sorted(len(c) for c in cycles) == [3, 3]
    shared = set(q.arrows)
    assert ("p:3-1", "p:1-3") in shared


def test_isomorphism_examples():
    for tri in list(enumerate_all(5))[::13]:
        q = quiver_of(tri)
        ok, witness = is_isomorphic(q, q)
        assert ok and witness is not None
    cycle = Quiver.build([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
    path = Quiver.build([1, 2, 3], [(1, 2), (2, 3)])
    ok, witness = is_isomorphic(cycle, path)
    assert not ok and witness is None


def test_isomorphism_witness_maps_arrows():
    a = Quiver.build("wxyz", [("w", "x"), ("x", "y"), ("y", "w"), ("y", "z")])
    b = Quiver.build("abcd", [("b", "c"), ("c", "d"), ("d", "b"), ("d", "a")])
    ok, witness = is_isomorphic(a, b)
    assert ok
    mapped = sorted((witness[s], witness[t]) for s, t in a.arrows)
    assert mapped == sorted(b.arrows)
    assert canonical_key(a) == canonical_key(b)


def test_canonical_key_separates():
    cycle = Quiver.build([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
    path = Quiver.build([1, 2, 3], [(1, 2), (2, 3)])
    assert canonical_key(cycle) != canonical_key(path)
    relabeled = Quiver.build("abc", [("c", "a"), ("a", "b"), ("b", "c")])
    assert canonical_key(cycle) == canonical_key(relabeled)


def test_delete_vertex_and_components():
    q = base_quiver(6)
    trimmed = delete_vertex(q, "s:1:-")
    ok, _ = is_isomorphic(trimmed, linear_a_quiver(5))
    assert ok
    assert connected_components(q) == 1
    assert connected_components(delete_vertex(q, "p:1-4")) == 2
    with pytest.raises(ValueError):
        delete_vertex(q, "p:9-9")


def test_mutation_class_membership():
    assert in_mutation_class_a(linear_a_quiver(3), 3)
    cycle3 = Quiver.build([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
    assert in_mutation_class_a(cycle3, 3)
    cycle4 = Quiver.build([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert not in_mutation_class_a(cycle4, 4)
    assert in_mutation_class_d(cycle4, 4)  # the all-spokes quiver at n=4
    assert in_mutation_class_d(base_quiver_d(4), 4)
    assert not in_mutation_class_d(linear_a_quiver(4), 4)
    with pytest.raises(UnsupportedSizeError):
        mutation_class_a(9)


def test_every_size_five_quiver_is_in_the_d_class():
    keys = {canonical_key(quiver_of(t)) for t in enumerate_all(5)}
    from dncat.quivers import mutation_class_d

    assert keys == set(mutation_class_d(5))


def test_dot_and_json_exports():
    q = base_quiver(5)
    dot = q.to_dot()
    assert '1 [label="p:1-3"];' in dot
    assert "3 -> 4;" in dot and "3 -> 5;" in dot
    payload = q.to_json()
    assert payload["vertices"][0] == "p:1-3"
    assert ["p:1-5", "s:1:+"] in payload["arrows"]
