import itertools
from collections import Counter

from mecensus.graphs import Graph, apply_permutation, complement, complete_graph, pair_count
from mecensus.oracles import brute_force_unlabeled
from mecensus.orderly import (
    ALL_RULES,
    DEFAULT_RULES,
    augment_children,
    canonicalize,
    generate_all,
    is_canonical,
    quick_reject,
)


def brute_max_code(g: Graph) -> int:
    return max(apply_permutation(g, p).code
               for p in itertools.permutations(range(1, g.n + 1)))


def test_augment_children_examples():
    assert [c.code for c in augment_children(Graph(3, 0))] == [4, 2, 1]
    assert [c.code for c in augment_children(Graph(3, 4))] == [6, 5]
    assert augment_children(Graph(3, 7)) == []


def test_augment_children_parent_recovery():
    for n in (4, 5):
        for code in range(1 << pair_count(n)):
            g = Graph(n, code)
            for child in augment_children(g):
                assert child.edge_count == g.edge_count + 1
                assert child.code & (child.code - 1) == g.code  # drop lowest set bit


def test_quick_reject_examples():
    assert quick_reject(Graph(3, 1)) is True  # vertex 3 isolated, others not
    assert quick_reject(Graph(3, 4)) is False


def test_quick_reject_sound_on_all_canonical_graphs():
    # must never fire on a canonical graph; checked against the
    # all-permutations oracle for every unlabeled graph up to n=6
    for n in range(1, 7):
        for code in brute_force_unlabeled(n):
            assert not quick_reject(Graph(n, code), DEFAULT_RULES)


def test_neighbor_degree_rule_is_unsound_and_off_by_default():
    g = Graph(6, 0x7206)
    assert is_canonical(g, exhaustive=True)
    assert not quick_reject(g, DEFAULT_RULES)
    assert quick_reject(g, ALL_RULES)  # why the rule is not in the default set


def test_is_canonical_small_examples():
    assert is_canonical(Graph(3, 4))
    assert not is_canonical(Graph(3, 1))
    assert not is_canonical(Graph(3, 2))
    for n in range(2, 8):
        assert is_canonical(complete_graph(n))
        assert is_canonical(Graph(n, 0))


def test_is_canonical_matches_exhaustive_search():
    for n in (3, 4, 5):
        for code in range(1 << pair_count(n)):
            g = Graph(n, code)
            want = brute_max_code(g) == code
            assert is_canonical(g) == want
            assert is_canonical(g, exhaustive=True) == want


def test_eleven_canonical_graphs_for_n4():
    canon = [c for c in range(64) if is_canonical(Graph(4, c))]
    assert len(canon) == 11


def test_canonicalize_examples_and_idempotence():
    assert canonicalize(Graph(3, 1)).code == 4
    for n in (4, 5):
        for code in range(1 << pair_count(n)):
            g = canonicalize(Graph(n, code))
            assert g.code == brute_max_code(Graph(n, code))
            assert canonicalize(g) == g


def test_canonicalize_is_isomorphism_invariant():
    import random
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(2, 6)
        g = Graph(n, rng.getrandbits(pair_count(n)))
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert canonicalize(apply_permutation(g, perm)) == canonicalize(g)


def test_generate_all_totals():
    for n, want in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]:
        assert sum(len(layer.graphs) for layer in generate_all(n)) == want


def test_generate_all_layer_counts_n4():
    assert [len(layer.graphs) for layer in generate_all(4)] == [1, 1, 2, 3, 2, 1, 1]


def test_generate_all_matches_brute_force():
    for n in range(1, 7):
        ours = sorted(g.code for layer in generate_all(n) for g in layer.graphs)
        assert ours == brute_force_unlabeled(n)


def test_layers_strictly_descending():
    for n in (5, 6):
        for layer in generate_all(n):
            codes = [g.code for g in layer.graphs]
            assert codes == sorted(set(codes), reverse=True)
            assert all(g.edge_count == layer.edge_count for g in layer.graphs)


def test_every_generated_graph_is_canonical():
    for n in (5, 6):
        for layer in generate_all(n):
            for g in layer.graphs:
                assert is_canonical(g, exhaustive=True)


def test_orderly_unique_parent_property():
    # each canonical graph with e+1 edges must appear exactly once among
    # the canonical children of the previous layer
    for n in (4, 5, 6):
        layers = list(generate_all(n))
        for e in range(pair_count(n) // 2):
            child_multiset = Counter(
                c.code for p in layers[e].graphs for c in augment_children(p)
                if is_canonical(c))
            assert set(child_multiset) == {g.code for g in layers[e + 1].graphs}
            assert all(v == 1 for v in child_multiset.values())


def test_complementation_consistency():
    for n in (4, 5, 6):
        layers = list(generate_all(n))
        m = pair_count(n)
        for e in range(m + 1):
            mirrored = sorted(canonicalize(complement(g)).code for g in layers[m - e].graphs)
            assert mirrored == sorted(g.code for g in layers[e].graphs)
