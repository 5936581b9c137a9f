import random

import pytest

from bbraag.errors import CapacityError, DomainError
from bbraag.graphs import (
    Graph,
    all_cliques,
    blocks_at,
    canonical_form,
    central_vertices,
    clique_number,
    connected_components,
    cut_vertices,
    is_connected,
)
from bbraag.patterns import (
    complete_graph,
    cycle_graph,
    gem_graph,
    overlapping_gems_graph,
    path_graph,
    star_graph,
)


def bowtie():
    return Graph("abvcd", [("a", "b"), ("a", "v"), ("b", "v"), ("c", "d"), ("c", "v"), ("d", "v")])


def test_constructor_validation():
    with pytest.raises(DomainError):
        Graph(["a"], [("a", "a")])
    with pytest.raises(DomainError):
        Graph(["a"], [("a", "b")])
    with pytest.raises(DomainError):
        Graph(["a", "a"])


def test_induced_subgraph():
    gem = gem_graph()
    p = gem.induced("abcd")
    assert p == path_graph(4, "abcd")
    assert gem.induced(gem.labels) == gem
    c4 = cycle_graph(4)
    assert c4.induced(["0", "1", "2"]).edge_count == 2
    with pytest.raises(DomainError):
        gem.induced(["nope"])


def test_induced_idempotent():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 7)
        edges = [
            (str(i), str(j))
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.5
        ]
        g = Graph([str(i) for i in range(n)], edges)
        subset = [str(i) for i in range(n) if rng.random() < 0.6]
        once = g.induced(subset)
        assert once.induced(subset) == once


def test_connected_components():
    assert connected_components(Graph([])) == []
    g = Graph("abcx", [("a", "b"), ("b", "c")])
    assert connected_components(g) == [("a", "b", "c"), ("x",)]
    assert connected_components(complete_graph(3)) == [("0", "1", "2")]


def test_cut_vertices_examples():
    assert cut_vertices(path_graph(4, "abcd")) == ["b", "c"]
    assert cut_vertices(complete_graph(4)) == []
    assert cut_vertices(bowtie()) == ["v"]
    with pytest.raises(DomainError):
        cut_vertices(Graph("ab"))


def test_cut_vertices_brute_force():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 7)
        while True:
            edges = [
                (str(i), str(j))
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ]
            g = Graph([str(i) for i in range(n)], edges)
            if is_connected(g):
                break
        expect = [
            v for v in sorted(g.labels)
            if len(connected_components(g.without(v))) > 1
        ]
        assert cut_vertices(g) == expect


def test_blocks_at():
    dec = blocks_at(bowtie(), "v")
    assert dec.blocks == (("a", "b", "v"), ("c", "d", "v"))
    dec = blocks_at(path_graph(4, "abcd"), "b")
    assert dec.blocks == (("a", "b"), ("b", "c", "d"))
    with pytest.raises(DomainError):
        blocks_at(complete_graph(4), "0")


def test_blocks_cover_edges():
    g = Graph("abcdef", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("d", "f")])
    for v in cut_vertices(g):
        dec = blocks_at(g, v)
        union_edges = set()
        for block in dec.blocks:
            union_edges.update(frozenset(e) for e in g.induced(block).edges())
        assert union_edges == {frozenset(e) for e in g.edges()}
        # blocks pairwise intersect exactly in the cut vertex
        for i in range(len(dec.blocks)):
            for j in range(i + 1, len(dec.blocks)):
                assert set(dec.blocks[i]) & set(dec.blocks[j]) == {v}


def test_central_vertices():
    assert central_vertices(gem_graph()) == ["z"]
    assert central_vertices(complete_graph(4)) == ["0", "1", "2", "3"]
    assert central_vertices(cycle_graph(4)) == []
    kn_plus_isolated = Graph("abcx", [("a", "b"), ("a", "c"), ("b", "c")])
    assert central_vertices(kn_plus_isolated) == []
    assert central_vertices(Graph(["a"])) == ["a"]


def test_all_cliques_counts():
    assert len(all_cliques(complete_graph(3))) == 8
    c4 = all_cliques(cycle_graph(4))
    assert len(c4) == 9  # empty + 4 vertices + 4 edges
    assert max(len(c) for c in c4) == 2
    hbar = overlapping_gems_graph()
    fours = [c for c in all_cliques(hbar) if len(c) == 4]
    assert fours == [("a", "b", "c", "d")]


def test_all_cliques_downward_closed():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 7)
        edges = [
            (str(i), str(j))
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.6
        ]
        g = Graph([str(i) for i in range(n)], edges)
        cliques = set(all_cliques(g))
        for c in cliques:
            for drop in range(len(c)):
                assert c[:drop] + c[drop + 1:] in cliques


def test_clique_number():
    assert clique_number(gem_graph()) == 3
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(path_graph(6)) == 2
    assert clique_number(star_graph(3)) == 2
    assert clique_number(Graph([])) == 0
    assert clique_number(Graph(["a"])) == 1


def test_canonical_form_bound():
    with pytest.raises(CapacityError):
        canonical_form(path_graph(11))
    assert canonical_form(path_graph(11), max_vertices=11)
