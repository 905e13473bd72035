import random
from itertools import permutations

import pytest

from splitarc import catalog
from splitarc.catalog import generate
from splitarc.graph import induced_subgraph, make_graph
from splitarc.intervals import (
    HoleWitness,
    IsInterval,
    clique_path,
    is_chordal,
    is_interval,
    iter_clique_paths,
    maximal_cliques,
    maximal_nonclique_modules,
    minimal_non_interval,
    quasi_prime_contract,
    validate_clique_path,
)


def random_graph(n, p, rng):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return make_graph(n, edges)


def nx_graph(g):
    import networkx as nx

    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges())
    return ng


class TestChordal:
    def test_peo_on_tree(self):
        g = make_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        peo = is_chordal(g)
        assert not isinstance(peo, HoleWitness)
        pos = {v: i for i, v in enumerate(peo)}
        for v in range(g.n):
            later = [w for w in g.adj[v] if pos[w] > pos[v]]
            assert g.is_clique(later)

    def test_hole_in_c4(self):
        c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        w = is_chordal(c4)
        assert isinstance(w, HoleWitness) and len(w.vertices) == 4

    def test_hole_is_induced_cycle(self):
        rng = random.Random(5)
        found = 0
        for _ in range(300):
            g = random_graph(rng.randint(4, 9), rng.random(), rng)
            w = is_chordal(g)
            if isinstance(w, HoleWitness):
                found += 1
                k = len(w.vertices)
                cyc = w.vertices
                for i in range(k):
                    for j in range(i + 1, k):
                        adjacent = g.has_edge(cyc[i], cyc[j])
                        consecutive = j - i == 1 or (i == 0 and j == k - 1)
                        assert adjacent == consecutive
        assert found > 50

    def test_agrees_with_networkx(self):
        import networkx as nx

        rng = random.Random(7)
        for _ in range(300):
            g = random_graph(rng.randint(0, 9), rng.random(), rng)
            ours = not isinstance(is_chordal(g), HoleWitness)
            assert ours == nx.is_chordal(nx_graph(g))


class TestMaximalCliques:
    def test_complete(self):
        k5 = make_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        assert maximal_cliques(k5) == [frozenset(range(5))]

    def test_net(self):
        assert len(maximal_cliques(generate(catalog.net()))) == 4

    def test_agrees_with_networkx(self):
        import networkx as nx

        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            if isinstance(is_chordal(g), HoleWitness):
                continue
            ours = set(maximal_cliques(g))
            theirs = {frozenset(c) for c in nx.find_cliques(nx_graph(g))}
            assert ours == theirs


class TestCliquePath:
    def test_path_graph(self):
        p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        cp = clique_path(p4)
        assert cp is not None and len(cp) == 3
        assert validate_clique_path(cp, p4)

    def test_non_chordal(self):
        c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert clique_path(c4) is None

    def test_chordal_non_interval(self):
        # the net is chordal but has no clique path
        assert clique_path(generate(catalog.net())) is None

    def test_lk_rk_consecutive(self):
        g = make_graph(6, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
        cp = clique_path(g)
        assert cp is not None
        for v in range(g.n):
            for i, c in enumerate(cp.cliques):
                assert (v in c) == (cp.lk[v] <= i <= cp.rk[v])

    def test_agrees_with_permutation_search(self):
        # clique_path succeeds exactly when some permutation of maximal
        # cliques is consecutive.
        rng = random.Random(13)
        for _ in range(200):
            g = random_graph(rng.randint(1, 8), rng.random(), rng)
            if isinstance(is_chordal(g), HoleWitness):
                continue
            cliques = maximal_cliques(g)
            if len(cliques) > 7:
                continue
            brute = False
            for perm in permutations(cliques):
                lk, rk = {}, {}
                for i, c in enumerate(perm):
                    for v in c:
                        lk.setdefault(v, i)
                        rk[v] = i
                if all(
                    (v in c) == (lk[v] <= i <= rk[v])
                    for i, c in enumerate(perm)
                    for v in range(g.n)
                ):
                    brute = True
                    break
            assert (clique_path(g) is not None) == brute

    def test_iter_yields_distinct_valid_paths(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        paths = list(iter_clique_paths(star))
        assert len(paths) == 6  # 3! orderings of the edges
        assert len({p.cliques for p in paths}) == 6
        for p in paths:
            assert validate_clique_path(p, star)

    def test_disconnected(self):
        g = make_graph(4, [(0, 1), (2, 3)])
        cp = clique_path(g)
        assert cp is not None and len(cp) == 2


class TestMinimalNonInterval:
    def test_raises_on_interval(self):
        with pytest.raises(IsInterval):
            minimal_non_interval(make_graph(3, [(0, 1), (1, 2)]))

    def test_families_return_themselves(self):
        for fam in [
            catalog.hole(5),
            catalog.long_claw(),
            catalog.whipping_top(),
            catalog.dag(2),
            catalog.ddag(1),
        ]:
            g = generate(fam)
            keep, named, emb = minimal_non_interval(g)
            assert sorted(keep) == list(range(g.n))
            assert named == fam

    def test_random_minimality_and_classification(self):
        rng = random.Random(17)
        done = 0
        while done < 60:
            g = random_graph(rng.randint(4, 9), rng.random(), rng)
            if is_interval(g):
                continue
            done += 1
            keep, fam, emb = minimal_non_interval(g)
            sub, _ = induced_subgraph(g, keep)
            assert not is_interval(sub)
            for v in keep:
                rest, _ = induced_subgraph(g, [u for u in keep if u != v])
                assert is_interval(rest)
            pattern = generate(fam)
            assert pattern.n == len(keep)
            for u in range(pattern.n):
                for v in range(u + 1, pattern.n):
                    assert pattern.has_edge(u, v) == g.has_edge(emb[u], emb[v])


class TestModules:
    def test_star_leaves(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        mods = maximal_nonclique_modules(star)
        assert mods == [frozenset({1, 2, 3})]

    def test_prime_path(self):
        p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert maximal_nonclique_modules(p4) == []

    def test_qualifying_and_maximal(self):
        rng = random.Random(19)
        for _ in range(150):
            g = random_graph(rng.randint(2, 8), rng.random(), rng)
            mods = maximal_nonclique_modules(g)
            for M in mods:
                assert M != frozenset(range(g.n))
                assert not any(M - {v} <= g.adj[v] for v in M)
                for w in range(g.n):
                    if w not in M:
                        inside = g.adj[w] & M
                        assert not inside or inside == M
                assert not any(M < N for N in mods)

    def test_contract_prefers_preferred(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        mods = maximal_nonclique_modules(star)
        contracted, kept, reps = quasi_prime_contract(
            star, mods, preferred=frozenset({2})
        )
        assert contracted.n == 2
        assert 2 in kept and reps[2] == frozenset({1, 2, 3})

    def test_contract_gives_quasi_prime(self):
        # After contraction, every remaining non-clique module has an
        # internally universal vertex, i.e. none qualifies.
        rng = random.Random(23)
        for _ in range(100):
            g = random_graph(rng.randint(2, 8), rng.random(), rng)
            mods = maximal_nonclique_modules(g)
            contracted, _, _ = quasi_prime_contract(g, mods)
            assert maximal_nonclique_modules(contracted) == []
