"""Brute-force reference checkers, independent of the recognizer.

The circular-arc oracle searches over circular orders of arc endpoints;
the interval oracle tries every permutation of the maximal cliques.  Both
return verified models, so they double as ground truth for small graphs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator, Optional

import networkx as nx

from .graph import Graph, canonical_form, make_graph
from .models import ArcModel, IntervalModel, verify_realizes


class OracleTooLarge(ValueError):
    pass


def oracle_is_interval(g: Graph, clique_limit: int = 9) -> Optional[IntervalModel]:
    """A verified interval model, or ``None`` when g is not interval.

    Exhaustive over permutations of the maximal cliques; refuses graphs
    with more than ``clique_limit`` of them.
    """
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges())
    if not nx.is_chordal(ng):
        return None
    cliques = [frozenset(c) for c in nx.find_cliques(ng)]
    if len(cliques) > clique_limit:
        raise OracleTooLarge(f"{len(cliques)} maximal cliques")
    for perm in permutations(range(len(cliques))):
        lk: dict[int, int] = {}
        rk: dict[int, int] = {}
        for pos, idx in enumerate(perm):
            for v in cliques[idx]:
                lk.setdefault(v, pos)
                rk[v] = pos
        consecutive = all(
            (v in cliques[idx]) == (lk[v] <= pos <= rk[v])
            for pos, idx in enumerate(perm)
            for v in range(g.n)
        )
        if not consecutive:
            continue
        spans = tuple((4 * lk[v] + 1, 4 * rk[v] + 3) for v in range(g.n))
        m = IntervalModel(spans)
        ok, _ = verify_realizes(m, g)
        assert ok
        return m
    return None


def oracle_is_ca(g: Graph, vertex_limit: int = 8) -> Optional[ArcModel]:
    """A verified arc model, or ``None`` when g is not circular-arc.

    Exhaustive search over circular orders of 2n distinct endpoints
    (every circular-arc graph has a model with distinct endpoints and no
    full-circle arc, so this is complete).
    """
    if g.n > vertex_limit:
        raise OracleTooLarge(f"{g.n} vertices")
    if g.n == 0:
        return ArcModel(1, ())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))

    # arrangement: list of (vertex, is_right) endpoint symbols in circular
    # order; vertex order[0]'s left endpoint is pinned at position 0.
    first = order[0]
    arrangement: list[tuple[int, bool]] = [(first, False), (first, True)]

    def intersects(a: tuple[int, int], b: tuple[int, int], size: int) -> bool:
        def inside(p: int, arc: tuple[int, int]) -> bool:
            lp, rp = arc
            if lp <= rp:
                return lp <= p <= rp
            return p >= lp or p <= rp

        return (
            inside(b[0], a)
            or inside(b[1], a)
            or inside(a[0], b)
        )

    def consistent(placed: list[int]) -> bool:
        pos: dict[int, list[int]] = {}
        for p, (v, right) in enumerate(arrangement):
            pos.setdefault(v, [None, None])[1 if right else 0] = p  # type: ignore[list-item]
        size = len(arrangement)
        last = placed[-1]
        arc_last = (pos[last][0], pos[last][1])
        for v in placed[:-1]:
            arc_v = (pos[v][0], pos[v][1])
            if intersects(arc_last, arc_v, size) != g.has_edge(last, v):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        size = len(arrangement)
        for p1 in range(1, size + 1):
            arrangement.insert(p1, (v, False))
            for p2 in range(1, size + 2):
                if p2 == p1:
                    continue
                arrangement.insert(p2, (v, True))
                if consistent(order[: i + 1]) and search(i + 1):
                    return True
                arrangement.remove((v, True))
            arrangement.remove((v, False))
        return False

    if not search(1):
        return None

    pos = {(v, r): p for p, (v, r) in enumerate(arrangement)}
    L = 2 * g.n
    arcs = tuple((pos[(v, False)], pos[(v, True)]) for v in range(g.n))
    model = ArcModel(L, arcs)
    ok, _ = verify_realizes(model, g)
    assert ok
    return model


def _quick_split(degs: list[int]) -> bool:
    d = sorted(degs, reverse=True)
    n = len(d)
    kstar = max((i + 1 for i in range(n) if d[i] >= i), default=0)
    return sum(d[:kstar]) == kstar * (kstar - 1) + sum(d[kstar:])


def enumerate_split_graphs(n: int) -> Iterator[Graph]:
    """All split graphs on n vertices, one per isomorphism class."""
    if n > 7:
        raise OracleTooLarge("enumeration limited to n <= 7")
    pairs = list(combinations(range(n), 2))
    seen: set[bytes] = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        degs = [0] * n
        for u, v in edges:
            degs[u] += 1
            degs[v] += 1
        if not _quick_split(degs):
            continue
        g = make_graph(n, edges)
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        yield g


def random_split_graph(
    n: int, rng: random.Random, connected: bool = False
) -> Graph:
    """A random split graph: random clique/independent sizes, random
    cross edges (rejection sampling for connectivity when asked)."""
    while True:
        k = rng.randint(1, max(1, n - 1)) if n > 1 else n
        vs = list(range(n))
        rng.shuffle(vs)
        K, S = vs[:k], vs[k:]
        edges = [(u, v) for u, v in combinations(K, 2)]
        p = rng.random()
        for x in S:
            for v in K:
                if rng.random() < p:
                    edges.append((x, v))
        g = make_graph(n, edges)
        if not connected:
            return g
        if _connected(g):
            return g


def _connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
