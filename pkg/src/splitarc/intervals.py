"""Interval-graph machinery: chordality, clique paths, modules, and
minimal non-interval induced subgraphs.

A clique path is a linear order of all maximal cliques in which every
vertex's cliques are consecutive; a chordal graph admits one exactly when
it is an interval graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence, Union

from . import catalog
from .graph import Graph, connected_components, induced_subgraph


@dataclass(frozen=True)
class HoleWitness:
    vertices: tuple[int, ...]  # an induced cycle of length >= 4, in order


@dataclass(frozen=True)
class CliquePath:
    """Maximal cliques K_0..K_{l-1} in consecutive order, with each
    vertex's first (lk) and last (rk) containing index."""

    cliques: tuple[frozenset[int], ...]
    lk: dict[int, int]
    rk: dict[int, int]

    def __len__(self) -> int:
        return len(self.cliques)


def make_clique_path(cliques: Sequence[frozenset[int]]) -> CliquePath:
    lk: dict[int, int] = {}
    rk: dict[int, int] = {}
    for i, c in enumerate(cliques):
        for v in c:
            lk.setdefault(v, i)
            rk[v] = i
    return CliquePath(tuple(cliques), lk, rk)


def validate_clique_path(cp: CliquePath, g: Graph) -> bool:
    """Consecutiveness and exact maximal-clique coverage against g."""
    expected = set(maximal_cliques(g))
    if set(cp.cliques) != expected or len(cp.cliques) != len(expected):
        return False
    for v in range(g.n):
        if v not in cp.lk:
            return False
        for i, c in enumerate(cp.cliques):
            if (v in c) != (cp.lk[v] <= i <= cp.rk[v]):
                return False
    return True


def lex_bfs(g: Graph) -> list[int]:
    """A lexicographic BFS order (first visited first)."""
    labels: dict[int, list[int]] = {v: [] for v in range(g.n)}
    order: list[int] = []
    unvisited = set(range(g.n))
    time = g.n
    while unvisited:
        v = max(unvisited, key=lambda u: (labels[u], -u))
        order.append(v)
        unvisited.remove(v)
        for w in g.adj[v]:
            if w in unvisited:
                labels[w].append(time)
        time -= 1
    return order


def is_chordal(g: Graph) -> Union[list[int], HoleWitness]:
    """A perfect elimination order (reversed Lex-BFS order) or a hole."""
    order = lex_bfs(g)
    pos = {v: i for i, v in enumerate(order)}
    # Reverse of a Lex-BFS order is a PEO iff the graph is chordal: each
    # vertex's earlier-ordered neighbors must form a clique.
    for v in order:
        earlier = [w for w in g.adj[v] if pos[w] < pos[v]]
        for x, y in combinations(earlier, 2):
            if not g.has_edge(x, y):
                hole = _extract_hole(g, v, x, y)
                if hole is not None:
                    return hole
    peo = list(reversed(order))
    # Full re-check (paranoia against extraction order subtleties).
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        for x, y in combinations(later, 2):
            if not g.has_edge(x, y):
                hole = _extract_hole(g, v, x, y)
                if hole is not None:
                    return hole
                raise AssertionError("PEO check failed but no hole found")
    return peo


def _extract_hole(g: Graph, v: int, x: int, y: int) -> Optional[HoleWitness]:
    """Try to close a hole through x - v - y with a shortest x..y path
    avoiding N[v]; fall back to a brute-force shortest-hole search."""
    forbidden = (g.closed_neighborhood(v) - {x, y})
    path = _shortest_path_avoiding(g, x, y, forbidden)
    if path is not None and len(path) >= 3:
        cycle = [v] + path
        if _is_hole(g, cycle):
            return HoleWitness(tuple(cycle))
    # Fallback: directly search for an induced cycle, shortest first.
    for length in range(4, g.n + 1):
        emb = catalog.find_induced_embedding(
            catalog.generate(catalog.hole(length)), g
        )
        if emb is not None:
            return HoleWitness(tuple(emb[i] for i in range(length)))
    return None


def _shortest_path_avoiding(
    g: Graph, a: int, b: int, forbidden: frozenset[int]
) -> Optional[list[int]]:
    if a in forbidden or b in forbidden:
        return None
    prev: dict[int, Optional[int]] = {a: None}
    queue = [a]
    while queue:
        nxt: list[int] = []
        for u in queue:
            for w in g.adj[u]:
                if w in forbidden or w in prev:
                    continue
                prev[w] = u
                if w == b:
                    path = [b]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])  # type: ignore[arg-type]
                    return list(reversed(path))
                nxt.append(w)
        queue = nxt
    return None


def _is_hole(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, j in combinations(range(k), 2):
        adjacent = g.has_edge(cycle[i], cycle[j])
        consecutive = (j - i == 1) or (i == 0 and j == k - 1)
        if adjacent != consecutive:
            return False
    return True


def maximal_cliques_chordal(g: Graph, peo: Sequence[int]) -> list[frozenset[int]]:
    """The maximal cliques of a chordal graph from a perfect elimination
    order: candidate cliques v + later neighbors, filtered for maximality."""
    pos = {v: i for i, v in enumerate(peo)}
    candidates = []
    for v in peo:
        later = frozenset(w for w in g.adj[v] if pos[w] > pos[v])
        candidates.append(frozenset({v}) | later)
    unique = set(candidates)
    return sorted(
        (c for c in unique if not any(c < d for d in unique)), key=sorted
    )


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    peo = is_chordal(g)
    if isinstance(peo, HoleWitness):
        raise ValueError("graph is not chordal")
    return maximal_cliques_chordal(g, peo)


def _arrangements(
    cliques: Sequence[frozenset[int]],
) -> Iterator[tuple[frozenset[int], ...]]:
    """All consecutive arrangements of the given maximal cliques, by
    backtracking with closed-vertex pruning (deterministic order)."""
    cliques = sorted(cliques, key=sorted)
    n = len(cliques)
    used = [False] * n
    chosen: list[int] = []

    def viable(idx: int) -> bool:
        cand = cliques[idx]
        open_vertices = set()
        closed: set[int] = set()
        for j in chosen:
            open_vertices |= cliques[j]
        # A vertex is closed if it appeared before the previous clique
        # but not in it.
        seen: set[int] = set()
        for j in chosen:
            closed |= seen - cliques[j]
            seen |= cliques[j]
        if cand & closed:
            return False
        return True

    def rec() -> Iterator[tuple[frozenset[int], ...]]:
        if len(chosen) == n:
            yield tuple(cliques[j] for j in chosen)
            return
        for idx in range(n):
            if used[idx] or not viable(idx):
                continue
            used[idx] = True
            chosen.append(idx)
            yield from rec()
            chosen.pop()
            used[idx] = False

    yield from rec()


def iter_clique_paths(g: Graph) -> Iterator[CliquePath]:
    """All clique paths of a chordal graph (empty iterator when g is not
    an interval graph)."""
    for arrangement in _arrangements(maximal_cliques(g)):
        yield make_clique_path(arrangement)


def clique_path(g: Graph) -> Optional[CliquePath]:
    """One clique path, or ``None`` when g is not an interval graph."""
    if isinstance(is_chordal(g), HoleWitness):
        return None
    for cp in iter_clique_paths(g):
        return cp
    return None


def is_interval(g: Graph) -> bool:
    return clique_path(g) is not None


class IsInterval(ValueError):
    pass


def minimal_non_interval(
    g: Graph,
) -> tuple[list[int], catalog.FamilyId, dict[int, int]]:
    """An inclusion-minimal vertex set inducing a non-interval subgraph,
    classified as hole/long claw/whipping top/dag/ddag.

    Returns (vertices of g, family, isomorphism family -> g).
    Greedy one-pass deletion: kept vertices are exactly those whose removal
    would make the current graph interval, which yields minimality because
    interval graphs are hereditary.
    """
    if is_interval(g):
        raise IsInterval("input is an interval graph")
    keep = list(range(g.n))
    for v in range(g.n):
        trial = [u for u in keep if u != v]
        sub, _ = induced_subgraph(g, trial)
        if not is_interval(sub):
            keep = trial
    core, back = induced_subgraph(g, keep)
    named = catalog.classify_minimal_forbidden(core, "interval")
    if named is None:
        raise AssertionError(
            f"minimal non-interval graph matches no catalog family: {core!r}"
        )
    fam, emb = named
    return keep, fam, {p: back[h] for p, h in emb.items()}


def maximal_nonclique_modules(g: Graph) -> list[frozenset[int]]:
    """The inclusion-maximal vertex sets M with M != V, M a module, and no
    vertex of g[M] universal in g[M] (desk-scale subset enumeration)."""
    if g.n > 18:
        raise ValueError("module enumeration limited to n <= 18")
    qualifying: list[frozenset[int]] = []
    vertices = list(range(g.n))
    for size in range(2, g.n):
        for sub in combinations(vertices, size):
            M = frozenset(sub)
            if _has_internal_universal(g, M):
                continue
            if _is_module(g, M):
                qualifying.append(M)
    return sorted(
        (M for M in qualifying if not any(M < N for N in qualifying)),
        key=sorted,
    )


def _has_internal_universal(g: Graph, M: frozenset[int]) -> bool:
    return any(M - {v} <= g.adj[v] for v in M)


def _is_module(g: Graph, M: frozenset[int]) -> bool:
    for w in range(g.n):
        if w in M:
            continue
        inside = g.adj[w] & M
        if inside and inside != M:
            return False
    return True


def quasi_prime_contract(
    g: Graph,
    modules: Sequence[frozenset[int]],
    preferred: frozenset[int] = frozenset(),
) -> tuple[Graph, list[int], dict[int, frozenset[int]]]:
    """Replace each module with a representative (taken from ``preferred``
    when possible, else lowest id).

    Returns (contracted graph, kept original ids in new-id order,
    representative original id -> its module).
    """
    reps: dict[int, frozenset[int]] = {}
    drop: set[int] = set()
    for M in modules:
        pool = sorted(M & preferred) or sorted(M)
        x = pool[0]
        reps[x] = M
        drop |= M - {x}
    kept = [v for v in range(g.n) if v not in drop]
    contracted, back = induced_subgraph(g, kept)
    return contracted, back, reps
