"""Immutable simple graphs with induced-subgraph embedding and isomorphism.

Vertices are dense 0-based ids.  All operations are pure: every edit
produces a new graph, so certificates can reference stable vertex ids.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph constructions (bad ids, self-loops)."""


class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Instances are immutable; build them with :func:`make_graph`.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[frozenset[int], ...]):
        self.n = n
        self.adj = adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adj), reverse=True))

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices with the given (deduplicated) edges."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def induced_subgraph(g: Graph, vs: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vs`` with dense relabeling.

    Returns the subgraph and the relabeling map (new id -> old id).
    """
    vs = sorted(set(vs))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex id out of range: {v}")
    index = {old: new for new, old in enumerate(vs)}
    edges = [
        (index[u], index[v]) for u, v in combinations(vs, 2) if g.has_edge(u, v)
    ]
    return make_graph(len(vs), edges), vs


def complement(g: Graph) -> Graph:
    edges = [
        (u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)
    ]
    return make_graph(g.n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(comp))
    return components


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def find_induced_embedding(
    pattern: Graph,
    host: Graph,
    pattern_roles: Optional[Sequence[object]] = None,
    host_roles: Optional[Sequence[object]] = None,
) -> Optional[dict[int, int]]:
    """Find an injective map pattern -> host preserving adjacency *and*
    non-adjacency (an induced copy), or ``None``.

    When role sequences are given, the map must also preserve roles; a
    pattern role of ``None`` matches any host role.
    """
    if pattern.n > host.n:
        return None

    # Most-constrained-first ordering: grow a connected frontier, high
    # degree first, so adjacency constraints bite early.
    order: list[int] = []
    placed = set()
    remaining = set(pattern.vertices())
    while remaining:
        frontier = [v for v in remaining if pattern.adj[v] & placed]
        pool = frontier if frontier else list(remaining)
        nxt = max(pool, key=lambda v: (pattern.degree(v), -v))
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)

    mapping: dict[int, int] = {}
    used = [False] * host.n

    def ok(pv: int, hv: int) -> bool:
        if pattern.degree(pv) > host.degree(hv):
            return False
        if pattern_roles is not None:
            want = pattern_roles[pv]
            if want is not None and host_roles is not None and host_roles[hv] != want:
                return False
        for qv, qh in mapping.items():
            if pattern.has_edge(pv, qv) != host.has_edge(hv, qh):
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        for hv in range(host.n):
            if not used[hv] and ok(pv, hv):
                mapping[pv] = hv
                used[hv] = True
                if backtrack(i + 1):
                    return True
                del mapping[pv]
                used[hv] = False
        return False

    return dict(mapping) if backtrack(0) else None


def is_isomorphic(a: Graph, b: Graph) -> Optional[dict[int, int]]:
    """An isomorphism a -> b as a dict, or ``None``.

    Truthy exactly when the graphs are isomorphic (the empty graph maps
    to the empty dict, so compare against ``None`` for 0-vertex inputs).
    """
    if a.n != b.n or a.edge_count() != b.edge_count():
        return None
    if a.degree_sequence() != b.degree_sequence():
        return None
    if a.n == 0:
        return {}
    # An induced embedding between equal-sized graphs with equal edge
    # counts is a full isomorphism.
    return find_induced_embedding(a, b)


def canonical_form(g: Graph) -> bytes:
    """A complete isomorphism invariant for small graphs.

    Minimum upper-triangle adjacency bitstring over all relabelings that
    sort the degree sequence (brute force within degree classes; meant
    for n <= ~7 enumeration dedup).
    """
    byclass: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    for v in range(g.n):
        nbr_degs = tuple(sorted(g.degree(w) for w in g.adj[v]))
        byclass.setdefault((g.degree(v), nbr_degs), []).append(v)
    keys = sorted(byclass, reverse=True)
    classes = [byclass[k] for k in keys]

    best: Optional[bytes] = None

    def rec(i: int, prefix: list[int]) -> None:
        nonlocal best
        if i == len(classes):
            bits = bytearray()
            for u, v in combinations(prefix, 2):
                bits.append(1 if g.has_edge(u, v) else 0)
            cand = bytes(bits)
            if best is None or cand < best:
                best = cand
            return
        for perm in permutations(classes[i]):
            rec(i + 1, prefix + list(perm))

    rec(0, [])
    header = bytes([g.n])
    return header + (best if best is not None else b"")
