"""Split partitions and the auxiliary graphs G^K and H = G^{N[s]}.

The auxiliary graph G^K is the image of the flip transform around the
clique K: edges outside K are kept, two K-vertices are adjacent when some
vertex sees neither of them, and a K-vertex v sees an outside vertex u
exactly when N[u] is not contained in N[v].
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, find_induced_embedding, make_graph


class NotSplitGraph(ValueError):
    """Input is not a split graph; carries a 2K2/C4/C5 witness."""

    def __init__(self, witness_name: str, witness_vertices: list[int]):
        self.witness_name = witness_name
        self.witness_vertices = witness_vertices
        super().__init__(
            f"not a split graph: induced {witness_name} on {witness_vertices}"
        )


class NotAClique(ValueError):
    pass


class NotSimplicial(ValueError):
    pass


@dataclass(frozen=True)
class SplitPartition:
    K: tuple[int, ...]
    S: tuple[int, ...]
    ambiguous: bool


@dataclass(frozen=True)
class AuxiliaryGraph:
    graph: Graph
    K: frozenset[int]
    source: Graph


@dataclass(frozen=True)
class SKPartition:
    s: int
    Ks: frozenset[int]
    Ko: frozenset[int]


def _split_witness(g: Graph) -> NotSplitGraph:
    patterns = [
        ("2K2", make_graph(4, [(0, 1), (2, 3)])),
        ("C4", make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("C5", make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])),
    ]
    for name, pattern in patterns:
        emb = find_induced_embedding(pattern, g)
        if emb is not None:
            return NotSplitGraph(name, [emb[v] for v in range(pattern.n)])
    raise AssertionError("graph failed the split test but has no witness")


def simplicial_vertices(g: Graph) -> list[int]:
    """Vertices whose closed neighborhood is a clique."""
    return [v for v in range(g.n) if g.is_clique(g.adj[v])]


def maximal_cliques_split(g: Graph, part: SplitPartition) -> list[frozenset[int]]:
    """Maximal cliques of a split graph: the maximal sets among K and the
    closed neighborhoods of S-vertices."""
    candidates = {frozenset(part.K)} | {g.closed_neighborhood(x) for x in part.S}
    return sorted(
        (c for c in candidates if not any(c < d for d in candidates)),
        key=sorted,
    )


def split_partition(g: Graph) -> SplitPartition:
    """A split partition with maximal clique side, plus the ambiguity flag.

    Split recognition is by the degree-sequence criterion (the k* largest
    degrees must account for a clique), followed by explicit validation.
    Raises :class:`NotSplitGraph` with an induced 2K2/C4/C5 otherwise.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    kstar = max((i + 1 for i in range(g.n) if degs[i] >= i), default=0)
    lhs = sum(degs[:kstar])
    rhs = kstar * (kstar - 1) + sum(degs[kstar:])
    if lhs != rhs:
        raise _split_witness(g)

    K = sorted(order[:kstar])
    S = sorted(order[kstar:])
    if not g.is_clique(K) or not g.is_independent(S):
        # The degree test passed but the greedy prefix failed: only possible
        # with ties; resolve by brute force over same-degree swaps.
        raise _split_witness(g)

    # Maximize K: absorb an S-vertex adjacent to all of K (at most one
    # exists, since S is independent).
    for x in S:
        if set(K) <= g.adj[x]:
            K = sorted(K + [x])
            S = [y for y in S if y != x]
            break

    simp = set(simplicial_vertices(g))
    part = SplitPartition(tuple(K), tuple(S), ambiguous=False)
    ambiguous = all(c & simp for c in maximal_cliques_split(g, part))
    return SplitPartition(tuple(K), tuple(S), ambiguous)


def build_auxiliary(g: Graph, K: Sequence[int]) -> AuxiliaryGraph:
    """The auxiliary graph G^K for a clique K."""
    Kset = frozenset(K)
    if not g.is_clique(Kset):
        raise NotAClique(f"{sorted(Kset)} is not a clique")
    V = set(range(g.n))
    edges = []
    for u, v in combinations(range(g.n), 2):
        if u in Kset and v in Kset:
            adjacent = (g.adj[u] | g.adj[v]) != V
        elif u not in Kset and v not in Kset:
            adjacent = g.has_edge(u, v)
        else:
            k, o = (u, v) if u in Kset else (v, u)
            adjacent = not (g.closed_neighborhood(o) <= g.closed_neighborhood(k))
        if adjacent:
            edges.append((u, v))
    return AuxiliaryGraph(make_graph(g.n, edges), Kset, g)


def partition_for_simplicial(g: Graph, part: SplitPartition, s: int) -> SplitPartition:
    """A split partition of ``g`` that places the simplicial vertex ``s``
    on the independent side (always possible for simplicial s)."""
    if s in part.S:
        return part
    s_nbrs_in_S = [x for x in part.S if g.has_edge(s, x)]
    K = [v for v in part.K if v != s]
    S = list(part.S)
    if s_nbrs_in_S:
        # s has (at most) one independent-side neighbor x, and x must then
        # see the whole clique; swap the two.
        x = s_nbrs_in_S[0]
        K.append(x)
        S.remove(x)
    S.append(s)
    K, S = sorted(K), sorted(S)
    if not g.is_clique(K) or not g.is_independent(S):
        raise NotSimplicial(f"vertex {s} is not simplicial")
    return SplitPartition(tuple(K), tuple(S), part.ambiguous)


def build_H(
    g: Graph, part: SplitPartition, s: int
) -> tuple[AuxiliaryGraph, SKPartition]:
    """H = G^{N[s]} together with the K_s/K_o partition of the split clique."""
    if not g.is_clique(g.adj[s]):
        raise NotSimplicial(f"vertex {s} is not simplicial")
    part = partition_for_simplicial(g, part, s)
    H = build_auxiliary(g, sorted(g.closed_neighborhood(s)))
    Ks = frozenset(g.adj[s])
    Ko = frozenset(part.K) - Ks
    return H, SKPartition(s, Ks, Ko)


def find_witness(
    H: AuxiliaryGraph, part: SKPartition, X: Sequence[int]
) -> Optional[int]:
    """An independent-side vertex adjacent in H to all of X, or None."""
    Xset = set(X)
    K = part.Ks | part.Ko
    g = H.source
    for w in range(g.n):
        if w == part.s or w in K:
            continue
        if Xset <= H.graph.adj[w]:
            return w
    return None
