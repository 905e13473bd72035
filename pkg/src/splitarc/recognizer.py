"""Certifying recognition of circular-arc and Helly circular-arc split
graphs.

YES answers carry a verified arc model built by flipping an interval
model of an auxiliary graph; NO answers carry a minimal forbidden induced
subgraph named against the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import auxiliary, catalog, models
from .auxiliary import SKPartition, build_auxiliary, build_H, split_partition
from .graph import Graph, induced_subgraph
from .intervals import (
    CliquePath,
    clique_path,
    iter_clique_paths,
    make_clique_path,
    maximal_cliques,
    maximal_nonclique_modules,
    validate_clique_path,
)
from .models import (
    ArcModel,
    clique_path_interval_model,
    flip,
    model_span,
    verify_condition2,
    verify_helly,
    verify_realizes,
)


class UnclassifiedMinimalGraph(RuntimeError):
    """A minimal forbidden subgraph matched no catalog family (a bug, or
    an input outside the supported class)."""


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Certificate:
    """The answer plus its evidence.

    YES: ``model`` is a verified arc model of the input (and for the
    Helly question, verified Helly).  NO: ``family`` names a minimal
    forbidden induced subgraph and ``embedding`` maps the canonical
    family member's ids into the input.
    """

    is_member: bool
    question: str  # "ca" or "hca"
    model: Optional[ArcModel] = None
    family: Optional[catalog.FamilyId] = None
    embedding: Optional[dict[int, int]] = None

    @property
    def witness_vertices(self) -> Optional[list[int]]:
        if self.embedding is None:
            return None
        return sorted(self.embedding.values())


# ---------------------------------------------------------------------------
# The clique-path condition: find a clique path of H on which every K_s
# vertex keeps its K_o neighbors in its end cliques.


def decide_condition2(H: Graph, part: SKPartition) -> Optional[CliquePath]:
    """A clique path of the (interval) auxiliary graph H satisfying the
    end-clique condition, or ``None`` when no clique path does.

    Runs the structural reduction (universal vertices out, components
    apart, modules contracted to one representative, the quasi-prime
    core's essentially unique path checked and re-expanded); any failure
    or unexpected shape falls back to a pruned exhaustive search, so the
    answer is always exact.
    """
    ks, ko = set(part.Ks), set(part.Ko)
    cliques = _solve_condition2(H, frozenset(range(H.n)), ks, ko)
    if cliques is not None:
        cp = make_clique_path(cliques)
        if validate_clique_path(cp, H) and verify_condition2(cp, part).ok:
            return cp
    return _exhaustive_condition2(H, part)


def _cond2_ok(
    cliques: list[frozenset[int]], ks: set[int], ko: set[int]
) -> bool:
    lk: dict[int, int] = {}
    rk: dict[int, int] = {}
    for i, c in enumerate(cliques):
        for v in c:
            lk.setdefault(v, i)
            rk[v] = i
    for v in ks:
        if v not in lk:
            continue
        ends = cliques[lk[v]] | cliques[rk[v]]
        for u in ko:
            if u not in lk:
                continue
            share = lk[u] <= rk[v] and lk[v] <= rk[u]
            if share and u not in ends:
                return False
    return True


def _solve_condition2(
    H: Graph, vs: frozenset[int], ks: set[int], ko: set[int]
) -> Optional[list[frozenset[int]]]:
    """The maximal cliques of H[vs] in a condition-2 order, or ``None``."""
    if not vs:
        return []
    g, back = induced_subgraph(H, sorted(vs))
    n = g.n

    # Universal vertices outside K_s sit in every clique and constrain
    # nothing; peel them off.
    U = frozenset(
        back[v] for v in range(n) if g.degree(v) == n - 1 and back[v] not in ks
    )
    if U:
        rest = vs - U
        if not rest:
            return [U]
        sub = _solve_condition2(H, rest, ks, ko)
        if sub is None:
            return None
        return [c | U for c in sub]

    # Components are independent; concatenate their paths.
    comps = _components(g)
    if len(comps) > 1:
        out: list[frozenset[int]] = []
        for comp in comps:
            sub = _solve_condition2(
                H, frozenset(back[v] for v in comp), ks, ko
            )
            if sub is None:
                return None
            out.extend(sub)
        return out

    # Without K_o vertices the condition is vacuous.
    if not (vs & ko):
        cp = clique_path(g)
        if cp is None:
            return None
        return [frozenset(back[v] for v in c) for c in cp.cliques]

    # Contract maximal non-clique modules to one representative each
    # (preferring a K_o member); the core is quasi-prime, so its clique
    # path is forced up to reversal and the condition can just be checked.
    mods = [
        frozenset(back[v] for v in M) for M in maximal_nonclique_modules(g)
    ]
    reps: dict[int, frozenset[int]] = {}
    drop: set[int] = set()
    for M in mods:
        pool = sorted(M & ko) or sorted(M)
        reps[pool[0]] = M
        drop |= M - {pool[0]}
    core_vs = vs - drop
    gcore, backc = induced_subgraph(H, sorted(core_vs))
    cpc = clique_path(gcore)
    if cpc is None:
        return None
    result = [frozenset(backc[v] for v in c) for c in cpc.cliques]
    if not _cond2_ok(result, ks & core_vs, ko & core_vs):
        return None

    for x in sorted(reps):
        expanded = _expand_module(H, vs, result, x, reps[x], ks, ko)
        if expanded is None:
            return None
        result = expanded
    return result


def _components(g: Graph) -> list[list[int]]:
    from .graph import connected_components

    return connected_components(g)


def _expand_module(
    H: Graph,
    vs: frozenset[int],
    cliques: list[frozenset[int]],
    x: int,
    M: frozenset[int],
    ks: set[int],
    ko: set[int],
) -> Optional[list[frozenset[int]]]:
    positions = [i for i, c in enumerate(cliques) if x in c]
    if len(positions) != 1:
        return None  # unexpected shape; the fallback search takes over
    a = positions[0]
    outside = cliques[a] - {x}

    gM, backM = induced_subgraph(H, sorted(M))
    if not (M & ko):
        # No constraint reaches inside: any path of the module works.
        mp = clique_path(gM)
        if mp is None:
            return None
        block = [
            outside | frozenset(backM[v] for v in c) for c in mp.cliques
        ]
        return cliques[:a] + block + cliques[a + 1 :]

    m0 = min(M)
    NM = (H.adj[m0] & vs) - M
    ks_nm = NM & ks
    if not ks_nm:
        # Outside K_s vertices never see the module; recurse freely.
        sub = _solve_condition2(H, M, ks, ko)
        if sub is None:
            return None
        block = [outside | c for c in sub]
        return cliques[:a] + block + cliques[a + 1 :]

    # A K_s vertex spanning the whole module block: the block end next to
    # its continuation must hold every K_o member of the module.
    ext_l = a > 0 and bool(ks_nm & cliques[a - 1])
    ext_r = a + 1 < len(cliques) and bool(ks_nm & cliques[a + 1])
    if a > 0 and a + 1 < len(cliques):
        for v in ks_nm:
            if v in cliques[a - 1] and v in cliques[a + 1]:
                return None  # both of v's end cliques miss the module
    mko = M & ko
    mks = M & ks

    budget = 20000
    for mp in iter_clique_paths(gM):
        budget -= 1
        if budget < 0:
            return None
        bc = [frozenset(backM[v] for v in c) for c in mp.cliques]
        first, last = bc[0], bc[-1]
        if ext_l and not mko <= last:
            continue
        if ext_r and not mko <= first:
            continue
        if not (ext_l or ext_r) and not mko <= first | last:
            continue
        if not _cond2_ok(bc, mks, mko):
            continue
        block = [outside | c for c in bc]
        return cliques[:a] + block + cliques[a + 1 :]
    return None


def _exhaustive_condition2(
    H: Graph, part: SKPartition, cap: int = 500_000
) -> Optional[CliquePath]:
    """Complete backtracking over consecutive clique arrangements with
    condition-2 pruning at vertex-close time."""
    cliques = maximal_cliques(H)
    m = len(cliques)
    ks, ko = part.Ks, part.Ko
    chosen: list[int] = []
    used = [False] * m
    lk: dict[int, int] = {}
    rk: dict[int, int] = {}
    nodes = 0

    def close_ok(v: int) -> bool:
        if v not in ks:
            return True
        ends = cliques[chosen[lk[v]]] | cliques[chosen[rk[v]]]
        span = [cliques[j] for j in chosen[lk[v] : rk[v] + 1]]
        for u in H.adj[v] & ko:
            if any(u in c for c in span):
                if u not in ends:
                    return False
            else:
                # Adjacent in H means they must share a clique, but all
                # of v's cliques are already placed.
                return False
        return True

    def rec() -> Optional[list[frozenset[int]]]:
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise SearchBudgetExceeded("condition-2 search exceeded budget")
        p = len(chosen)
        if p == m:
            return [cliques[j] for j in chosen]
        for idx in range(m):
            if used[idx]:
                continue
            c = cliques[idx]
            if any(v in lk and rk[v] < p - 1 for v in c):
                continue
            closing = [
                v
                for v in (cliques[chosen[-1]] - c)
                if rk.get(v) == p - 1
            ] if chosen else []
            chosen.append(idx)
            used[idx] = True
            saved = {v: (lk.get(v), rk.get(v)) for v in c}
            for v in c:
                lk.setdefault(v, p)
                rk[v] = p
            if all(close_ok(v) for v in closing):
                found = rec()
                if found is not None:
                    return found
            for v in c:
                slk, srk = saved[v]
                if slk is None:
                    del lk[v], rk[v]
                else:
                    lk[v], rk[v] = slk, srk
            chosen.pop()
            used[idx] = False
        return None

    found = rec()
    if found is None:
        return None
    cp = make_clique_path(found)
    # The pruning only fires at close time; the last cliques' vertices
    # were never checked, so verify in full.
    if verify_condition2(cp, part).ok:
        return cp
    # Rare: continue the search past the first full arrangement.
    for cp2 in _all_arrangements_checked(cliques, part, cap):
        return cp2
    return None


def _all_arrangements_checked(cliques, part, cap):
    from .intervals import _arrangements

    count = 0
    for arrangement in _arrangements(cliques):
        count += 1
        if count > cap:
            raise SearchBudgetExceeded("condition-2 search exceeded budget")
        cp = make_clique_path(list(arrangement))
        if verify_condition2(cp, part).ok:
            yield cp


# ---------------------------------------------------------------------------
# YES side: build verified models.


def _complete_model(n: int) -> ArcModel:
    # Nested arcs around a common point, all endpoints distinct.
    return ArcModel(
        2 * n + 2, tuple((n - v, n + 1 + v) for v in range(n))
    )


def _decide_ca(g: Graph) -> Optional[ArcModel]:
    if g.n == 0:
        return ArcModel(1, ())
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if len(universal) == g.n:
        return _complete_model(g.n)
    if universal:
        keep = [v for v in range(g.n) if v not in universal]
        sub, back = induced_subgraph(g, keep)
        inner = _decide_ca(sub)
        if inner is None:
            return None
        arcs: list[Optional[tuple[int, int]]] = [None] * g.n
        for new, old in enumerate(back):
            arcs[old] = inner.arcs[new]
        return ArcModel(inner.circle, tuple(arcs))

    twins = _true_twin_pair(g)
    if twins is not None:
        u, v = twins
        keep = [w for w in range(g.n) if w != v]
        sub, back = induced_subgraph(g, keep)
        inner = _decide_ca(sub)
        if inner is None:
            return None
        fwd = {old: new for new, old in enumerate(back)}
        L = 3 * inner.circle
        arcs = [None] * g.n
        for new, old in enumerate(back):
            arc = inner.arcs[new]
            arcs[old] = None if arc is None else (3 * arc[0], 3 * arc[1])
        base = inner.arcs[fwd[u]]
        assert base is not None  # u is not universal here
        arcs[v] = (3 * base[0] + 1, 3 * base[1] + 1)
        return ArcModel(L, tuple(arcs))

    part = split_partition(g)
    s = min(part.S, key=lambda x: (g.degree(x), x))
    H, sk = build_H(g, part, s)
    if clique_path(H.graph) is None:
        return None
    cp = decide_condition2(H.graph, sk)
    if cp is None:
        return None
    tiny = [
        x
        for x in range(g.n)
        if x != s and x not in sk.Ks and x not in sk.Ko
    ]
    m = clique_path_interval_model(cp, [[s], sorted(sk.Ko)], tiny, g.n)
    a = flip(m, sorted(sk.Ks | {s}), model_span(m) + 1)
    ok, pair = verify_realizes(a, g)
    assert ok, f"flipped model fails to realize the input at {pair}"
    return a


def _true_twin_pair(g: Graph) -> Optional[tuple[int, int]]:
    seen: dict[frozenset[int], int] = {}
    for v in range(g.n):
        key = g.closed_neighborhood(v)
        if key in seen:
            return seen[key], v
        seen[key] = v
    return None


def _decide_hca(g: Graph) -> Optional[ArcModel]:
    if g.n == 0:
        return ArcModel(1, ())
    part = split_partition(g)
    if not part.S:
        return _complete_model(g.n)
    aux = build_auxiliary(g, part.K)
    cp = clique_path(aux.graph)
    if cp is None:
        return None
    K = sorted(part.K)
    m = clique_path_interval_model(cp, [K], list(part.S), g.n)
    a = flip(m, K, model_span(m) + 1)
    ok, pair = verify_realizes(a, g)
    assert ok, f"flipped model fails to realize the input at {pair}"
    helly, bad = verify_helly(a, g)
    assert helly, f"constructed model is not Helly on clique {bad}"
    return a


# ---------------------------------------------------------------------------
# NO side: minimal forbidden subgraph extraction.


def _minimalize(
    g: Graph, member: Callable[[Graph], bool]
) -> tuple[list[int], Graph]:
    """Greedy one-pass deletion to an inclusion-minimal non-member (valid
    because membership is hereditary)."""
    keep = list(range(g.n))
    for v in range(g.n):
        trial = [u for u in keep if u != v]
        sub, _ = induced_subgraph(g, trial)
        if not member(sub):
            keep = trial
    core, _ = induced_subgraph(g, keep)
    return keep, core


def extract_no_certificate(
    g: Graph, question: str
) -> tuple[catalog.FamilyId, dict[int, int]]:
    """A minimal forbidden induced subgraph for ``question`` in
    {"ca", "hca"}, classified; the embedding maps the canonical family
    member into g."""
    member = {
        "ca": lambda h: _decide_ca(h) is not None,
        "hca": lambda h: _decide_hca(h) is not None,
    }[question]
    if member(g):
        raise ValueError("graph is a member; no forbidden subgraph exists")
    keep, core = _minimalize(g, member)
    named = catalog.classify_minimal_forbidden(core, question)
    if named is None:
        raise UnclassifiedMinimalGraph(
            f"minimal non-{question} graph matches no catalog family: {core!r}"
        )
    fam, emb = named
    return fam, {p: keep[h] for p, h in emb.items()}


# ---------------------------------------------------------------------------
# Public entry points.


def is_circular_arc(g: Graph) -> Certificate:
    """Certifying circular-arc recognition for split graphs.

    Raises :class:`auxiliary.NotSplitGraph` on non-split input.
    """
    split_partition(g)  # raises with a witness when not split
    model = _decide_ca(g)
    if model is not None:
        ok, _ = verify_realizes(model, g)
        assert ok
        return Certificate(True, "ca", model=model)
    fam, emb = extract_no_certificate(g, "ca")
    return Certificate(False, "ca", family=fam, embedding=emb)


def is_helly_circular_arc(g: Graph) -> Certificate:
    """Certifying Helly circular-arc recognition for split graphs."""
    split_partition(g)
    model = _decide_hca(g)
    if model is not None:
        return Certificate(True, "hca", model=model)
    fam, emb = extract_no_certificate(g, "hca")
    return Certificate(False, "hca", family=fam, embedding=emb)


def extract_annotated_configuration(
    H: Graph, part: SKPartition, max_path: int = 8
) -> Optional[tuple[str, dict[int, int]]]:
    """Diagnostic: an annotated forbidden configuration or annotated sun
    embedded in H with matching K_s/K_o roles, or ``None``."""
    roles = []
    for v in range(H.n):
        if v in part.Ks:
            roles.append(catalog.KS)
        elif v in part.Ko:
            roles.append(catalog.KO)
        else:
            roles.append("other")

    from .graph import find_induced_embedding

    for which in "abcdefg":
        for path_len in range(0, max_path + 1):
            try:
                pattern = catalog.generate_annotated_configuration(
                    which, path_len
                )
            except catalog.ParamOutOfRange:
                break
            if pattern.graph.n > H.n:
                continue
            emb = find_induced_embedding(
                pattern.graph, H, pattern.roles, roles
            )
            if emb is not None:
                return which, emb
            if which in "abcde":
                break  # fixed-size configurations
    for which in "abcde":
        pattern = catalog.generate_annotated_sun(which)
        if pattern.graph.n > H.n:
            continue
        emb = find_induced_embedding(pattern.graph, H, pattern.roles, roles)
        if emb is not None:
            return f"sun-{which}", emb
    return None
