"""Generators for the named graph families and the minimal-forbidden classifier.

Families
--------
Minimal non-interval graphs: ``Hole(l)``, ``LongClaw``, ``WhippingTop``,
``Dag(p)`` (p >= 2, Dag(2) = net) and ``Ddag(p)`` (p >= 1, Ddag(1) = sun,
Ddag(2) = rising sun).

Minimal split non-CA graphs: ``NetStar``, ``TheWeird``, ``LongClawDerived``,
``WhippingTopDerived``, ``S1(k)``, ``S2(k)`` (k >= 2) and
``ComplementKSunPlus(k)`` (k >= 3).

Minimal split non-HCA graphs: ``LongClawDerived``, ``WhippingTopDerived``,
``S1(k)``, ``S2(k)`` (k >= 2) and ``ComplementKSun(k)`` (k >= 3).

All generators use a fixed canonical labeling so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph, complement, find_induced_embedding, make_graph

# Role tags for annotated configurations.
KS = "Ks"
KO = "Ko"


class ParamOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class FamilyId:
    name: str
    param: Optional[int] = None

    def __str__(self) -> str:
        return self.name if self.param is None else f"{self.name}({self.param})"


def hole(length: int) -> FamilyId:
    return FamilyId("hole", length)


def long_claw() -> FamilyId:
    return FamilyId("long-claw")


def whipping_top() -> FamilyId:
    return FamilyId("whipping-top")


def dag(p: int) -> FamilyId:
    return FamilyId("dag", p)


def ddag(p: int) -> FamilyId:
    return FamilyId("ddag", p)


def net() -> FamilyId:
    return FamilyId("net")


def sun() -> FamilyId:
    return FamilyId("sun")


def rising_sun() -> FamilyId:
    return FamilyId("rising-sun")


def k_sun(k: int) -> FamilyId:
    return FamilyId("k-sun", k)


def complement_k_sun(k: int) -> FamilyId:
    return FamilyId("comp-sun", k)


def complement_k_sun_plus(k: int) -> FamilyId:
    return FamilyId("comp-sun-plus", k)


def net_star() -> FamilyId:
    return FamilyId("net-star")


def the_weird() -> FamilyId:
    return FamilyId("the-weird")


def gadget_d(k: int) -> FamilyId:
    return FamilyId("gadget", k)


def s1(k: int) -> FamilyId:
    return FamilyId("s1", k)


def s2(k: int) -> FamilyId:
    return FamilyId("s2", k)


def long_claw_derived() -> FamilyId:
    return FamilyId("long-claw-derived")


def whipping_top_derived() -> FamilyId:
    return FamilyId("whipping-top-derived")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamOutOfRange(msg)


def _hole(length: int) -> Graph:
    _require(length >= 4, "hole length must be >= 4")
    return make_graph(length, [(i, (i + 1) % length) for i in range(length)])


def _long_claw() -> Graph:
    # Center 0; legs 0-v_i-x_i with v_i = 1..3, x_i = 4..6.
    return make_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def _whipping_top() -> Graph:
    # Path x1-v1-v2-v3-x3 = 1-2-3-4-5; 0 adjacent to all five; 6 pendant on v2.
    edges = [(1, 2), (2, 3), (3, 4), (4, 5)]
    edges += [(0, i) for i in range(1, 6)]
    edges += [(3, 6)]
    return make_graph(7, edges)


def _dag(p: int) -> Graph:
    # Path x1-v1-...-vp-x3; u0 adjacent to every v_i; x2 pendant on u0.
    # Ids: v_i = 0..p-1, x1 = p, x3 = p+1, u0 = p+2, x2 = p+3.
    _require(p >= 2, "dag needs p >= 2")
    u0, x1, x3, x2 = p + 2, p, p + 1, p + 3
    edges = [(i, i + 1) for i in range(p - 1)]
    edges += [(x1, 0), (p - 1, x3)]
    edges += [(u0, i) for i in range(p)]
    edges += [(u0, x2)]
    return make_graph(p + 4, edges)


def _ddag(p: int) -> Graph:
    # Path x1-v1-...-vp-x3; u1, u2 adjacent to each other and every v_i;
    # triangles x1-v1-u1 and x3-vp-u2; x2 adjacent to u1 and u2.
    # Ids: v_i = 0..p-1, x1 = p, x3 = p+1, u1 = p+2, u2 = p+3, x2 = p+4.
    _require(p >= 1, "ddag needs p >= 1")
    x1, x3, u1, u2, x2 = p, p + 1, p + 2, p + 3, p + 4
    edges = [(i, i + 1) for i in range(p - 1)]
    edges += [(x1, 0), (p - 1, x3)]
    edges += [(u1, u2)]
    edges += [(u1, i) for i in range(p)]
    edges += [(u2, i) for i in range(p)]
    edges += [(u1, x1), (u2, x3), (x2, u1), (x2, u2)]
    return make_graph(p + 5, edges)


def _net() -> Graph:
    # Triangle 0-1-2 with pendants 3, 4, 5.
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def _sun() -> Graph:
    # Triangle 0-1-2; 3 adj {0,1}, 4 adj {1,2}, 5 adj {2,0}.
    return make_graph(
        6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]
    )


def _rising_sun() -> Graph:
    # Clique {0,1,2,3} = {u1,u2,c1,c2}; x1 = 4 adj {c1,u1};
    # x3 = 5 adj {c2,u2}; x2 = 6 adj {u1,u2}.
    u1, u2, c1, c2, x1, x3, x2 = 0, 1, 2, 3, 4, 5, 6
    edges = [(u1, u2), (u1, c1), (u1, c2), (u2, c1), (u2, c2), (c1, c2)]
    edges += [(x1, c1), (x1, u1), (x3, c2), (x3, u2), (x2, u1), (x2, u2)]
    return make_graph(7, edges)


def _k_sun(k: int) -> Graph:
    # C_{2k} on 0..2k-1 with the even vertices completed to a clique.
    _require(k >= 2, "k-sun needs k >= 2")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)]
    evens = range(0, n, 2)
    edges += [(u, v) for u in evens for v in evens if u < v]
    return make_graph(n, edges)


def _complement_k_sun(k: int) -> Graph:
    _require(k >= 3, "complement k-sun needs k >= 3")
    return complement(_k_sun(k))


def _complement_k_sun_plus(k: int) -> Graph:
    # Complement of the k-sun plus a vertex adjacent to its clique
    # (the odd vertices of the underlying cycle labeling).
    _require(k >= 3, "complement k-sun plus needs k >= 3")
    g = _complement_k_sun(k)
    plus = g.n
    edges = list(g.edges()) + [(plus, v) for v in range(1, g.n, 2)]
    return make_graph(g.n + 1, edges)


def _net_star() -> Graph:
    g = _net()
    return make_graph(g.n + 1, list(g.edges()))


def _the_weird() -> Graph:
    # Complement of the 4-sun (clique v1..v4 = 0..3; u_i = 4..7 with
    # u_i adj {v_i, v_{i+1}}) plus c = 8 adjacent to the diagonal {v1, v3}.
    edges = [(u, v) for u in range(4) for v in range(4) if u < v]
    for i in range(4):
        edges += [(4 + i, i), (4 + i, (i + 1) % 4)]
    edges += [(8, 0), (8, 2)]
    return make_graph(9, edges)


def _gadget_d(k: int) -> Graph:
    # Clique v1..vk = 0..k-1; independent w1..w_{k-1} = k..2k-2;
    # w_i adjacent to {v1..v_{i-1}} and {v_{i+2}..vk}.
    _require(k >= 2, "gadget needs k >= 2")
    edges = [(u, v) for u in range(k) for v in range(k) if u < v]
    for i in range(1, k):
        w = k + i - 1
        edges += [(w, v - 1) for v in range(1, i)]
        edges += [(w, v - 1) for v in range(i + 2, k + 1)]
    return make_graph(2 * k - 1, edges)


def _s1(k: int) -> Graph:
    # Gadget D_k with the sun glued on: a3 completes {v1..vk} to a clique;
    # b12 adj all v; b23 adj {a3, v2..vk}; b31 adj {a3, v1..v_{k-1}}.
    # Ids: v = 0..k-1, w = k..2k-2, a3 = 2k-1, b12 = 2k, b23 = 2k+1, b31 = 2k+2.
    _require(k >= 2, "s1 needs k >= 2")
    g = _gadget_d(k)
    a3, b12, b23, b31 = 2 * k - 1, 2 * k, 2 * k + 1, 2 * k + 2
    edges = list(g.edges())
    edges += [(a3, v) for v in range(k)]
    edges += [(b12, v) for v in range(k)]
    edges += [(b23, a3)] + [(b23, v) for v in range(1, k)]
    edges += [(b31, a3)] + [(b31, v) for v in range(k - 1)]
    return make_graph(2 * k + 3, edges)


def _s2(k: int) -> Graph:
    # Gadget D_k with the rising sun glued on: c1, c2 complete {v1..vk} to a
    # clique; x1 adj {c1, v1..v_{k-1}}; x3 adj {c2, v2..vk}; x2 adj all v.
    # Ids: v = 0..k-1, w = k..2k-2, c1 = 2k-1, c2 = 2k, x1 = 2k+1,
    # x3 = 2k+2, x2 = 2k+3.
    _require(k >= 2, "s2 needs k >= 2")
    g = _gadget_d(k)
    c1, c2, x1, x3, x2 = 2 * k - 1, 2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 3
    edges = list(g.edges())
    edges += [(c1, v) for v in range(k)] + [(c2, v) for v in range(k)]
    edges += [(c1, c2)]
    edges += [(x1, c1)] + [(x1, v) for v in range(k - 1)]
    edges += [(x3, c2)] + [(x3, v) for v in range(1, k)]
    edges += [(x2, v) for v in range(k)]
    return make_graph(2 * k + 4, edges)


def _long_claw_derived() -> Graph:
    # Clique {c, v1, v2, v3} = {0, 1, 2, 3}; for each pair (v_a, v_b) of
    # consecutive v's an inner vertex adj {v_a, v_b, c} and an outer vertex
    # adj {v_a, v_b}.  Inner = 4..6, outer = 7..9.
    edges = [(u, v) for u in range(4) for v in range(4) if u < v]
    for i, (a, b) in enumerate([(1, 2), (2, 3), (3, 1)]):
        inner, outer = 4 + i, 7 + i
        edges += [(inner, a), (inner, b), (inner, 0)]
        edges += [(outer, a), (outer, b)]
    return make_graph(10, edges)


def _whipping_top_derived() -> Graph:
    # Clique {c, v1, v2, v3} = {0, 1, 2, 3}; u1 = 4 adj {v3, v1, c};
    # u2 = 5 adj {v1, v2}; u3 = 6 adj {v2, v3}; pendants 7 on v1, 8 on v3.
    edges = [(u, v) for u in range(4) for v in range(4) if u < v]
    edges += [(4, 3), (4, 1), (4, 0)]
    edges += [(5, 1), (5, 2), (6, 2), (6, 3)]
    edges += [(7, 1), (8, 3)]
    return make_graph(9, edges)


_GENERATORS = {
    "hole": _hole,
    "long-claw": _long_claw,
    "whipping-top": _whipping_top,
    "dag": _dag,
    "ddag": _ddag,
    "net": _net,
    "sun": _sun,
    "rising-sun": _rising_sun,
    "k-sun": _k_sun,
    "comp-sun": _complement_k_sun,
    "comp-sun-plus": _complement_k_sun_plus,
    "net-star": _net_star,
    "the-weird": _the_weird,
    "gadget": _gadget_d,
    "s1": _s1,
    "s2": _s2,
    "long-claw-derived": _long_claw_derived,
    "whipping-top-derived": _whipping_top_derived,
}

FAMILY_NAMES = tuple(sorted(_GENERATORS))


def generate(f: FamilyId) -> Graph:
    """Generate the canonical labeled member of family ``f``."""
    if f.name not in _GENERATORS:
        raise ParamOutOfRange(f"unknown family {f.name!r}")
    gen = _GENERATORS[f.name]
    if f.param is None:
        return gen()  # type: ignore[call-arg]
    return gen(f.param)  # type: ignore[call-arg]


@dataclass(frozen=True)
class AnnotatedGraph:
    """A pattern graph with per-vertex role tags (Ks/Ko/None)."""

    graph: Graph
    roles: tuple[Optional[str], ...]


def _annotated(n: int, edges, roles: dict[int, str]) -> AnnotatedGraph:
    return AnnotatedGraph(
        make_graph(n, edges), tuple(roles.get(v) for v in range(n))
    )


def generate_annotated_configuration(which: str, path_len: int = 0) -> AnnotatedGraph:
    """A forbidden configuration pattern for the auxiliary graph H.

    ``which`` is one of ``a``..``g``; ``path_len`` is the number of internal
    vertices of the stretchable path in configurations ``f`` and ``g``
    (ignored elsewhere).
    """
    if which == "a":
        # Path x1-v1-v2-x2; u and x3 both adjacent to {v1, v2}.
        # Ids: v1=0, v2=1, u=2, x3=3, x1=4, x2=5.
        return _annotated(
            6,
            [(0, 1), (4, 0), (1, 5), (2, 0), (2, 1), (3, 0), (3, 1)],
            {0: KS, 1: KS, 2: KO},
        )
    if which == "b":
        # Path x1-u1-u2-x2; v adjacent to all four and to the pendant x3.
        # Ids: v=0, u1=1, u2=2, x1=3, x2=4, x3=5.
        return _annotated(
            6,
            [(1, 2), (3, 1), (2, 4), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
            {0: KS, 1: KO, 2: KO},
        )
    if which == "c":
        # Path x1-x2-v-x3-x4 with u pendant on the center v.
        # Ids: x1=0, x2=1, v=2, x3=3, x4=4, u=5.
        return _annotated(
            6,
            [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
            {1: KS, 2: KS, 3: KS, 5: KO},
        )
    if which == "d":
        # Path x1-x2-v-u; x3 adjacent to all four; x4 pendant on v.
        # Ids: x1=0, x2=1, v=2, u=3, x3=4, x4=5.
        return _annotated(
            6,
            [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3), (2, 5)],
            {1: KS, 2: KS, 3: KO},
        )
    if which == "e":
        # Path x1-x2-u-x3-x4; v adjacent to all five.
        # Ids: x1=0, x2=1, u=2, x3=3, x4=4, v=5.
        return _annotated(
            6,
            [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)],
            {2: KO, 5: KS},
        )
    if which == "f":
        # x0 pendant on v; path x1-x2-x3-(internals)-u; v adjacent to
        # x2, x3, every internal path vertex, and u (but not x1).
        # Ids: v=0, x0=1, x1=2, x2=3, x3=4, internals=5..4+path_len,
        # u=5+path_len.
        if path_len < 0:
            raise ParamOutOfRange("path_len must be >= 0")
        u = 5 + path_len
        chain = [2, 3, 4] + list(range(5, 5 + path_len)) + [u]
        edges = [(0, 1)]
        edges += list(zip(chain, chain[1:]))
        edges += [(0, x) for x in chain[1:]]
        return _annotated(u + 1, edges, {0: KS, u: KO})
    if which == "g":
        # Path x3-x4-(internals)-u; v adjacent to x1, x2, and the whole
        # path; x2 additionally adjacent to x1, x4, the internals, and u.
        # Ids: v=0, x1=1, x2=2, x3=3, x4=4, internals=5..4+path_len,
        # u=5+path_len.
        if path_len < 0:
            raise ParamOutOfRange("path_len must be >= 0")
        u = 5 + path_len
        chain = [3, 4] + list(range(5, 5 + path_len)) + [u]
        edges = list(zip(chain, chain[1:]))
        edges += [(0, x) for x in [1, 2] + chain]
        edges += [(2, x) for x in [1] + chain[1:]]
        return _annotated(u + 1, edges, {0: KS, u: KO})
    raise ParamOutOfRange(f"unknown configuration {which!r}")


CONFIGURATION_IDS = ("a", "b", "c", "d", "e", "f", "g")


def generate_annotated_sun(which: str) -> AnnotatedGraph:
    """Annotated suns forbidden in H (clique 0-1-2; 3 adj {0,1},
    4 adj {1,2}, 5 adj {2,0}; x1 = vertex 3)."""
    roles = {
        "a": {0: KS, 1: KS, 2: KS},
        "b": {0: KS, 1: KS, 2: KO},
        "c": {0: KO, 1: KO, 2: KS},
        "d": {0: KO, 1: KO, 2: KS, 3: KO},
        "e": {0: KO, 1: KO, 2: KS, 3: KS},
    }
    if which not in roles:
        raise ParamOutOfRange(f"unknown annotated sun {which!r}")
    g = _sun()
    return AnnotatedGraph(g, tuple(roles[which].get(v) for v in range(6)))


ANNOTATED_SUN_IDS = ("a", "b", "c", "d", "e")


def _interval_candidates(n: int) -> Iterator[FamilyId]:
    if n >= 4:
        yield hole(n)
    if n == 7:
        yield long_claw()
        yield whipping_top()
    if n >= 6:
        yield dag(n - 4)
    if n >= 6:
        yield ddag(n - 5)


def _ca_candidates(n: int) -> Iterator[FamilyId]:
    if n == 7:
        yield net_star()
    if n == 9:
        yield the_weird()
    if n == 10:
        yield long_claw_derived()
    if n == 9:
        yield whipping_top_derived()
    if n >= 7 and n % 2 == 1:
        yield s1((n - 3) // 2)
    if n >= 8 and n % 2 == 0:
        yield s2((n - 4) // 2)
    if n >= 7 and n % 2 == 1:
        yield complement_k_sun_plus((n - 1) // 2)


def _hca_candidates(n: int) -> Iterator[FamilyId]:
    if n == 10:
        yield long_claw_derived()
    if n == 9:
        yield whipping_top_derived()
    if n >= 7 and n % 2 == 1:
        yield s1((n - 3) // 2)
    if n >= 8 and n % 2 == 0:
        yield s2((n - 4) // 2)
    if n >= 6 and n % 2 == 0:
        yield complement_k_sun((n // 2))


def classify_minimal_forbidden(
    g: Graph, target: str
) -> Optional[tuple[FamilyId, dict[int, int]]]:
    """Name a minimal forbidden graph for ``target`` in {"ca", "hca",
    "interval"}.

    Returns (family, isomorphism family->g), or ``None`` when ``g`` matches
    no catalog member (the caller treats that as a hard error for inputs
    that were verified minimal).
    """
    candidates = {
        "ca": _ca_candidates,
        "hca": _hca_candidates,
        "interval": _interval_candidates,
    }[target](g.n)
    for fam in candidates:
        try:
            h = generate(fam)
        except ParamOutOfRange:
            continue
        if h.n != g.n:
            continue
        iso = find_induced_embedding(h, g) if _quick_match(h, g) else None
        if iso is not None:
            return fam, iso
    return None


def _quick_match(a: Graph, b: Graph) -> bool:
    return (
        a.n == b.n
        and a.edge_count() == b.edge_count()
        and a.degree_sequence() == b.degree_sequence()
    )
