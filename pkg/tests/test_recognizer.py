import random

import pytest

from conftest import sun_graph
from splitarc import catalog
from splitarc.auxiliary import NotSplitGraph, build_H, split_partition
from splitarc.catalog import generate
from splitarc.graph import induced_subgraph, make_graph
from splitarc.intervals import validate_clique_path
from splitarc.models import verify_condition2, verify_helly, verify_realizes
from splitarc.oracle import oracle_is_ca, random_split_graph
from splitarc.recognizer import (
    Certificate,
    decide_condition2,
    extract_annotated_configuration,
    extract_no_certificate,
    is_circular_arc,
    is_helly_circular_arc,
)


def complete_graph(n):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def check_yes(cert, g, helly):
    assert cert.is_member and cert.model is not None
    ok, pair = verify_realizes(cert.model, g)
    assert ok, pair
    if helly:
        ok, clique = verify_helly(cert.model, g)
        assert ok, clique


def check_no(cert, g, target):
    assert not cert.is_member and cert.family is not None
    pattern = generate(cert.family)
    emb = cert.embedding
    assert sorted(emb) == list(range(pattern.n))
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            assert pattern.has_edge(u, v) == g.has_edge(emb[u], emb[v])
    # the witness really is non-member (checked via the oracle when small)
    if pattern.n <= 8 and target == "ca":
        sub, _ = induced_subgraph(g, cert.witness_vertices)
        assert oracle_is_ca(sub) is None


class TestRejectsNonSplit:
    def test_c4(self):
        c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(NotSplitGraph):
            is_circular_arc(c4)
        with pytest.raises(NotSplitGraph):
            is_helly_circular_arc(c4)


class TestKnownGraphs:
    def test_complete(self):
        for n in (1, 2, 5):
            g = complete_graph(n)
            check_yes(is_circular_arc(g), g, helly=False)
            check_yes(is_helly_circular_arc(g), g, helly=True)

    def test_empty_edge_set(self):
        g = make_graph(4, [])
        check_yes(is_circular_arc(g), g, helly=False)
        check_yes(is_helly_circular_arc(g), g, helly=True)

    def test_sun_is_hca(self):
        sun = sun_graph()
        check_yes(is_circular_arc(sun), sun, helly=False)
        check_yes(is_helly_circular_arc(sun), sun, helly=True)

    def test_rising_sun_is_hca(self):
        g = generate(catalog.rising_sun())
        check_yes(is_helly_circular_arc(g), g, helly=True)

    def test_net_is_ca_not_hca(self):
        net = generate(catalog.net())
        check_yes(is_circular_arc(net), net, helly=False)
        cert = is_helly_circular_arc(net)
        check_no(cert, net, "hca")

    def test_net_star_is_not_ca(self):
        g = generate(catalog.net_star())
        cert = is_circular_arc(g)
        check_no(cert, g, "ca")
        assert cert.family == catalog.net_star()

    def test_complement_sun_ca_not_hca(self):
        g = generate(catalog.complement_k_sun(3))
        check_yes(is_circular_arc(g), g, helly=False)
        cert = is_helly_circular_arc(g)
        check_no(cert, g, "hca")
        assert cert.family == catalog.complement_k_sun(3)

    def test_forbidden_families_detected(self):
        for fam in [
            catalog.the_weird(),
            catalog.s1(2),
            catalog.s2(2),
            catalog.long_claw_derived(),
            catalog.whipping_top_derived(),
            catalog.complement_k_sun_plus(3),
        ]:
            g = generate(fam)
            cert = is_circular_arc(g)
            check_no(cert, g, "ca")
            assert cert.family == fam


class TestOracleAgreement:
    def test_exhaustive_small(self, small_split_corpus):
        for g in small_split_corpus:
            if g.n > 6:
                continue
            want = oracle_is_ca(g) is not None
            cert = is_circular_arc(g)
            assert cert.is_member == want
            if cert.is_member:
                check_yes(cert, g, helly=False)
            else:
                check_no(cert, g, "ca")

    def test_random_medium(self):
        rng = random.Random(20260825)
        for _ in range(40):
            g = random_split_graph(7, rng, connected=True)
            want = oracle_is_ca(g) is not None
            cert = is_circular_arc(g)
            assert cert.is_member == want

    def test_hca_implies_ca(self, small_split_corpus):
        for g in small_split_corpus:
            if g.n > 6:
                continue
            if is_helly_circular_arc(g).is_member:
                assert is_circular_arc(g).is_member


class TestConditionTwo:
    def test_paths_are_valid_and_satisfy(self, small_split_corpus):
        for g in small_split_corpus:
            if g.n > 6:
                continue
            part = split_partition(g)
            if not part.S:
                continue
            s = part.S[0]
            H, sk = build_H(g, part, s)
            cp = decide_condition2(H.graph, sk)
            if cp is not None:
                assert validate_clique_path(cp, H.graph)
                assert verify_condition2(cp, sk).ok

    def test_sun_succeeds(self):
        sun = sun_graph()
        part = split_partition(sun)
        H, sk = build_H(sun, part, 0)
        assert decide_condition2(H.graph, sk) is not None


class TestRandomSoundness:
    def test_random_certificates(self):
        rng = random.Random(99)
        for _ in range(150):
            g = random_split_graph(rng.randint(1, 10), rng)
            cert = is_circular_arc(g)
            if cert.is_member:
                check_yes(cert, g, helly=False)
            else:
                check_no(cert, g, "ca")
            hcert = is_helly_circular_arc(g)
            if hcert.is_member:
                check_yes(hcert, g, helly=True)
            else:
                check_no(hcert, g, "hca")
            assert not (hcert.is_member and not cert.is_member)


class TestNoCertificateMinimality:
    def test_deletions_are_members(self):
        for fam, target in [
            (catalog.net_star(), "ca"),
            (catalog.s1(2), "hca"),
            (catalog.complement_k_sun(3), "hca"),
        ]:
            g = generate(fam)
            family, emb = extract_no_certificate(g, target)
            assert family == fam
            member = (
                is_circular_arc if target == "ca" else is_helly_circular_arc
            )
            for v in range(g.n):
                sub, _ = induced_subgraph(
                    g, [u for u in range(g.n) if u != v]
                )
                assert member(sub).is_member

    def test_raises_on_member(self):
        with pytest.raises(ValueError):
            extract_no_certificate(sun_graph(), "ca")


class TestAnnotatedDiagnostics:
    def test_finds_configuration_when_condition2_fails(self):
        # Whenever the clique-path condition fails on an interval H, some
        # annotated configuration or annotated sun explains it.  The
        # smallest cases come from the forbidden families themselves.
        from splitarc.intervals import is_interval

        found = 0
        for fam in [
            catalog.net_star(),
            catalog.s2(2),
            catalog.whipping_top_derived(),
        ]:
            g = generate(fam)
            part = split_partition(g)
            for s in part.S:
                H, sk = build_H(g, part, s)
                if not is_interval(H.graph):
                    continue
                if decide_condition2(H.graph, sk) is None:
                    hit = extract_annotated_configuration(H.graph, sk)
                    assert hit is not None, (fam, s)
                    which, emb = hit
                    roles = {
                        v: (catalog.KS if v in sk.Ks else
                            catalog.KO if v in sk.Ko else "other")
                        for v in range(H.graph.n)
                    }
                    pattern = (
                        catalog.generate_annotated_sun(which[-1])
                        if which.startswith("sun-")
                        else catalog.generate_annotated_configuration(which)
                    )
                    for p, host in emb.items():
                        want = pattern.roles[p]
                        if want in (catalog.KS, catalog.KO):
                            assert roles[host] == want
                    found += 1
        assert found >= 3
