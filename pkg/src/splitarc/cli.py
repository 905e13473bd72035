"""Command-line front end.

Graphs travel as DIMACS-like text (``p edge n m`` then ``e u v`` lines,
1-indexed); models and certificates use the delimited formats documented
in :mod:`splitarc.models` and :func:`serialize_certificate`.  Exit codes:
0 = member / all checks pass, 1 = non-member / violations, 2 = input
error (including non-split input and oracle size limits), 3 = internal
inconsistency detected by ``--verify``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import catalog, models, oracle, recognizer
from .auxiliary import NotSplitGraph
from .graph import Graph, find_induced_embedding, induced_subgraph, make_graph
from .models import ArcModel, IntervalModel, ModelError
from .recognizer import Certificate


class ParseError(ValueError):
    pass


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"bad header: {line}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"bad header: {line}") from None
        elif parts[0] == "e":
            if n is None or len(parts) != 3:
                raise ParseError(f"bad edge line: {line}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"bad edge line: {line}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge endpoint out of range: {line}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line: {line}")
    if n is None:
        raise ParseError("missing 'p edge n m' header")
    if m != len(edges):
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    return make_graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def serialize_certificate(cert: Certificate) -> str:
    lines = [
        f"verdict {'yes' if cert.is_member else 'no'}",
        f"class {cert.question}",
    ]
    if cert.is_member:
        assert cert.model is not None
        lines.append("model")
        lines.append(models.serialize_model(cert.model).rstrip("\n"))
    else:
        assert cert.family is not None and cert.embedding is not None
        fam = cert.family
        lines.append(
            f"family {fam.name}" + (f" {fam.param}" if fam.param is not None else "")
        )
        pairs = " ".join(
            f"{p + 1}:{v + 1}" for p, v in sorted(cert.embedding.items())
        )
        lines.append(f"embedding {pairs}")
        lines.append(
            "vertices " + " ".join(str(v + 1) for v in cert.witness_vertices)
        )
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("verdict "):
        raise ParseError("bad certificate document")
    is_member = lines[0].split()[1] == "yes"
    question = lines[1].split()[1]
    if is_member:
        if lines[2] != "model":
            raise ParseError("bad certificate document: missing model")
        model = models.parse_model("\n".join(lines[3:]))
        if isinstance(model, IntervalModel):
            raise ParseError("certificate model must be an arc model")
        return Certificate(True, question, model=model)
    fam_parts = lines[2].split()
    fam = catalog.FamilyId(
        fam_parts[1], int(fam_parts[2]) if len(fam_parts) > 2 else None
    )
    emb = {}
    for pair in lines[3].split()[1:]:
        p, v = pair.split(":")
        emb[int(p) - 1] = int(v) - 1
    return Certificate(False, question, family=fam, embedding=emb)


def _verify_certificate(cert: Certificate, g: Graph) -> bool:
    if cert.is_member:
        assert cert.model is not None
        ok, _ = models.verify_realizes(cert.model, g)
        if not ok:
            return False
        if cert.question == "hca":
            helly, _ = models.verify_helly(cert.model, g)
            return helly
        return True
    assert cert.family is not None and cert.embedding is not None
    pattern = catalog.generate(cert.family)
    if set(cert.embedding) != set(range(pattern.n)):
        return False
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if pattern.has_edge(u, v) != g.has_edge(
                cert.embedding[u], cert.embedding[v]
            ):
                return False
    return True


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_recognize(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.helly:
            cert = recognizer.is_helly_circular_arc(g)
        else:
            cert = recognizer.is_circular_arc(g)
    except NotSplitGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.verify and not _verify_certificate(cert, g):
        print("error: certificate failed verification", file=sys.stderr)
        return 3
    document = serialize_certificate(cert)
    sys.stdout.write(document)
    if args.certificate_out:
        with open(args.certificate_out, "w", encoding="utf-8") as fh:
            fh.write(document)
    if args.figure_out and cert.model is not None:
        from .figures import render_model

        render_model(cert.model, args.figure_out)
    return 0 if cert.is_member else 1


def cmd_generate(args: argparse.Namespace) -> int:
    fam = catalog.FamilyId(args.family, args.k)
    try:
        g = catalog.generate(fam)
    except catalog.ParamOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = serialize_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.interval:
            model = oracle.oracle_is_interval(g)
        else:
            model = oracle.oracle_is_ca(g)
    except oracle.OracleTooLarge as exc:
        print(f"error: input too large for the oracle: {exc}", file=sys.stderr)
        return 2
    if model is None:
        print("verdict no")
        return 1
    print("verdict yes")
    sys.stdout.write(models.serialize_model(model))
    return 0


def cmd_verify_model(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph))
        model = models.parse_model(_read(args.model))
    except (OSError, ParseError, ModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if model.n != g.n:
        print(
            f"error: model has {model.n} vertices, graph has {g.n}",
            file=sys.stderr,
        )
        return 2
    failures = 0
    # Under --condition1 an interval model realizes the auxiliary graph,
    # not the input graph; that check carries its own realization clause.
    if not (args.condition1 and isinstance(model, IntervalModel)):
        ok, pair = models.verify_realizes(model, g)
        if not ok:
            assert pair is not None
            print(f"realization violated at pair {pair[0] + 1} {pair[1] + 1}")
            failures += 1
    if args.helly:
        if isinstance(model, IntervalModel):
            print("helly check requires an arc model")
            failures += 1
        else:
            helly, clique = models.verify_helly(model, g)
            if not helly:
                assert clique is not None
                pretty = " ".join(str(v + 1) for v in sorted(clique))
                print(f"helly violated on clique {pretty}")
                failures += 1
    if args.normalized:
        if isinstance(model, IntervalModel):
            print("normalization check requires an arc model")
            failures += 1
        else:
            report = models.verify_normalized(model, g)
            for kind, pair2 in report.violations:
                pretty = " ".join(str(v + 1) for v in pair2)
                print(f"normalized {kind} violated at {pretty}")
            failures += len(report.violations)
    if args.condition1:
        try:
            K = [int(tok) - 1 for tok in args.condition1.split(",")]
        except ValueError:
            print(f"error: bad clique spec {args.condition1!r}", file=sys.stderr)
            return 2
        if isinstance(model, ArcModel):
            print("condition-1 check requires an interval model")
            failures += 1
        else:
            report = models.verify_condition1(model, g, K)
            for kind, pair2 in report.violations:
                pretty = " ".join(str(v + 1) for v in pair2)
                print(f"condition1 {kind} violated at {pretty}")
            failures += len(report.violations)
    if args.figure_out:
        from .figures import render_model

        render_model(model, args.figure_out)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitarc",
        description="Certifying circular-arc recognition for split graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="recognize a split graph, with certificate")
    p.add_argument("graph", help="graph file ('-' for stdin)")
    p.add_argument("--helly", action="store_true", help="ask the Helly question")
    p.add_argument("--certificate-out", metavar="FILE")
    p.add_argument("--figure-out", metavar="FILE",
                   help="also render the model to an image file")
    p.add_argument("--verify", action="store_true",
                   help="re-check the certificate before printing")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", help="emit a catalog graph")
    p.add_argument("family", help="family name, e.g. hole, net, s1, comp-sun")
    p.add_argument("k", nargs="?", type=int, default=None, help="parameter")
    p.add_argument("-o", "--out", metavar="FILE")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="brute-force reference verdict")
    p.add_argument("graph")
    p.add_argument("--interval", action="store_true",
                   help="ask the interval question instead of circular-arc")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify-model", help="check a model against a graph")
    p.add_argument("graph")
    p.add_argument("model")
    p.add_argument("--helly", action="store_true")
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--condition1", metavar="K",
                   help="comma-separated 1-indexed clique, e.g. 1,3,4")
    p.add_argument("--figure-out", metavar="FILE")
    p.set_defaults(func=cmd_verify_model)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
