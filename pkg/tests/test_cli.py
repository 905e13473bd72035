import pytest

from conftest import sun_graph
from splitarc.cli import (
    ParseError,
    main,
    parse_certificate,
    parse_graph,
    serialize_certificate,
    serialize_graph,
)
from splitarc.graph import make_graph
from splitarc.models import ArcModel
from splitarc.recognizer import is_circular_arc, is_helly_circular_arc


def write_graph(tmp_path, g, name="graph.txt"):
    path = tmp_path / name
    path.write_text(serialize_graph(g))
    return str(path)


class TestGraphFormat:
    def test_round_trip(self):
        g = sun_graph()
        assert parse_graph(serialize_graph(g)) == g

    def test_comments_and_blanks(self):
        text = "c a comment\n\np edge 2 1\nc more\ne 1 2\n"
        g = parse_graph(text)
        assert g.n == 2 and g.has_edge(0, 1)

    def test_rejects_missing_header(self):
        with pytest.raises(ParseError):
            parse_graph("e 1 2\n")

    def test_rejects_wrong_edge_count(self):
        with pytest.raises(ParseError):
            parse_graph("p edge 3 2\ne 1 2\n")

    def test_rejects_out_of_range(self):
        with pytest.raises(ParseError):
            parse_graph("p edge 2 1\ne 1 3\n")

    def test_rejects_junk_line(self):
        with pytest.raises(ParseError):
            parse_graph("p edge 2 0\nx 1 2\n")


class TestCertificateFormat:
    def test_yes_round_trip(self):
        cert = is_circular_arc(sun_graph())
        back = parse_certificate(serialize_certificate(cert))
        assert back.is_member and back.question == "ca"
        assert back.model == cert.model

    def test_no_round_trip(self):
        from splitarc import catalog
        from splitarc.catalog import generate

        cert = is_circular_arc(generate(catalog.net_star()))
        back = parse_certificate(serialize_certificate(cert))
        assert not back.is_member
        assert back.family == cert.family
        assert back.embedding == cert.embedding

    def test_rejects_interval_model_certificate(self):
        with pytest.raises(ParseError):
            parse_certificate("verdict yes\nclass ca\nmodel\nline\n1 0 1\n")


class TestRecognizeCommand:
    def test_yes_exit_zero(self, tmp_path, capsys):
        path = write_graph(tmp_path, sun_graph())
        assert main(["recognize", path, "--verify"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("verdict yes\nclass ca\nmodel\ncircle ")

    def test_helly_flag(self, tmp_path, capsys):
        path = write_graph(tmp_path, sun_graph())
        assert main(["recognize", path, "--helly", "--verify"]) == 0
        assert "class hca" in capsys.readouterr().out

    def test_no_exit_one(self, tmp_path, capsys):
        from splitarc import catalog
        from splitarc.catalog import generate

        path = write_graph(tmp_path, generate(catalog.net_star()))
        assert main(["recognize", path, "--verify"]) == 1
        out = capsys.readouterr().out
        assert "verdict no" in out and "family net-star" in out

    def test_non_split_exit_two(self, tmp_path, capsys):
        c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        path = write_graph(tmp_path, c4)
        assert main(["recognize", path]) == 2

    def test_bad_file_exit_two(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("nonsense\n")
        assert main(["recognize", str(bad)]) == 2

    def test_certificate_out(self, tmp_path, capsys):
        path = write_graph(tmp_path, sun_graph())
        cert_path = tmp_path / "cert.txt"
        main(["recognize", path, "--certificate-out", str(cert_path)])
        capsys.readouterr()
        cert = parse_certificate(cert_path.read_text())
        assert cert.is_member

    def test_figure_out(self, tmp_path, capsys):
        path = write_graph(tmp_path, sun_graph())
        fig = tmp_path / "model.png"
        main(["recognize", path, "--figure-out", str(fig)])
        capsys.readouterr()
        assert fig.stat().st_size > 0


class TestGenerateCommand:
    def test_stdout(self, capsys):
        assert main(["generate", "net"]) == 0
        g = parse_graph(capsys.readouterr().out)
        assert g.n == 6

    def test_parameterized_to_file(self, tmp_path, capsys):
        out = tmp_path / "hole.txt"
        assert main(["generate", "hole", "7", "-o", str(out)]) == 0
        g = parse_graph(out.read_text())
        assert g.n == 7 and g.edge_count() == 7

    def test_bad_parameter(self, capsys):
        assert main(["generate", "hole", "3"]) == 2


class TestOracleCommand:
    def test_yes(self, tmp_path, capsys):
        path = write_graph(tmp_path, sun_graph())
        assert main(["oracle", path]) == 0
        assert "verdict yes" in capsys.readouterr().out

    def test_no(self, tmp_path, capsys):
        from splitarc import catalog
        from splitarc.catalog import generate

        path = write_graph(tmp_path, generate(catalog.net_star()))
        assert main(["oracle", path]) == 1

    def test_interval_flag(self, tmp_path, capsys):
        p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        path = write_graph(tmp_path, p4)
        assert main(["oracle", path, "--interval"]) == 0

    def test_too_large(self, tmp_path, capsys):
        path = write_graph(tmp_path, make_graph(9, []))
        assert main(["oracle", path]) == 2


class TestVerifyModelCommand:
    def sun_files(self, tmp_path):
        from splitarc.models import serialize_model

        gpath = write_graph(tmp_path, sun_graph())
        good = ArcModel(
            36, ((28, 32), (24, 12), (4, 8), (35, 26), (16, 20), (10, 1))
        )
        bad = ArcModel(
            36, ((26, 28), (24, 6), (2, 4), (0, 18), (14, 16), (12, 30))
        )
        gm = tmp_path / "good.txt"
        gm.write_text(serialize_model(good))
        bm = tmp_path / "bad.txt"
        bm.write_text(serialize_model(bad))
        return gpath, str(gm), str(bm)

    def test_realization_pass(self, tmp_path, capsys):
        gpath, gm, bm = self.sun_files(tmp_path)
        assert main(["verify-model", gpath, gm]) == 0
        assert main(["verify-model", gpath, bm]) == 0  # both realize the sun

    def test_helly_and_normalized_split(self, tmp_path, capsys):
        gpath, gm, bm = self.sun_files(tmp_path)
        assert main(["verify-model", gpath, gm, "--helly", "--normalized"]) == 0
        assert main(["verify-model", gpath, bm, "--helly"]) == 1
        assert "helly violated" in capsys.readouterr().out
        assert main(["verify-model", gpath, bm, "--normalized"]) == 1

    def test_condition1(self, tmp_path, capsys):
        from splitarc.models import serialize_model, unflip

        gpath, gm, _ = self.sun_files(tmp_path)
        good = ArcModel(
            36, ((28, 32), (24, 12), (4, 8), (35, 26), (16, 20), (10, 1))
        )
        m = unflip(good, [1, 3, 5], cut=26)
        mpath = tmp_path / "interval.txt"
        mpath.write_text(serialize_model(m))
        assert main(
            ["verify-model", gpath, str(mpath), "--condition1", "2,4,6"]
        ) == 0

    def test_wrong_model_kind(self, tmp_path, capsys):
        gpath, gm, _ = self.sun_files(tmp_path)
        # helly check on an interval model is reported as a failure
        from splitarc.models import IntervalModel, serialize_model, unflip

        good = ArcModel(
            36, ((28, 32), (24, 12), (4, 8), (35, 26), (16, 20), (10, 1))
        )
        m = unflip(good, [1, 3, 5], cut=26)
        mpath = tmp_path / "interval.txt"
        mpath.write_text(serialize_model(m))
        assert main(["verify-model", gpath, str(mpath), "--helly"]) == 1

    def test_size_mismatch(self, tmp_path, capsys):
        gpath, gm, _ = self.sun_files(tmp_path)
        small = tmp_path / "small.txt"
        small.write_text("line\n1 0 1\n")
        assert main(["verify-model", gpath, str(small)]) == 2

    def test_figure_out(self, tmp_path, capsys):
        gpath, gm, _ = self.sun_files(tmp_path)
        fig = tmp_path / "arcs.png"
        main(["verify-model", gpath, gm, "--figure-out", str(fig)])
        assert fig.stat().st_size > 0
