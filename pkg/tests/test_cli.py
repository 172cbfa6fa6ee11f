import pytest

from vertexsplit.cli import main

P3_IDEAL = "kind: ideal\nvars: x y z\nx*y\ny*z\n"
P4_GRAPH = "n 4\n0 1\n1 2\n2 3\n"
XZ_Y_COMPLEX = "kind: complex\nvertices: x y z\nx,z\ny\n"
ZERO_IDEAL = "kind: ideal\nvars: x y\n"
TWO_K2_GRAPH = "n 4\n0 1\n2 3\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("p3.ideal", P3_IDEAL), ("p4.g", P4_GRAPH),
                       ("xz_y.cx", XZ_Y_COMPLEX), ("zero.ideal", ZERO_IDEAL),
                       ("2k2.g", TWO_K2_GRAPH)]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_betti_oracle_mode(files, capsys):
    assert main(["betti", "--ideal", files["p3.ideal"], "--format", "flat"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["0 2 2", "1 3 1"]


def test_betti_cover_recursive_from_graph(files, capsys):
    code = main(["betti", "--graph", files["p4.g"], "--ideal", "cover",
                 "--mode", "recursive", "--format", "flat"])
    assert code == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["0 2 3", "1 3 2"]


def test_betti_zero_ideal(files, capsys):
    assert main(["betti", "--ideal", files["zero.ideal"]]) == 0
    assert "empty" in capsys.readouterr().out


def test_betti_check_agreement(files, capsys):
    assert main(["betti", "--ideal", files["p3.ideal"], "--check"]) == 0
    out = capsys.readouterr().out
    assert "all 3 modes agree" in out


def test_betti_recursive_needs_splittable(files, tmp_path, capsys):
    p = tmp_path / "2k2.ideal"
    p.write_text("kind: ideal\nvars: w x y z\nx*w\ny*z\n")
    code = main(["betti", "--ideal", str(p), "--mode", "recursive"])
    assert code == 1
    assert "not vertex splittable" in capsys.readouterr().err


def test_betti_from_complex(files, capsys):
    assert main(["betti", "--complex", files["xz_y.cx"], "--format", "flat"]) == 0
    assert capsys.readouterr().out.strip().splitlines() == ["0 2 2", "1 3 1"]


def test_betti_usage_errors(files, capsys):
    assert main(["betti"]) == 2
    assert main(["betti", "--graph", files["p4.g"], "--ideal", "nonsense"]) == 2
    assert main(["betti", "--ideal", "/nonexistent/file"]) == 2


def test_classify_ideal(files, tmp_path, capsys):
    p = tmp_path / "y_xz.ideal"
    p.write_text("kind: ideal\nvars: x y z\ny\nx*z\n")
    assert main(["classify", "--ideal", str(p)]) == 0
    out = capsys.readouterr().out
    assert "vertex splittable: yes; certificate (y: 1 | x*z)" in out
    assert "linear quotients: yes" in out


def test_classify_complex(files, capsys):
    assert main(["classify", "--complex", files["xz_y.cx"]]) == 0
    out = capsys.readouterr().out
    assert "vertex decomposable: yes" in out
    assert "pd of the quotient: 2" in out
    assert "reg of the quotient: 1" in out


def test_classify_non_decomposable(files, tmp_path, capsys):
    p = tmp_path / "two.cx"
    p.write_text("kind: complex\nvertices: a b c d\na,b\nc,d\n")
    assert main(["classify", "--complex", str(p)]) == 0
    assert "vertex decomposable: no" in capsys.readouterr().out


def test_classify_graph(files, capsys):
    assert main(["classify", "--graph", files["2k2.g"]]) == 0
    out = capsys.readouterr().out
    assert "chordal: yes" in out
    assert "complement chordal: no" in out
    assert "agree=True" in out


def test_classify_refuses_oversize(files, capsys):
    assert main(["classify", "--graph", files["p4.g"], "--max-n", "2"]) == 2
    assert "refusing" in capsys.readouterr().err


def test_verify_small_suite(capsys):
    assert main(["verify", "duality", "--max-n", "3", "--count", "5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("duality: PASS")


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_reports_are_deterministic(capsys):
    args = ["verify", "spot", "--seed", "3"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "ideal.txt"
    assert main(["gen", "splittable-ideal", "--vars", "6", "--seed", "7",
                 "--out", str(out)]) == 0
    text = out.read_text()
    tree_text = (tmp_path / "ideal.txt.tree").read_text()
    from vertexsplit.formats import parse_ideal
    ideal, _ = parse_ideal(text)
    assert not ideal.is_zero
    assert tree_text.strip()
    # determinism: same seed, same bytes
    out2 = tmp_path / "ideal2.txt"
    assert main(["gen", "splittable-ideal", "--vars", "6", "--seed", "7",
                 "--out", str(out2)]) == 0
    assert out2.read_text() == text


def test_gen_graph_and_complex(tmp_path):
    for kind, flags in [("graph", ["--n", "6", "--p", "0.5"]),
                        ("complex", ["--n", "5", "--facets", "4"])]:
        out = tmp_path / f"{kind}.txt"
        assert main(["gen", kind, *flags, "--seed", "2",
                     "--out", str(out)]) == 0
        text = out.read_text()
        from vertexsplit.formats import parse_complex, parse_graph
        parser = parse_graph if kind == "graph" else parse_complex
        obj, _ = parser(text)
        assert obj is not None
