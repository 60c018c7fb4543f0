import json

import pytest

from relfaces.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_then_check(tmp_path, capsys):
    path = str(tmp_path / "s.cplx")
    assert main(["gen", "stacked-sphere", "3", "8", "--seed", "7", "-o", path]) == 0
    code, out, _ = run(["check", "lbt_closed", path], capsys)
    assert code == 0 and "PASS" in out


def test_missing_file_exits_2(capsys):
    code, _, err = run(["check", "main1", "missing.cplx"], capsys)
    assert code == 2 and "missing.cplx" in err


def test_parse_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.cplx"
    bad.write_text("1 2 x\n")
    assert main(["info", str(bad)]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "no_such_check", str(bad)])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["homology", str(bad), "--field", "6"])
    assert exc.value.code == 2


def test_failing_check_exits_1(tmp_path, capsys):
    path = str(tmp_path / "d.cplx")
    main(["gen", "simplex-boundary", "4", "-o", path])
    code, out, _ = run(["check", "sharpness_facet_removed", path], capsys)
    assert code == 1 and "FAIL" in out


def test_check_json_schema(tmp_path, capsys):
    path = str(tmp_path / "c.cplx")
    main(["gen", "cyclic", "4", "7", "-o", path])
    code, out, _ = run(["check", "lbt_closed", path, "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert list(data[0]) == ["check", "input", "seed", "field", "lhs", "rhs", "relation", "holds",
                             "skipped_reason", "witnesses"]
    assert data[0]["lhs"] == 3


def test_sigma_prints_rationals(tmp_path, capsys):
    path = tmp_path / "t.cplx"
    path.write_text("1 2\n2 3\n1 3\n")
    code, out, _ = run(["sigma", str(path), "-i", "-1"], capsys)
    assert code == 0 and out.strip() == "-1\t1/4"
    code, out, _ = run(["mu", str(path)], capsys)
    assert out.split() == ["0", "1", "1", "1"]


def test_betti_formats(tmp_path, capsys):
    path = tmp_path / "c4.cplx"
    path.write_text("1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(["betti", str(path)], capsys)
    assert out.splitlines() == ["i\tj\tbeta", "0\t0\t1", "1\t2\t2", "2\t4\t1"]
    code, out2, _ = run(["betti", str(path), "--oracle"], capsys)
    assert out2 == out
    code, out, _ = run(["betti", str(path), "--format", "json"], capsys)
    assert json.loads(out)


def test_wlp_and_reduce(tmp_path, capsys):
    path = str(tmp_path / "o.cplx")
    main(["gen", "octahedron", "-o", path])
    code, out, _ = run(["wlp", path, "--trials", "2"], capsys)
    assert code == 0 and json.loads(out)["status"] == "passes"
    code, out, _ = run(["reduce", path], capsys)
    assert json.loads(out)["dims"] == [1, 3, 3, 1]


def test_corpus_json(tmp_path, capsys):
    out = tmp_path / "out.json"
    code, _, err = run(["corpus", "balls-small", "--ids", "main1,prop61", "--json", str(out)], capsys)
    assert code == 0
    data = json.loads(out.read_text())
    assert data and all(set(d) >= {"check", "input", "holds"} for d in data)
    code, stdout, _ = run(["corpus", "empty", "--json", "-"], capsys)
    assert code == 0 and json.loads(stdout) == []
