import json

import pytest

from bei.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_plain(capsys):
    code, out, _ = run(capsys, "classify", "--graph6", "CL")
    assert code == 0
    assert "CL" in out and "reg=3" in out and "gorenstein" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--graph6", "CL", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["CM"] and rec["level"] and rec["pseudo_gorenstein"]
    assert rec["pd"] == 3 and rec["reg"] == 3


def test_classify_check_ok(capsys):
    code, out, _ = run(capsys, "classify", "--graph6", "CL", "--check")
    assert code == 0
    assert "violation" not in out


def test_classify_from_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("4; 1 2; 2 3; 3 4\n")
    code, out, _ = run(capsys, "classify", "--file", str(f), "--json")
    assert code == 0
    assert json.loads(out)["graph6"] == "CL"


def test_classify_bad_word(capsys):
    code, _, err = run(capsys, "classify", "--graph6", "notagraph6word!!")
    assert code == 1
    assert "error" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert code == 0
    words = out.split()
    assert len(words) == 6
    assert words == sorted(words) and "CL" in words


def test_enumerate_indecomposable(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--indecomposable")
    assert code == 0
    words = out.split()
    assert len(words) < 6 and "CL" not in words


def test_table1_small(capsys, tmp_path):
    csv_path = tmp_path / "rows.csv"
    jsonl_path = tmp_path / "recs.jsonl"
    code, out, _ = run(capsys, "table1", "--max-n", "4",
                       "--csv", str(csv_path), "--jsonl", str(jsonl_path))
    assert code == 0
    assert "published" in out
    recs = [json.loads(line) for line in
            jsonl_path.read_text().splitlines()]
    assert any(r["graph6"] == "C~" and r["CM"] for r in recs)
    assert "n," in csv_path.read_text().splitlines()[0]


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "fm",
                       "--params", "3")
    assert code == 0
    assert out.strip() == "EhSG"
    code, out, _ = run(capsys, "construct", "--family", "hi",
                       "--params", "1", "2", "1", "--edges")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1 + 4  # word plus one line per edge
    code, _, err = run(capsys, "construct", "--family", "chain",
                       "--params", "2")
    assert code == 1 and "m >= 3" in err


def test_matroid(capsys):
    code, out, _ = run(capsys, "matroid", "--graph6", "Bw")
    assert code == 0
    assert "not a matroid" in out and "x2" in out
    # the naturally labelled path passes; its canonical relabelling 1-3-2
    # ("BW") would not, so the word is given verbatim here
    code, out, _ = run(capsys, "matroid", "--graph6", "Bg")
    assert code == 0
    assert out.strip() == "matroid"


def test_socle(capsys):
    code, out, _ = run(capsys, "socle", "--m", "3")
    assert code == 0
    assert out.strip() == "socle degrees: [3, 3, 3, 3, 3]"


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
