import json

import pytest

from latmac import lm
from latmac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_repr_example1(capsys):
    code, out, _ = run(capsys, "repr", "--ring", "Z", "--f", "x^3+4*x-1", "--ideal", "3, x-2")
    assert code == 0
    assert out["a"] == "3" and out["z"] == "2"
    assert out["C"] == [["0", "1", "0"], ["-8", "-2", "-5"], ["3", "0", "2"]]
    code, out, _ = run(capsys, "repr", "--example", "1", "--ideal", "1")
    assert out["C"] == [["0", "1", "0"], ["-4", "0", "1"], ["1", "0", "0"]]


def test_repr_example2_batch(capsys):
    code, out, _ = run(capsys, "repr", "--example", "2")
    assert code == 0
    Cs = {r["ideal"]: r["C"] for r in out["results"]}
    assert Cs["t, y"] == [["0", "1", "0"], ["0", "0", "t^2+t+1"], ["t", "0", "0"]]
    assert Cs["t+1, y+1"] == [["0", "1", "0"], ["1", "1", "t^2+1"], ["t+1", "0", "1"]]


def test_repr_domain_errors(capsys):
    code, _, err = run(capsys, "repr", "--example", "1", "--ideal", "2")
    assert code == 2 and "degree-one" in err
    code, _, _ = run(capsys, "repr", "--ring", "Z", "--f", "x^3-1", "--ideal", "1")
    assert code == 2


def test_parse_errors(capsys):
    assert run(capsys, "repr", "--ring", "Z", "--f", "x^^3", "--ideal", "1")[0] == 1
    assert run(capsys, "repr", "--ring", "Q", "--f", "x^3+1", "--ideal", "1")[0] == 1
    assert run(capsys, "repr", "--ring", "Z")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["repr", "--bogus"])
    assert exc.value.code == 1


def test_forward(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "Z", "entries": [[0, 1, 0], [-8, -2, -5], [3, 0, 2]]}))
    code, out, _ = run(capsys, "forward", "--example", "1", "--matrix", str(path))
    assert code == 0
    assert out["unit_ideal"] is False
    assert out["representative"]["charpoly"] == "x^3+4*x-1"
    path.write_text(json.dumps({"ring": "Z", "entries": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    assert run(capsys, "forward", "--example", "1", "--matrix", str(path))[0] == 2
    path.write_text("not json")
    assert run(capsys, "forward", "--example", "1", "--matrix", str(path))[0] == 1


def test_classes_small(capsys):
    code, out, _ = run(capsys, "classes", "--ring", "Z", "--f", "x^3+4*x-1", "--prime-bound", "10", "--exp-bound", "2", "--box", "4")
    assert code == 0
    assert out["class_count"] == 2
    assert out["unresolved"] == []
    assert all(c["lenstra"]["satisfied"] for c in out["classes"])


def test_selfcheck_ok(capsys):
    code, out, _ = run(capsys, "selfcheck", "--seed", "1", "--cases", "10")
    assert code == 0 and out["ok"]
    code2, out2, _ = run(capsys, "selfcheck", "--seed", "1", "--cases", "10")
    assert out2 == out


def test_selfcheck_negative_control(capsys, monkeypatch):
    real = lm.cf_matrix

    def broken(form, ctx):
        C = real(form, ctx)
        C[ctx.n - 2][ctx.n - 1] = C[ctx.n - 2][ctx.n - 1] + ctx.ring.one
        return C

    monkeypatch.setattr(lm, "cf_matrix", broken)
    code, out, _ = run(capsys, "selfcheck", "--seed", "0", "--cases", "5", "--ring", "Z")
    assert code == 3
    assert out["ok"] is False
    assert out["counterexample"]["suite"] == "conjugation"
    assert "a" in out["counterexample"] and "z" in out["counterexample"]


def test_pretty_output(capsys):
    main(["repr", "--example", "1", "--ideal", "3, x-2", "--pretty"])
    assert "\n  " in capsys.readouterr().out
