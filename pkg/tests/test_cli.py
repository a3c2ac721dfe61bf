import json

import pytest

from reidpair.cli import evaluate, main
from reidpair.errors import UsageError
from reidpair.groupring import GroupRingElem, a, b, pairing_atom, zero_vector

G = 4
Z = [0] * 8


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_xq(capsys):
    payload = {"terms": [{"c": "1", "h": Z, "x": list(a(G, 1)), "y": list(a(G, 2))}]}
    code, out, _ = run(capsys, "eval", "xq", json.dumps(payload))
    assert code == 0
    got = GroupRingElem.from_json(json.loads(out))
    assert got == pairing_atom(zero_vector(G), a(G, 1), a(G, 2))


def test_eval_theta_and_oracle(capsys):
    code, out, _ = run(capsys, "eval", "theta", '{"d": 2}')
    assert code == 0
    assert GroupRingElem.from_json(json.loads(out)) == pairing_atom(zero_vector(G), a(G, 2), b(G, 2))
    code, out, _ = run(capsys, "eval", "pair-oracle", json.dumps({"x": "a1 b1 a1' b1'", "y": "a2 b2 a2' b2'"}))
    assert code == 0 and json.loads(out)["terms"] == []


def test_eval_other_verbs():
    r = evaluate("pair", {"h": Z, "eta": list(a(G, 1)), "lam": list(a(G, 2))})
    assert len(r["terms"]) == 4
    r = evaluate("project", {"level": 1, "element": {"genus": 4, "terms": [{"h": [1, 0, 0, 1, 0, 0, 0, 0], "c": "1"}]}})
    assert len(r["terms"]) == 3
    r = evaluate("reduce", {"target": "W2", "y": {"h": [2] + [0] * 7, "x": list(b(G, 1))}})
    assert len(r["terms"]) == 5
    r = evaluate("reduce", {"expr": {"terms": [{"h": list(a(G, 2)), "x": list(a(G, 1)), "y": list(a(G, 2))}]}})
    assert len(r["terms"]) == 2


def test_malformed_payload_reports_path(capsys):
    code, _, err = run(capsys, "eval", "project", '{"level": 2, "element": {"genus": 4, "terms": [{"h": [1], "c": "1"}]}}')
    assert code == 2 and "$.element.terms[0].h" in err
    with pytest.raises(UsageError, match=r"\$\.x\[0\]"):
        evaluate("pair-oracle", {"x": [{"g": 0, "s": 1}], "y": "a1"})
    code, _, err = run(capsys, "eval", "theta", "{not json")
    assert code == 2


def test_genus_guard_before_work(capsys):
    code, out, err = run(capsys, "run", "symkernel", "--genus", "3")
    assert code == 2 and "genus" in err and out == ""


def test_unknown_suite_and_bad_count(capsys):
    assert run(capsys, "run", "nope")[0] == 2
    assert run(capsys, "run", "y-relation", "--count", "0")[0] == 2
    assert run(capsys, "run", "y-relation", "--box", "1")[0] == 2


def test_reports_are_byte_identical(capsys, tmp_path):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert run(capsys, "run", "y-relation", "--seed", "7", "--count", "20", "--out", str(p1))[0] == 0
    assert run(capsys, "run", "y-relation", "--seed", "7", "--count", "20", "--out", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()
    rep = json.loads(p1.read_text())
    assert rep["config"]["seed"] == 7 and rep["library_version"]


def test_zw_relations_suite(capsys):
    code, out, _ = run(capsys, "run", "zw-relations")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] and all(c["pass"] for c in rep["checks"])


def test_markdown_format(capsys):
    code, out, _ = run(capsys, "run", "part2-prop3", "--format", "markdown")
    assert code == 0 and out.startswith("# part2-prop3") and "| check |" in out


def test_parallel_pool_matches_sequential(capsys, monkeypatch):
    args = ("run", "pairing-oracle", "--count", "12", "--seed", "3")
    _, seq, _ = run(capsys, *args)
    monkeypatch.setenv("ACL_THREADS", "2")
    _, par, _ = run(capsys, *args)
    assert seq == par
