import json

import pytest

from circulant_labelling.cli import main
from circulant_labelling.serialize import DocumentError, dumps, loads, to_document, to_dot
from circulant_labelling.strength import construct_s
from circulant_labelling.tvs import construct_tvs


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "w.json"
    code, _, _ = run(capsys, "construct", "--n", "22", "--k", "2", "--mode", "tvs", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert max(e["w"] for e in doc["edgeWeights"] + doc["vertexWeights"]) == 6
    code, out, _ = run(capsys, "verify", "--in", str(path), "--expect-max", "6")
    assert code == 0 and json.loads(out)["distinct"]


def test_construct_s_19_3(capsys):
    code, out, _ = run(capsys, "construct", "--n", "19", "--k", "3", "--mode", "s")
    doc = json.loads(out)
    assert code == 0 and [e["w"] for e in doc["edgeWeights"]].count(5) == 1


def test_construct_bad_n(capsys):
    code, _, err = run(capsys, "construct", "--n", "4", "--k", "2", "--mode", "s")
    assert code == 2 and "2k+1" in err


def test_bad_flag_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--n", "x"])
    assert exc.value.code == 2


def test_verify_tampered(tmp_path, capsys):
    doc = to_document(construct_s(13, 2))
    wd = {}
    for e in doc["edgeWeights"]:
        for v in (e["u"], (e["u"] + e["d"]) % 13):
            wd[v] = wd.get(v, 0) + e["w"]
    # move one endpoint onto another vertex's degree
    order = sorted(range(13), key=wd.get)
    lo, hi = order[0], order[1]
    gap = wd[hi] - wd[lo]
    for e in doc["edgeWeights"]:
        if e["u"] == lo and e["w"] + gap <= 4:
            e["w"] += gap
            break
    else:
        pytest.fail("no edge to tamper")
    path = tmp_path / "t.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 1 and not json.loads(out)["distinct"]


def test_verify_wrong_expect(tmp_path, capsys):
    path = tmp_path / "w.json"
    path.write_text(dumps(to_document(construct_s(12, 3))))
    code, out, err = run(capsys, "verify", "--in", str(path), "--expect-max", "4")
    assert code == 1 and "3" in err and "4" in err


@pytest.mark.parametrize("text", ["{", "[]", '{"n": 7, "k": 2, "mode": "s", "edgeWeights": []}',
                                  '{"n": 7, "k": 2, "mode": "q", "edgeWeights": []}'])
def test_verify_malformed(tmp_path, capsys, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    code, _, err = run(capsys, "verify", "--in", str(path))
    assert code == 2 and err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--n-from", "5", "--n-to", "12", "--mode", "s")
    rows = [r.split(",") for r in out.strip().splitlines()]
    assert rows[0] == ["n", "k", "mode", "formula", "max", "verified", "exception"]
    assert [int(r[3]) for r in rows[1:]] == [3, 3, 3, 3, 3, 4, 4, 4]
    assert all(r[5] == "true" for r in rows[1:]) and code == 0
    code, out, _ = run(capsys, "table", "--k", "2", "--n-from", "5", "--n-to", "9", "--mode", "tvs")
    assert [int(r.split(",")[3]) for r in out.strip().splitlines()[1:]] == [2, 2, 3, 3, 3]
    code, out, _ = run(capsys, "table", "--k", "3", "--n-from", "19", "--n-to", "19", "--mode", "s")
    assert out.strip().splitlines()[1].endswith(",true")
    code, _, _ = run(capsys, "table", "--k", "3", "--n-from", "20", "--n-to", "19")
    assert code == 2


def test_oracle_and_certify(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "7", "--k", "2", "--mode", "s")
    assert code == 0 and json.loads(out)["value"] == 3
    code, out, _ = run(capsys, "oracle", "--n", "9", "--k", "4", "--mode", "s", "--max-nodes", "200")
    assert code == 4 and json.loads(out)["status"] == "timeout"
    code, out, _ = run(capsys, "certify", "--n", "19", "--k", "3", "--mode", "s")
    assert code == 0 and json.loads(out)["kind"] == "parity"
    code, out, _ = run(capsys, "certify", "--n", "22", "--k", "2", "--mode", "tvs")
    assert code == 0 and json.loads(out)["kind"] == "formula-bound"


def test_output_is_byte_stable(capsys):
    run(capsys, "construct", "--n", "31", "--k", "3", "--mode", "tvs")
    _, first, _ = run(capsys, "construct", "--n", "31", "--k", "3", "--mode", "tvs")
    _, second, _ = run(capsys, "construct", "--n", "31", "--k", "3", "--mode", "tvs")
    assert first == second


@pytest.mark.parametrize("n,k", [(5, 2), (17, 2), (23, 3), (40, 4)])
def test_document_round_trip(n, k):
    for w in (construct_s(n, k), construct_tvs(n, k)):
        back = loads(dumps(to_document(w)))
        assert back == w


def test_document_rejects_duplicates():
    doc = to_document(construct_s(7, 2))
    doc["edgeWeights"].append(dict(doc["edgeWeights"][0]))
    with pytest.raises(DocumentError):
        loads(json.dumps(doc))
    doc = to_document(construct_tvs(7, 2))
    del doc["vertexWeights"]
    with pytest.raises(DocumentError):
        loads(json.dumps(doc))


def test_dot_lists_everything_once():
    w = construct_tvs(11, 2)
    lines = to_dot(w).splitlines()
    edges = [l for l in lines if "--" in l]
    nodes = [l for l in lines if "[weight=" in l and "--" not in l]
    assert len(edges) == 22 and len(set(edges)) == 22 and len(nodes) == 11
    assert all("weight=" in l for l in edges)
