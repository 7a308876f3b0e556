from __future__ import annotations

import json

import pytest

from bicrossprod.bicross import pair_to_json
from bicrossprod.cli import main
from bicrossprod.gallery import build


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_gallery_pair(capsys):
    code, out, _ = run(capsys, "verify", "--pair", "gallery:group-s3")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["dim"] == 6


def test_report_mirror_sweedler(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "report", "--pair", "gallery:mirror-sweedler", "--out", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert doc["schema"] == "modular_report.v1"
    assert doc["values"]["delta#_label"] == "g#1"


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "report", "--pair", "gallery:mirror-taft3")
    _, b, _ = run(capsys, "report", "--pair", "gallery:mirror-taft3")
    assert a == b


def test_pair_file_round_trip(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(pair_to_json(build("mirror-sweedler"))), encoding="utf-8")
    code, out, _ = run(capsys, "build", "--pair", str(path))
    assert code == 0
    assert json.loads(out)["schema"] == "hopf.v1"
    hopf = tmp_path / "h.json"
    hopf.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--pair", str(hopf))
    assert code == 0 and json.loads(out)["dim"] == 16


def test_perturbed_pair_exits_1_with_witness(capsys, tmp_path):
    doc = pair_to_json(build("mirror-sweedler"))
    # x ⊲ g = -x becomes x ⊲ g = x
    (entry,) = [e for e in doc["action"] if e[:2] == [1, 2]]
    entry[2][0][1]["coeffs"] = [["1", "1"]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--pair", str(path))
    assert code == 1
    rep = json.loads(out)
    assert rep["ok"] is False
    assert any(c["status"] == "fail" and c.get("witness") for c in rep["checks"].values())


@pytest.mark.parametrize("content", ["{not json", "[1, 2]", '{"schema": "other.v9"}', '{"schema": "pair.v1", "type": "first"}'])
def test_malformed_input_exits_2(capsys, tmp_path, content):
    path = tmp_path / "x.json"
    path.write_text(content, encoding="utf-8")
    code, _, err = run(capsys, "verify", "--pair", str(path))
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_and_unknown_gallery_name(capsys, tmp_path):
    assert run(capsys, "verify", "--pair", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "verify", "--pair", "gallery:nope")[0] == 2


def test_field_restriction(capsys):
    assert run(capsys, "verify", "--pair", "gallery:mirror-taft3", "--field", "Q")[0] == 2
    assert run(capsys, "verify", "--pair", "gallery:mirror-taft3", "--field", "Q(zeta_6)")[0] == 0
    assert run(capsys, "verify", "--pair", "gallery:group-s3", "--field", "Q")[0] == 0


def test_dualize_writes_pairing(capsys, tmp_path):
    pairing = tmp_path / "pairing.json"
    code, out, _ = run(capsys, "dualize", "--pair", "gallery:mirror-sweedler", "--pairing", str(pairing))
    assert code == 0
    assert json.loads(out)["type"] == "second"
    doc = json.loads(pairing.read_text(encoding="utf-8"))
    assert doc["schema"] == "pairing.v1"


def test_dual_pair_verifies_from_file(capsys, tmp_path):
    _, out, _ = run(capsys, "dualize", "--pair", "gallery:group-s3")
    path = tmp_path / "dual.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--pair", str(path))
    assert code == 0


def test_gallery_listing(capsys):
    code, out, _ = run(capsys, "gallery")
    assert code == 0
    names = {r["name"]: r for r in json.loads(out)["pairs"]}
    assert names["group-s3"]["core"] and names["group-s3"]["dim"] == 6
    assert names["dinf-action"]["lazy"]


def test_lazy_verify(capsys):
    code, out, _ = run(capsys, "verify", "--pair", "gallery:dinf-coaction", "--samples", "30", "--seed", "ff")
    assert code == 0 and json.loads(out)["ok"]


@pytest.mark.parametrize("name", ["mirror-sweedler", "group-s3"])
def test_check_duality(capsys, name):
    code, out, _ = run(capsys, "check-duality", "--pair", f"gallery:{name}")
    assert code == 0
    ids = list(json.loads(out)["checks"])
    assert any(i.startswith("dual(AB) -> CD") for i in ids)
    assert any(i.startswith("mirror: ") for i in ids) == (name == "mirror-sweedler")


def test_report_rejects_lazy_pair(capsys):
    assert run(capsys, "report", "--pair", "gallery:dinf-action")[0] == 2


def test_bad_seed_is_a_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["verify", "--pair", "gallery:group-s3", "--seed", "xyz"])
    assert e.value.code == 2
