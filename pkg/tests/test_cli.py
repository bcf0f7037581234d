import json
import math

import pytest

from shadowvol.cli import main
from shadowvol.fixtures import get_example

from conftest import FIG8_PD, TREFOIL_PD

VOL_FIG8 = 2.029883212819307


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out), out


def write_job(tmp_path, obj, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_examples(capsys):
    code, obj, _ = run(capsys, ["examples", "trefoil"])
    assert code == 0
    assert obj["pd"] == TREFOIL_PD
    assert obj["arc_colors"]["2"][0][0] == 1
    code, obj, _ = run(capsys, ["examples", "fig8_minus"])
    assert obj["pd"] == FIG8_PD


def test_unknown_example(capsys):
    code, obj, _ = run(capsys, ["examples", "nope"])
    assert code == 1 and obj["error"] == "UnknownExample"


@pytest.mark.parametrize("name, vol, cs", [
    ("fig8_minus", VOL_FIG8, 0.0),
    ("fig8_plus", -VOL_FIG8, 0.0),
    ("trefoil", 0.0, math.pi ** 2 / 6),
])
def test_volume(capsys, tmp_path, name, vol, cs):
    path = write_job(tmp_path, get_example(name))
    code, rep, _ = run(capsys, ["volume", path, "--cross-check"])
    assert code == 0 and rep["ok"]
    assert abs(rep["vol"] - vol) < 1e-9
    d = abs(rep["cs_mod_pi2"] - cs) % (math.pi ** 2)
    assert min(d, math.pi ** 2 - d) < 1e-9
    assert rep["gates"] == {"saddle": True, "parity": True, "cross_check": True}
    assert rep["cross_check"]["distance_to_V0"] < 1e-6


def test_json_out_and_determinism(capsys, tmp_path):
    path = write_job(tmp_path, get_example("fig8_minus"))
    out_file = tmp_path / "report.json"
    _, _, first = run(capsys, ["volume", path, "--json-out", str(out_file)])
    _, _, second = run(capsys, ["volume", path])
    assert first == second
    assert out_file.read_text() == first


def test_seeded_search_is_deterministic(capsys, tmp_path):
    job = get_example("trefoil")
    job.pop("region_colors")
    job.pop("p")
    path = write_job(tmp_path, job)
    code, rep, first = run(capsys, ["volume", path, "--seed", "5"])
    assert code == 0
    assert abs(rep["V0"][0] + math.pi ** 2 / 6) < 1e-9
    _, _, second = run(capsys, ["volume", path, "--seed", "5"])
    assert first == second


def test_malformed_pd(capsys, tmp_path):
    job = get_example("fig8_minus")
    job["pd"][0] = [4, 7, 5]
    code, obj, _ = run(capsys, ["volume", write_job(tmp_path, job)])
    assert code == 1 and obj["error"] == "MalformedPd"


def test_invalid_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    code, obj, _ = run(capsys, ["check", str(path)])
    assert code == 1 and obj["error"] == "InvalidJob"


def test_check_reports_violations(capsys, tmp_path):
    job = get_example("fig8_minus")
    job["p"] = job["arc_colors"]["1"]
    path = write_job(tmp_path, job)
    code, rep, _ = run(capsys, ["check", path])
    assert code == 1 and not rep["ok"]
    kinds = {v["kind"] for v in rep["genericity"]["violations"]}
    assert "p~arc" in kinds
    code, rep, _ = run(capsys, ["volume", path])
    assert code == 1


def test_check_ok(capsys, tmp_path):
    code, rep, _ = run(capsys, ["check", write_job(tmp_path, get_example("trefoil"))])
    assert code == 0 and rep["ok"]
    assert rep["crossing_signs"] == [1, 1, 1, -1]


def test_signs_hint_mismatch(capsys, tmp_path):
    job = get_example("fig8_minus")
    job["signs_hint"] = [1, 1, 1, 1]
    code, obj, _ = run(capsys, ["check", write_job(tmp_path, job)])
    assert code == 1 and "error" in obj


def test_tolerance_flag_can_fail_gate(capsys, tmp_path):
    path = write_job(tmp_path, get_example("fig8_minus"))
    code, rep, _ = run(capsys, ["volume", path, "--tol", "1e-30"])
    assert code == 2 and not rep["gates"]["saddle"]
