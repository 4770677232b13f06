import json

from main import dart_pairs, run_instance, run_sweep, sweep_instances


def test_dart_pairs():
    assert list(dart_pairs(7)) == [(3, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3)]


def test_instance_names_and_expected_counts():
    instances = {item["name"]: item for item in sweep_instances(r_max=11, t_span=4, k_max=1, thm5_k_max=1, mapped=1)}
    assert instances["thm1_r7_s2_t11"]["expected"] == 11
    assert instances["thm2_r7_s2"]["expected"] == 5
    assert instances["thm3_r11_s5_t3"]["expected"] == 9
    assert instances["thm4_k1"]["expected"] == 15
    assert instances["thm5_k1"]["expected"] == 45
    assert instances["thm2_r5_s2_kite"]["to_kite"]


def test_run_instance_reports_errors_as_data():
    result = run_instance({"name": "thm2_r7_s3", "theorem": 2, "params": {"r": 7, "s": 3}, "expected": 4})
    assert result["ok"] is False
    assert result["error"]["code"] == "BAD_HYPOTHESES"


def test_run_sweep_writes_one_file_per_instance(tmp_path):
    summary = run_sweep(out_dir=str(tmp_path), workers=1, r_max=5, t_span=2, k_max=1, thm5_k_max=0, mapped=1)
    assert summary["failed"] == []
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == summary["instances"] + 1
    stored = json.loads((tmp_path / "thm4_k1.json").read_text(encoding="utf-8"))
    assert stored["ok"] and stored["report"]["face_count"] == 15
