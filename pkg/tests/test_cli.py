import json
import os

import pytest

from bethe.cli import main
from bethe.reports import Report


@pytest.fixture(autouse=True)
def _deterministic(monkeypatch, tmp_path):
    monkeypatch.setenv("BETHE_DETERMINISTIC", "1")
    monkeypatch.setenv("BETHE_OUTPUT_DIR", str(tmp_path))
    return tmp_path


def test_verify_pass_exit_zero(tmp_path):
    assert main(["verify", "rtt", "--kind", "gl", "--N", "2", "--D", "2"]) == 0
    data = json.loads((tmp_path / "rtt.json").read_text())
    assert data["result"] == "pass"
    assert set(data) == {"check", "params", "result", "details",
                         "runtime_ms", "conventions"}
    assert set(data["conventions"]) == {"h_k_orientation", "s_uk_orientation"}
    for row in data["details"]:
        assert set(row) == {"item", "residual_zero"}


def test_usage_errors_exit_two():
    assert main(["verify", "no-such-check"]) == 2
    assert main(["verify", "rtt", "--kind", "gl"]) == 2      # missing --N
    assert main(["verify", "sklyanin", "--kind", "gl", "--N", "2"]) == 2
    assert main(["verify", "classical-so2n", "--kind", "sp", "--n", "1"]) == 2


def test_reports_are_byte_identical(tmp_path):
    args = ["verify", "jacobian", "--kind", "gl", "--N", "2", "--M", "1"]
    assert main(args + ["--out", str(tmp_path / "a.json")]) == 0
    assert main(args + ["--out", str(tmp_path / "b.json")]) == 0
    assert (tmp_path / "a.json").read_bytes() == \
        (tmp_path / "b.json").read_bytes()


def test_compute_bethe_constant_term(tmp_path):
    assert main(["compute", "bethe", "--kind", "gl", "--N", "3",
                 "--Z", "diag:1,2,3", "--k", "2", "--D", "2"]) == 0
    data = json.loads((tmp_path / "bethe.json").read_text())
    (row,) = data["series"]
    assert row["k"] == 2
    assert row["coeffs"][0] == {"terms": [{"word": [], "coeff": "2/1"}]}


def test_compute_tables_are_byte_identical(tmp_path):
    args = ["compute", "poisson-bethe", "--kind", "sp", "--n", "1", "--M", "1"]
    assert main(args + ["--out", str(tmp_path / "p1.json")]) == 0
    assert main(args + ["--out", str(tmp_path / "p2.json")]) == 0
    assert (tmp_path / "p1.json").read_bytes() == \
        (tmp_path / "p2.json").read_bytes()


def test_compute_qdet_has_d_plus_one_coefficients(tmp_path):
    assert main(["compute", "qdet", "--kind", "gl", "--N", "2",
                 "--D", "4"]) == 0
    data = json.loads((tmp_path / "qdet.json").read_text())
    assert len(data["series"][0]["coeffs"]) == 5


def test_text_format(tmp_path):
    out = tmp_path / "r.txt"
    assert main(["verify", "rtt", "--kind", "gl", "--N", "2", "--D", "1",
                 "--format", "text", "--out", str(out)]) == 0
    body = out.read_text()
    assert "result: pass" in body and "PASS" in body


def test_report_failure_exit_one(tmp_path, monkeypatch):
    rep = Report("demo", {}, [("bad row", False)], 0, {})
    assert not rep.passed and rep.to_dict()["result"] == "fail"
    import bethe.cli as cli
    monkeypatch.setattr(cli, "run_check",
                        lambda cfg, name: [("forced residual", False)])
    code = main(["verify", "rtt", "--kind", "gl", "--N", "2"])
    assert code == 1
    data = json.loads((tmp_path / "rtt.json").read_text())
    assert data["result"] == "fail"


def test_odd_orthogonal_flag(tmp_path):
    assert main(["verify", "twisted-symmetry", "--kind", "so", "--n", "1",
                 "--odd", "--D", "2"]) == 0
