import json

import pandas as pd
import pytest

from lamkernel.models.report import Failure, LemmaResult, SuiteReport
from lamkernel.utils.report_writer import report_records, write_report


@pytest.fixture
def report():
    return SuiteReport(system="t", seed=3, results=[
        LemmaResult("alpha_identity", cases=12, failure_count=0, millis=4),
        LemmaResult("subst_free_vars", cases=40, failure_count=3, millis=9, failures=[
            Failure("M=\\v1. v0  sigma=[v0:=v1]", "v1 captured"),
        ]),
    ])


def test_report_records(report):
    records = report_records(report)
    assert records[0] == {"name": "alpha_identity", "cases": 12, "failures": 0, "millis": 4,
                          "passed": True, "reproducers": []}
    assert records[1]["passed"] is False
    assert records[1]["reproducers"] == [{"case": "M=\\v1. v0  sigma=[v0:=v1]",
                                          "detail": "v1 captured"}]


def test_json_lines(report, tmp_path):
    target = tmp_path / "report.jsonl"
    write_report(report, str(target))
    records = [json.loads(line) for line in target.read_text(encoding="utf-8").splitlines()]
    assert records == report_records(report)


def test_json_array(report, tmp_path):
    target = tmp_path / "report.json"
    write_report(report, str(target))
    with open(target, encoding="utf-8") as f:
        records = json.load(f)
    assert records == report_records(report)


def test_csv(report, tmp_path):
    target = tmp_path / "report.csv"
    write_report(report, str(target))
    frame = pd.read_csv(target)
    assert list(frame.columns) == ["name", "passed", "cases", "failures", "millis", "reproducers"]
    assert frame["failures"].tolist() == [0, 3]
    assert frame.loc[1, "reproducers"] == "M=\\v1. v0  sigma=[v0:=v1]  (v1 captured)"


def test_xlsx(report, tmp_path):
    target = tmp_path / "report.xlsx"
    write_report(report, str(target))
    frame = pd.read_excel(target, engine="openpyxl")
    assert frame["name"].tolist() == ["alpha_identity", "subst_free_vars"]
    assert frame["passed"].tolist() == [True, False]


def test_unsupported_extension(report, tmp_path):
    with pytest.raises(ValueError):
        write_report(report, str(tmp_path / "report.txt"))
    assert not (tmp_path / "report.txt").exists()


def test_log_lines(report):
    lines = report.to_log_lines()
    assert lines[0].startswith("PASS  alpha_identity  cases=12  failures=0")
    assert lines[1].startswith("FAIL  subst_free_vars  cases=40  failures=3")
    assert "v1 captured" in lines[2]
    assert lines[-1] == "2 lemmas, 1 failed, 52 cases, 3 failures (system=t, seed=3)"
