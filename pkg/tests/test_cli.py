from __future__ import annotations

import json

import pytest

from indecomp.cli import main
from indecomp.report import CSAReport, SurveyReport, VerificationReport
from indecomp.specs import SpecParseError, parse_spec, spec_order
from indecomp.verify import run_csa_check, run_verification


class TestSpecGrammar:
    @pytest.mark.parametrize(
        "text,order",
        [
            ("C(12)", 12),
            ("Q(4)", 16),
            ("M(7,3,2)", 21),
            ("PQ(5,1,2,2,2)", 20),
            ("S(4)", 24),
            ("D(6)", 12),
            ("A(4,2)", 8),
            ("X(C(2),S(3))", 12),
            ("X(X(C(2),C(2)),C(3))", 12),
        ],
    )
    def test_parse_and_order(self, text, order):
        assert spec_order(parse_spec(text)) == order

    @pytest.mark.parametrize("bad", ["", "C", "C(", "C(2", "Z(3)", "C(2)x", "X(C(2))"])
    def test_parse_errors(self, bad):
        with pytest.raises(SpecParseError):
            parse_spec(bad)


class TestClassifyCommand:
    def test_quaternion(self, capsys):
        assert main(["classify", "Q(4)"]) == 0
        out = capsys.readouterr().out
        assert "GeneralizedQuaternion(n=4)" in out

    def test_cyclic_12_witness(self, capsys):
        assert main(["classify", "C(12)"]) == 0
        out = capsys.readouterr().out
        assert "NotStronglyIndecomposable" in out

    def test_pq(self, capsys):
        assert main(["classify", "PQ(5,1,2,2,2)"]) == 0
        out = capsys.readouterr().out
        assert "MetacyclicPQ(p=5, alpha=1, q=2, beta=2, r=2)" in out

    def test_json_shape(self, capsys):
        assert main(["classify", "S(3)", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["report_version"] == 1
        assert data["spec"] == "S(3)"
        assert data["classification"]["variant"] == "MetacyclicPQ"

    def test_malformed_spec(self, capsys):
        assert main(["classify", "notagroup"]) == 2
        assert "bad spec" in capsys.readouterr().err

    def test_invalid_params(self, capsys):
        assert main(["classify", "M(7,3,1)"]) == 2
        assert "coprime" in capsys.readouterr().err

    def test_missing_subcommand(self):
        assert main([]) == 2


class TestVerifyCommand:
    def test_cyclic_families_to_8(self, capsys):
        assert main(["verify", "--max-order", "8", "--families", "cyclic"]) == 0
        out = capsys.readouterr().out
        assert "groups checked: 8" in out
        assert "disagreements: 0" in out

    def test_zero_max_order(self, capsys):
        assert main(["verify", "--max-order", "0"]) == 2

    def test_unknown_family(self, capsys):
        assert main(["verify", "--max-order", "8", "--families", "sporadic"]) == 2

    def test_json_text_agree(self, capsys):
        assert main(["verify", "--max-order", "12", "--families", "cyclic,dihedral"]) == 0
        text = capsys.readouterr().out
        assert (
            main(["verify", "--max-order", "12", "--families", "cyclic,dihedral", "--json"])
            == 0
        )
        data = json.loads(capsys.readouterr().out)
        assert f"groups checked: {data['groups_checked']}" in text
        assert data["report_version"] == 1
        assert data["groups_checked"] == data["agreements"] + len(data["disagreements"])

    def test_env_cap_gives_partial_exit_3(self, capsys, monkeypatch):
        monkeypatch.setenv("INDECOMP_MAX_ORDER", "16")
        assert main(["verify", "--max-order", "32", "--families", "cyclic"]) == 3
        out = capsys.readouterr().out
        assert "partial" in out
        assert "groups checked: 16" in out

    def test_env_cap_only_lowers(self, monkeypatch, capsys):
        monkeypatch.setenv("INDECOMP_MAX_ORDER", "4096")
        assert main(["verify", "--max-order", "6", "--families", "cyclic"]) == 0

    def test_report_roundtrip(self):
        report = run_verification(10, ("cyclic", "dihedral"))
        again = VerificationReport.from_json_dict(
            json.loads(json.dumps(report.to_json_dict()))
        )
        assert again == report


class TestSurveyCommand:
    def test_s4(self, capsys):
        assert main(["survey", "S(4)"]) == 0
        out = capsys.readouterr().out
        assert "subgroups: 30" in out

    def test_trivial(self, capsys):
        assert main(["survey", "C(1)"]) == 0
        assert "subgroups: 1" in capsys.readouterr().out

    def test_q3_dot_output(self, capsys, tmp_path):
        dot = tmp_path / "q3.dot"
        assert main(["survey", "Q(3)", "--dot", str(dot)]) == 0
        text = dot.read_text()
        assert text.count("label=") == 6
        assert text.count("peripheries=2") == 6

    def test_over_cap(self, capsys):
        assert main(["survey", "S(6)"]) == 3
        assert "exceeds the cap" in capsys.readouterr().err

    def test_json_roundtrip(self, capsys):
        assert main(["survey", "D(4)", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        report = SurveyReport.from_json_dict(data)
        assert report.subgroup_count == 10
        assert report.order == 8


class TestCsaCheckCommand:
    def test_small_sweep(self, capsys):
        assert main(["csa-check", "--max-order", "12"]) == 0
        out = capsys.readouterr().out
        assert "non-abelian CSA groups found: 0" in out

    def test_trivial_bound(self, capsys):
        assert main(["csa-check", "--max-order", "1"]) == 0
        out = capsys.readouterr().out
        assert "groups checked: 1" in out

    def test_json_marks_abelian_csa(self, capsys):
        assert main(["csa-check", "--max-order", "8", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["abelian_count"] == data["abelian_csa_count"]
        for row in data["results"]:
            if row["abelian"]:
                assert row["csa"]

    def test_report_roundtrip(self):
        report = run_csa_check(10, ("cyclic", "quaternion", "dihedral"))
        again = CSAReport.from_json_dict(json.loads(json.dumps(report.to_json_dict())))
        assert again == report

    def test_env_cap_partial(self, capsys, monkeypatch):
        monkeypatch.setenv("INDECOMP_MAX_ORDER", "8")
        assert main(["csa-check", "--max-order", "64", "--families", "cyclic"]) == 3
