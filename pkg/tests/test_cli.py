"""Command-line surface: outputs, formats, exit codes, determinism."""

import json

import pytest

from quatmoments.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCensusCommand:
    def test_wigner_two_records(self, capsys):
        code, out = run(capsys, "census", "--kind", "wigner", "--deg", "2")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 2
        records = [json.loads(line) for line in lines]
        assert sorted(r["chi"] for r in records) == [1, 2]

    def test_wishart_three_records(self, capsys):
        code, out = run(capsys, "census", "--kind", "wishart", "--deg", "2")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 3
        assert sorted(json.loads(l)["chi"] for l in lines) == [1, 2, 2]

    def test_colored_census_empty(self, capsys):
        code, out = run(capsys, "census", "--kind", "wigner", "--deg", "2",
                        "--colors", "1,2")
        assert code == 0 and out.strip() == ""

    def test_csv_format(self, capsys):
        code, out = run(capsys, "census", "--kind", "wigner", "--deg", "2",
                        "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "matching,twists,v,e,f,chi,components"
        assert len(lines) == 3

    def test_bound_exceeded_exit_code(self, capsys):
        code = main(["census", "--kind", "wigner", "--deg", "14"])
        assert code == 2

    def test_byte_identical_reruns(self, capsys):
        _, first = run(capsys, "census", "--kind", "wishart", "--deg", "2,1")
        _, second = run(capsys, "census", "--kind", "wishart", "--deg", "2,1")
        assert first == second


class TestMomentCommand:
    @pytest.mark.parametrize("kind,deg,expected", [
        ("gse", "2", "4*N^2 - 2*N"),
        ("gse", "3", "0"),
        ("goe", "2", "N^2 + N"),
        ("wishart-quat", "1", "4*M*N"),
        ("wishart-quat", "2", "16*M^2*N + 16*M*N^2 - 8*M*N"),
    ])
    def test_text_output(self, capsys, kind, deg, expected):
        code, out = run(capsys, "moment", "--kind", kind, "--deg", deg,
                        "--format", "text")
        assert code == 0 and out.strip() == expected

    def test_json_output(self, capsys):
        code, out = run(capsys, "moment", "--kind", "gse", "--deg", "2")
        obj = json.loads(out)
        assert obj["poly"]["pretty"] == "4*N^2 - 2*N"
        assert obj["poly"]["terms"] == [
            {"coeff": 4, "exponents": {"N": 2}},
            {"coeff": -2, "exponents": {"N": 1}},
        ]


class TestDualityCommand:
    def test_wigner_suite_passes(self, capsys):
        code, out = run(capsys, "duality", "--kind", "wigner", "--max", "6")
        obj = json.loads(out)
        assert code == 0 and obj["ok"]

    def test_wishart_with_colorings(self, capsys):
        code, out = run(capsys, "duality", "--kind", "wishart", "--max", "3",
                        "--colors-max", "2", "--format", "text")
        assert code == 0 and "all ok: True" in out


class TestMCCommand:
    def test_estimate_with_exact_comparison(self, capsys):
        code, out = run(capsys, "mc", "--kind", "gse", "--deg", "2",
                        "--N", "3", "--samples", "4000", "--seed", "7")
        obj = json.loads(out)
        assert code == 0
        assert obj["exact"] == 30
        assert abs(obj["estimate"]["mean"] - 30) <= 5 * obj["estimate"]["stderr"]

    def test_deterministic_output(self, capsys):
        args = ("mc", "--kind", "wishart-quat", "--deg", "1", "--N", "2",
                "--M", "2", "--samples", "3000", "--seed", "5")
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second

    def test_seed_required(self, capsys):
        with pytest.raises(SystemExit):
            main(["mc", "--kind", "gse", "--deg", "2", "--N", "2",
                  "--samples", "100"])


class TestSelftestCommand:
    def test_small_sweep(self, capsys):
        code, out = run(capsys, "selftest", "--max-positions", "4")
        obj = json.loads(out)
        assert code == 0 and obj["ok"] and obj["exprs_checked"] > 0


class TestArgumentErrors:
    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            main(["spectrum"])

    def test_bad_degree_list(self):
        with pytest.raises(SystemExit):
            main(["moment", "--kind", "gse", "--deg", "two"])

    def test_color_length_mismatch(self, capsys):
        code = main(["census", "--kind", "wigner", "--deg", "2",
                     "--colors", "1,2,1"])
        assert code == 2
