import json

import pytest

import cli
from cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_three_variables(self, capsys):
        code, out, _ = run(capsys, "enumerate", "-n", "3", "-c", "imp")
        assert code == 0
        assert out.splitlines() == ["p1->(p2->p3)", "(p1->p2)->p3"]

    def test_single_variable(self, capsys):
        _, out, _ = run(capsys, "enumerate", "-n", "1")
        assert out == "p1\n"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "enumerate", "-n", "4", "-c", "mimp2", "--format", "json")
        payload = json.loads(out)
        assert set(payload) == {"command", "params", "results", "warnings"}
        assert payload["command"] == "enumerate"
        assert len(payload["results"]) == 5
        assert all(isinstance(s, str) for s in payload["results"])

    def test_tree(self, capsys):
        _, out, _ = run(capsys, "enumerate", "-n", "2", "--tree")
        assert "p1" in out and "p2" in out

    def test_unknown_connective_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "-n", "3", "-c", "mimp4"])
        assert exc.value.code == 2
        assert "mimp" in capsys.readouterr().err

    def test_too_many_variables(self):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "-n", "17"])
        assert exc.value.code == 2


class TestCensus:
    def test_imp_three(self, capsys):
        code, out, _ = run(capsys, "census", "-n", "3", "-c", "imp")
        assert code == 0
        assert out.strip() == "case1=6 case2=4 case3=2 case4=4 total=16"

    def test_single_variable_is_uncased(self, capsys):
        _, out, _ = run(capsys, "census", "-n", "1", "-c", "mimp1")
        assert "uncased_true=1 uncased_false=1" in out

    def test_csv_header(self, capsys):
        _, out, _ = run(capsys, "census", "-n", "3", "--format", "csv")
        header, row = out.splitlines()
        assert header == "n,case1,case2,case3,case4,uncased_true,uncased_false,total"
        assert row == "3,6,4,2,4,0,0,16"

    def test_table(self, capsys):
        code, out, _ = run(capsys, "census", "-n", "3", "--table")
        assert code == 0
        assert "p1" in out.splitlines()[0]
        assert len(out.splitlines()) == 9

    def test_wide_table_refused_before_building(self, monkeypatch):
        def build(*args, **kwargs):
            raise AssertionError("merged table built for a refused width")

        monkeypatch.setattr(cli, "merged_truth_table", build)
        with pytest.raises(SystemExit) as exc:
            main(["census", "-n", "10", "--table"])
        assert exc.value.code == 2

    def test_per_formula(self, capsys):
        _, out, _ = run(capsys, "census", "-n", "3", "--per-formula")
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("p1->(p2->p3): ")

    def test_cap_is_a_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["census", "-n", "11"])
        assert exc.value.code == 2


class TestSeq:
    def test_f(self, capsys):
        code, out, err = run(capsys, "seq", "f", "10")
        assert code == 0
        assert out.strip() == "1 1 4 19 104 614 3816 24595 162896 1101922"
        # two digit slips in the convergence table
        assert len([line for line in err.splitlines() if line.startswith("Warning:")]) == 2

    def test_g_table(self, capsys):
        _, out, _ = run(capsys, "seq", "g", "12")
        assert out.split()[-1] == "240787456"

    def test_k1_warns_about_printed_typo(self, capsys):
        code, out, err = run(capsys, "seq", "k1", "6")
        assert code == 0
        assert out.split()[-1] == "1514"
        assert "Warning:" in err and "514" in err

    def test_json_carries_warnings(self, capsys):
        _, out, err = run(capsys, "seq", "k1", "6", "--format", "json")
        payload = json.loads(out)
        assert payload["results"]["values"][-1] == 1514
        assert len(payload["warnings"]) == 1
        assert "Warning:" not in err

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "seq", "f", "3", "--format", "csv")
        assert out == "n,value\n1,1\n2,1\n3,4\n"

    def test_identities_and_oracle(self, capsys):
        code, out, _ = run(capsys, "seq", "t1", "8", "--check-identities", "--oracle", "5")
        assert code == 0
        assert "identities: pass" in out
        assert "oracle: MATCH up to n=5" in out

    def test_unknown_id_suggests(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["seq", "kk1", "6"])
        assert exc.value.code == 2
        assert "did you mean" in capsys.readouterr().err

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "seq", "d2", "20", "--format", "json")
        _, second, _ = run(capsys, "seq", "d2", "20", "--format", "json")
        assert first == second


class TestGf:
    def test_t3_matches_recurrence(self, capsys):
        code, out, _ = run(capsys, "gf", "t3", "8", "--diff-recurrence")
        assert code == 0
        assert out.splitlines() == ["0 1 2 9 46 262 1588", "MATCH"]

    def test_h_and_g(self, capsys):
        _, out, _ = run(capsys, "gf", "h", "6")
        assert out.strip() == "1 1 2 5 14"
        _, out, _ = run(capsys, "gf", "g", "3")
        assert out.strip() == "2 4"

    def test_identities(self, capsys):
        code, out, _ = run(capsys, "gf", "f", "32", "--check-identities")
        assert code == 0
        assert "fail" not in out


class TestAsymp:
    def test_t1_at_100(self, capsys):
        _, out, _ = run(capsys, "asymp", "t1", "--probes", "100", "--digits", "9")
        assert out.strip() == "0.497093847 (limit 0.5)"

    def test_h_at_10(self, capsys):
        _, out, _ = run(capsys, "asymp", "h", "--probes", "10")
        assert out.strip() == "0.0009765625 (limit 0)"

    def test_pairwise_with_check(self, capsys):
        code, out, _ = run(capsys, "asymp", "t3/t2", "--probes", "10", "100", "--check")
        assert code == 0
        assert out.splitlines()[-1].startswith("convergence: pass")

    def test_list_constants_csv(self, capsys):
        _, out, _ = run(capsys, "asymp", "--list-constants", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "id,exact_form,a,b,k,decimal"
        assert len(lines) == 28

    def test_needs_a_target(self):
        with pytest.raises(SystemExit) as exc:
            main(["asymp"])
        assert exc.value.code == 2


class TestParity:
    def test_y(self, capsys):
        code, out, _ = run(capsys, "parity", "y", "1024")
        assert code == 0
        assert out.strip() == "pass: odd exactly at powers of two"

    def test_g_fails(self, capsys):
        code, out, _ = run(capsys, "parity", "g", "8")
        assert code == 1
        assert out.startswith("fail:")

    def test_all(self, capsys):
        code, out, _ = run(capsys, "parity", "all", "64")
        assert code == 0
        assert len(out.splitlines()) == 13


class TestVerbose:
    def test_version_line_only_when_verbose(self, capsys):
        _, quiet, _ = run(capsys, "gf", "g", "3")
        _, loud, _ = run(capsys, "gf", "g", "3", "--verbose")
        assert loud.splitlines()[0].startswith("implication-census ")
        assert loud.splitlines()[1:] == quiet.splitlines()
