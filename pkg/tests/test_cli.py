import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from hypercorona.cli import EXIT_FAIL, EXIT_INAPPLICABLE, EXIT_INPUT, EXIT_PASS, main
from hypercorona.io import read_hypergraph

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data(tmp_path, monkeypatch):
    """A scratch copy of the data directory as the working directory."""
    work = tmp_path / "data"
    shutil.copytree(DATA, work)
    monkeypatch.chdir(work)
    return work


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestSpectrum:
    def test_k33(self, data, capsys):
        code, rep = run_json(capsys, "spectrum", "k33.hg")
        assert code == EXIT_PASS
        res = rep["results"]
        assert res["det_M_minus_xI_text"] == "-x^3 + 3*x + 2"
        assert [(e["exact"]["text"], e["multiplicity"]) for e in res["spectrum"]] == [("2", 1), ("-1", 2)]
        assert res["certified"]

    def test_fig1b(self, data, capsys):
        _, rep = run_json(capsys, "spectrum", "fig1b.hg")
        assert rep["results"]["char_poly_text"] == "x^4 - 8*x^2 - 8*x"

    def test_seidel_table(self, data, capsys):
        code, out = run(capsys, "spectrum", "k33.hg", "--matrix", "seidel", "--format", "table")
        assert code == EXIT_PASS and out.startswith("char poly: ")

    def test_deterministic(self, data, capsys):
        outs = {run(capsys, "spectrum", "fig1b.hg")[1] for _ in range(3)}
        assert len(outs) == 1


class TestCorona:
    def test_fig1c_hg(self, data, capsys):
        code, out = run(capsys, "corona", "--config", "fig1c.json", "--emit", "hg", "--format", "text")
        assert code == EXIT_PASS
        (data / "c.hg").write_text(out)
        H = read_hypergraph(data / "c.hg")
        assert H.n == 16 and H.k == 3

    def test_roundtrip_sec3(self, data, capsys):
        _, out = run(capsys, "corona", "--config", "k33_k33.json", "--emit", "hg", "--format", "text")
        (data / "c.hg").write_text(out)
        _, direct = run_json(capsys, "corona", "--config", "k33_k33.json", "--emit", "spectrum")
        _, via = run_json(capsys, "spectrum", "c.hg")
        assert direct["model"] == "sec3"
        assert direct["results"]["char_poly"] == via["results"]["char_poly"]

    def test_models_differ(self, data, capsys):
        _, a = run_json(capsys, "corona", "--config", "fig1c.json", "--model", "sec3")
        _, b = run_json(capsys, "corona", "--config", "fig1c.json", "--model", "paper4")
        assert a["results"]["char_poly"] != b["results"]["char_poly"]

    def test_matrix(self, data, capsys):
        _, rep = run_json(capsys, "corona", "--config", "k33_k33.json", "--emit", "matrix", "--matrix", "seidel")
        M = rep["results"]["entries"]
        assert len(M) == 12 and all(M[i][i] == 0 for i in range(12))

    def test_deterministic(self, data, capsys):
        outs = {run(capsys, "corona", "--config", "fig1c.json")[1] for _ in range(2)}
        assert len(outs) == 1


class TestVerify:
    @pytest.mark.parametrize("theorem", ["3.1", "3.2", "seidel-gen", "seidel-p1", "4.1", "4.2", "seidel-4", "coronal"])
    def test_pass(self, data, capsys, theorem):
        code, rep = run_json(capsys, "verify", "--theorem", theorem, "--config", "k33_k33.json")
        assert code == EXIT_PASS and rep["results"]["status"] == "pass"

    def test_inapplicable(self, data, capsys):
        code, rep = run_json(capsys, "verify", "--theorem", "3.2", "--config", "generalized_p2.json")
        assert code == EXIT_INAPPLICABLE and rep["results"]["status"] == "inapplicable"

    def test_many_configs(self, data, capsys):
        code, rep = run_json(
            capsys, "verify", "--theorem", "3.1", "--config", "k33_k33.json", "--config", "generalized_p2.json", "--jobs", "2"
        )
        assert code == EXIT_PASS and [r["status"] for r in rep["results"]] == ["pass", "pass"]

    def test_switching(self, data, capsys):
        code, rep = run_json(capsys, "verify", "--theorem", "switching", "--input", "switch_example.hg", "--plan", "switch_plan.json")
        assert code == EXIT_PASS
        res = rep["results"]
        assert res["conjugation_identity"] and res["certificate"]["certified_non_isomorphic"]

    def test_switching_inadmissible(self, data, capsys):
        (data / "bad.json").write_text(json.dumps({"blocks": [[5, 6, 7], [2, 3, 4]], "residual": [0, 1]}))
        code, _ = run_json(capsys, "verify", "--theorem", "switching", "--input", "switch_example.hg", "--plan", "bad.json")
        assert code == EXIT_INAPPLICABLE

    def test_missing_config(self, data, capsys):
        assert run(capsys, "verify", "--theorem", "3.1")[0] == EXIT_INPUT
        code, rep = run_json(capsys, "verify", "--theorem", "3.1", "--config", "nope.json")
        assert code == EXIT_INPUT and rep["results"]["status"] == "input-error"


class TestIterate:
    def test_report(self, data, capsys):
        code, rep = run_json(capsys, "corona-iter", "--base", "k33.hg", "--depth", "2")
        res = rep["results"]
        assert code == EXIT_PASS and res["order"] == 12
        assert res["size"]["combinatorial"] == 13 and res["size"]["discrepancy"]
        assert res["spectrum_check"]["status"] == "pass"

    def test_non_regular_report(self, data, capsys):
        code, rep = run_json(capsys, "corona-iter", "--base", "fig1b.hg", "--depth", "2")
        assert code == EXIT_PASS and rep["results"]["spectrum_check"]["status"] == "inapplicable"

    def test_non_regular_spectrum(self, data, capsys):
        code, rep = run_json(capsys, "corona-iter", "--base", "fig1b.hg", "--depth", "2", "--emit", "spectrum")
        assert code == EXIT_INAPPLICABLE and rep["status"] == "inapplicable"

    def test_bad_depth(self, data, capsys):
        assert run(capsys, "corona-iter", "--base", "k33.hg", "--depth", "0")[0] == EXIT_INPUT


class TestSwitchCertify:
    def test_switch_emit(self, data, capsys):
        code, rep = run_json(capsys, "switch", "--input", "switch_example.hg", "--plan", "switch_plan.json", "--emit", "out")
        assert code == EXIT_PASS
        switched = data / "out" / "switch_example_switched.hg"
        assert switched.exists() and (data / "out" / "certificate.json").exists()
        code, cert = run_json(capsys, "certify", "--kind", "seidel", "switch_example.hg", str(switched))
        assert code == EXIT_PASS and cert["results"]["certified_non_isomorphic"]

    def test_certify_not_cospectral(self, data, capsys):
        code, _ = run_json(capsys, "certify", "k33.hg", "fig1b.hg")
        assert code == EXIT_FAIL


class TestInputErrors:
    def test_empty_file(self, data, capsys):
        (data / "empty.hg").write_text("")
        assert run(capsys, "spectrum", "empty.hg")[0] == EXIT_INPUT

    def test_missing_file(self, data, capsys):
        assert run(capsys, "spectrum", "missing.hg")[0] == EXIT_INPUT

    def test_bad_edge(self, data, capsys):
        (data / "bad.hg").write_text("k=3\nn=3\ne 0 1 5\n")
        assert run(capsys, "spectrum", "bad.hg")[0] == EXIT_INPUT

    def test_usage(self, capsys):
        assert main(["spectrum"]) == EXIT_INPUT
        assert main(["frobnicate"]) == EXIT_INPUT
        assert main(["--version"]) == EXIT_PASS


def test_module_entry_point(data):
    proc = subprocess.run([sys.executable, "-m", "hypercorona", "spectrum", "k33.hg"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["command"] == "spectrum"
