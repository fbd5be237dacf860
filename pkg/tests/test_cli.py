import json
import subprocess
import sys

import pytest

from rootzeta.cli import build_parser, main, resolve_config, run


def _json(argv):
    code, report = run(argv + ["--format", "json", "--out", "/dev/null"])
    return code, report


def test_eval_mzv():
    code, rep = _json(["eval", "--mzv", "2,3", "--digits", "40"])
    assert code == 0
    (r,) = rep["results"]
    assert r["numeric"].startswith("0.2288103976033537597687461489416887919325")
    assert "bound" in r


def test_reduce_double_text(capsys):
    assert main(["reduce", "--double", "2,3"]) == 0
    assert "-11/2*zeta(5) + 1/2*pi^2*zeta(3)" in capsys.readouterr().out


def test_reduce_triple_canonical():
    code, rep = _json(["reduce", "--triple", "2,2,2", "--canonical"])
    assert code == 0 and rep["results"][0]["value"] == "1/5040*pi^6"


def test_sums_decomposition():
    code, rep = _json(["sums", "--family", "C", "--depth", "3", "--d", "1", "--N", "3"])
    r = rep["results"][0]
    assert code == 0 and r["value"] == "1/5040*pi^6"
    assert r["decomposition"] == "5/8*zeta(6) - 1/4*zeta(2)*zeta(4)"


def test_pcoeff_and_volume():
    code, rep = _json(["pcoeff", "--family", "C", "--depth", "2", "--k", "4,4"])
    assert code == 0 and rep["results"][0]["value"] == "1/6300"
    code, rep = _json(["volume", "--family", "B", "--depth", "2", "--k", "1"])
    assert rep["results"][0]["value"] == "1/320*pi^4"


@pytest.mark.parametrize("argv", [
    ["eval", "--mzv", "2,1"],
    ["eval", "--mzv", "x"],
    ["reduce", "--double", "2,4"],
    ["sums", "--depth", "3", "--N", "2"],
    ["pcoeff", "--depth", "2"],
    ["verify", "nonsense"],
    ["bogus"],
    [],
])
def test_usage_errors_exit_2(argv):
    assert main(argv) == 2


def test_accuracy_failure_exits_1():
    code, rep = _json(["eval", "--mzv", "2,3", "--cutoff", "16", "--em-order", "2", "--digits", "60"])
    assert code == 1 and rep["status"] == "fail"


def test_deterministic_json(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        assert main(["reduce", "--triple", "4,2,2", "--format", "json", "--out", str(p)]) == 0
        rep = json.loads(p.read_text())
        rep.pop("wall_time")
        outs.append(json.dumps(rep))
    assert outs[0] == outs[1]
    assert list(json.loads((tmp_path / "r0.json").read_text())) == ["command", "config", "status", "results",
                                                                       "wall_time"]


def test_config_precedence(tmp_path):
    cfgfile = tmp_path / "c.cfg"
    cfgfile.write_text("# comment\ncutoff = 900\nem_order=12\n")
    parser = build_parser()
    env = {"ROOTZETA_CUTOFF": "700", "ROOTZETA_EM_ORDER": "10", "ROOTZETA_PRECISION_BITS": "300"}
    args = parser.parse_args(["eval", "--zeta", "3", "--config", str(cfgfile), "--em-order", "16"])
    cfg = resolve_config(args, 1, environ=env)
    assert (cfg.cutoff, cfg.em_order, cfg.precision_bits) == (900, 16, 300)


def test_bad_config_file(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("mystery = 3\n")
    assert main(["eval", "--zeta", "3", "--config", str(p)]) == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "rootzeta", "volume", "--depth", "2", "--k", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "1/113400*pi^8" in out.stdout
