import io
import json
import math

import pytest

from weightcalc.cli import dumps, run


def call(*argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_gindex_qgevrey():
    code, out, _ = call("gindex", "--seq", "qgevrey:2", "--P", "4096")
    assert code == 0
    d = json.loads(out)
    assert d["g"] == 2 and d["classification"] == "exact"


def test_check_mg_gevrey():
    code, out, _ = call("check", "mg", "--seq", "gevrey:1", "--P", "512")
    d = json.loads(out)
    assert code == 0 and d["holds"] is True and d["constants"]["C"] == 2


def test_check_other_conditions():
    code, out, _ = call("check", "om6", "--seq", "qgevrey:2", "--P", "512")
    assert code == 0 and json.loads(out)["holds"] is False
    code, out, _ = call("check", "genmg", "--seq", "qgevrey:2", "--d", "2", "--P", "512")
    assert json.loads(out)["holds"] is True
    code, out, _ = call("check", "mixed-root", "--seq", "gevrey:2", "--against", "gevrey:1", "--P", "256")
    assert json.loads(out)["holds"] is True
    code, out, _ = call("check", "sandwich", "--seq", "gevrey:1", "--ell", "2", "--P", "512")
    assert json.loads(out)["condition"] == "sandwich"
    code, _, err = call("check", "mixed-root", "--seq", "gevrey:1")
    assert code == 1 and "--against" in err
    code, _, err = call("check", "nonsense", "--seq", "gevrey:1", "--P", "64")
    assert code == 1 and "unknown condition" in err


def test_seq_csv_from_quotients_file(tmp_path):
    f = tmp_path / "fact.json"
    f.write_text(json.dumps({"kind": "quotients", "params": {"mu": list(range(1, 11))}}))
    code, out, _ = call("seq", "--spec", str(f), "--export", "csv")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "p,logM,logmu"
    p, logM, _ = rows[5].split(",")
    assert p == "4" and float(logM) == pytest.approx(math.log(24), rel=1e-15)


def test_malformed_spec_file(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"kind": "quotients",\n  "params": [}')
    code, _, err = call("seq", "--spec", str(f))
    assert code == 1 and "line 2" in err


def test_domain_error_names_bound():
    code, _, err = call("omega", "--seq", "gevrey:1", "--P", "16", "--t", "1e9")
    assert code == 1 and "domain error" in err and "u_max" in err


def test_usage_errors_exit_1():
    assert call()[0] == 1
    assert call("bogus")[0] == 1
    assert call("gindex")[0] == 1
    assert call("verify", "all")[0] == 1
    assert call("verify", "no-such-id", "--inputs", "gevrey:1")[0] == 1
    assert call("verify", "index-transform", "--inputs", "random", "--P", "64")[0] == 1
    assert call("gindex", "--seq", "gevrey:1", "--P", "0")[0] == 1


def test_omega_conjugate_matrix_outputs():
    code, out, _ = call("omega", "--seq", "gevrey:1", "--P", "64", "--t", "10")
    assert json.loads(out)["omega"][0] == pytest.approx(7.921438356864947, rel=1e-13)
    code, out, _ = call("conjugate", "--seq", "gevrey:1", "--P", "8", "--export", "csv")
    assert out.splitlines()[0] == "x,value" and len(out.splitlines()) == 10
    code, out, _ = call("matrix", "--omega", "qgevrey:2", "--P", "32", "--ell", "1", "2")
    d = json.loads(out)
    assert d["2.0"]["P"] == 16 and d["2.0"]["logW"][1] == pytest.approx(2 * math.log(2))
    code, out, _ = call("matrix", "--omega", "gevrey:1", "--P", "8", "--ell", "0.5", "--export", "csv")
    assert out.splitlines()[0] == "l,p,logW"


def test_verify_single_and_seeded():
    code, out, _ = call("verify", "power-root-duality", "--inputs", "random", "random:splice",
                        "--seed", "4", "--P", "128", "--l", "2")
    d = json.loads(out)
    assert code == 0 and d["seed"] == 4 and d["status"] != "violation-found"
    code2, out2, _ = call("verify", "power-root-duality", "--inputs", "random", "random:splice",
                          "--seed", "4", "--P", "128", "--l", "2")
    assert out == out2


def test_verify_all_byte_identical(tmp_path, monkeypatch):
    monkeypatch.setenv("WEIGHTCALC_OUT", str(tmp_path))
    code, out, _ = call("verify", "all", "--family", "gevrey:1", "--P", "1024")
    code2, out2, _ = call("verify", "all", "--family", "gevrey:1", "--P", "1024")
    assert code == code2 == 0 and out == out2
    assert (tmp_path / "verify-all.json").read_text() == out
    d = json.loads(out)
    assert d["status"] == "consistent" and len(d["reports"]) == 16


def test_verify_all_random_family_needs_seed():
    assert call("verify", "all", "--family", "random", "--P", "256")[0] == 1
    code, out, _ = call("verify", "all", "--family", "random", "--seed", "3", "--P", "512")
    code2, out2, _ = call("verify", "all", "--family", "random", "--seed", "3", "--P", "512")
    assert code == code2 == 0 and out == out2
    d = json.loads(out)
    assert d["seed"] == 3 and d["status"] != "violation-found"


def test_report_writes_plot_data(tmp_path):
    code, out, _ = call("report", "--seq", "qgevrey:2", "--P", "64", "--out", str(tmp_path))
    assert code == 0 and json.loads(out)["files"] == ["genmg.csv", "omega.csv", "profiles.csv"]
    assert (tmp_path / "genmg.csv").read_text().startswith("d,p,log_ratio")


def test_dumps_format():
    s = dumps({"b": 0.1, "a": [1, True, None, float("inf")]})
    assert s == '{"a": [1, true, null, "inf"], "b": 0.10000000000000001}\n'
    with pytest.raises(TypeError):
        dumps({"x": object()})
