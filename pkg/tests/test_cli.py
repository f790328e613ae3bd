import json
from pathlib import Path

import pytest

from netstab.cli import EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, EXIT_UNDECIDED, main

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_discriminant_text(capsys):
    code, out, _ = run(capsys, "discriminant", "--net", INPUTS / "a4.net")
    assert code == EXIT_OK and out.strip() == "l^2*n^2 + 2*l*m^2*n + m^4 + m^3*n"


def test_json_keys_and_determinism(capsys):
    argv = ("net-stability", "--net", INPUTS / "e7.net")
    _c, first, _ = run(capsys, *argv, "--json")
    _c, second, _ = run(capsys, *argv, "--json")
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"command", "inputs", "result", "certificates", "diagnostics", "version"}
    assert doc["result"]["status"] == "Unstable"


@pytest.mark.parametrize("argv,key,value", [
    (("classify", "--quartic", INPUTS / "fermat.quartic"), "status", "Stable"),
    (("classify", "--quartic", INPUTS / "cubic_flex.quartic"), "status", "Unstable"),
    (("classify", "--quartic", INPUTS / "e7_discriminant.quartic"), "status", "Unstable"),
    (("good", "--net", INPUTS / "e7.net"), "good", True),
    (("segre", "--pencil", INPUTS / "double_conic.pencil"), "symbol", "[(1,1,1),1]"),
    (("hm", "--system", INPUTS / "family1.system", "--lambda", "21,17,5,-43"), "value", -6),
    (("hm", "--system", INPUTS / "cubic_net.system", "--lambda", "-2,1,1", "--strict"), "value", -12),
])
def test_subcommand_results(capsys, argv, key, value):
    code, doc = run_json(capsys, *argv)
    assert code == EXIT_OK and doc["result"][key] == value


def test_baselocus(capsys):
    code, doc = run_json(capsys, "baselocus", "--net", INPUTS / "a4.net")
    assert code == EXIT_OK and doc["result"]["accounted_length"] == 8


def test_conjugate_base_points(capsys):
    code, doc = run_json(capsys, "baselocus", "--net", INPUTS / "a5_conjugate.net")
    assert code == EXIT_OK and doc["result"]["accounted_length"] == 8 and not doc["result"]["residual"]


def test_gale(capsys):
    code, doc = run_json(capsys, "gale", "--net", INPUTS / "e7.net", "--point", "0,0,0,1", "--stability")
    assert code == EXIT_OK
    assert doc["result"]["stability"]["status"] == "Unstable"


def test_gale_verify(capsys):
    code, doc = run_json(capsys, "gale", "--net", INPUTS / "a4.net", "--point", "2,1,0,0", "--verify")
    assert code == EXIT_OK and doc["result"]["verification"]["passed"]


def test_atlas_enumerate(capsys):
    code, out, _ = run(capsys, "atlas", "enumerate")
    assert code == EXIT_OK and "contained in row 2" in out


def test_atlas_verify(capsys):
    code, doc = run_json(capsys, "atlas", "verify", "--row", "3", "--trials", "2")
    assert code == EXIT_OK and all(r["passed"] for r in doc["result"]["rows"])


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.net"
    bad.write_text("Q1 = x0^2 +* x1\nQ2 = x1^2\nQ3 = x2^2\n")
    code, _out, err = run(capsys, "discriminant", "--net", bad)
    assert code == EXIT_PARSE and "offset 6" in err


def test_missing_file_exit(capsys, tmp_path):
    code, _out, _err = run(capsys, "classify", "--quartic", tmp_path / "missing.quartic")
    assert code == EXIT_PARSE


def test_domain_error_exit(capsys):
    code, _out, err = run(capsys, "gale", "--net", INPUTS / "a4.net", "--point", "1,0,0,0")
    assert code == EXIT_DOMAIN and "PointNotOnQuadric" in err


def test_unclassified_exit(capsys, tmp_path):
    q = tmp_path / "conics.quartic"
    q.write_text("F = (x^2 + y^2 - z^2)*(x^2 + 2*y^2 - 3*z^2)\n")
    code, doc = run_json(capsys, "classify", "--quartic", q)
    assert code == EXIT_UNDECIDED and doc["certificates"]
