import io
import json
import os
import subprocess
import sys

import pytest

from frobex.catalog import cyclic_group, group_phi_trivial_extension
from frobex.cli import main
from frobex.hopf import group_hopf_algebra
from frobex.io import dumps
from frobex.scalars import field_make

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def c2_file(tmp_path):
    p = tmp_path / "B.json"
    p.write_text(dumps(group_phi_trivial_extension(cyclic_group(2))))
    return str(p)


def test_classify_kc2_four_classes():
    code, out, _ = run("classify", "--family", "kC2")
    assert code == 0
    assert "isomorphism classes: 4" in out and "unresolved pairs: none" in out and "seed=0" in out


def test_classify_json_is_deterministic():
    a = run("--format", "json", "--seed", "11", "classify", "--family", "kC3")
    b = run("classify", "--family", "kC3", "--format", "json", "--seed", "11")
    assert a == b and a[0] == 0
    doc = json.loads(a[1])
    assert doc["seed"] == 11 and len(doc["classes"]) == 6 and doc["unresolved"] == []


def test_classify_unresolved_exits_one():
    code, out, _ = run("classify", "--family", "x5")
    assert code == 1 and "unresolved pairs: (0,1)" in out


def test_classify_from_file_needs_lattice(c2_file):
    assert run("classify", "--algebra", c2_file)[0] == 2
    code, out, _ = run("classify", "--algebra", c2_file, "--lattice", "sqrt2")
    assert code == 0 and "structures: 5" in out
    code, _, err = run("classify", "--algebra", c2_file, "--lattice", "nope")
    assert code == 2 and "unknown lattice" in err


def test_lattice_file(tmp_path, c2_file):
    p = tmp_path / "lat.json"
    p.write_text(json.dumps({"name": "tiny", "conductor": 8, "values": ["0", "1", "-1"]}))
    code, out, _ = run("classify", "--algebra", c2_file, "--lattice", str(p))
    assert code == 0 and "structures: 1" in out


def test_verify_good_and_corrupted(tmp_path, c2_file):
    assert run("verify", c2_file)[0] == 0
    doc = json.load(open(os.path.join(GOLDEN, "catalog_kC2.json")))["extensions"][0]
    doc["theta"][0] = "1"
    bad = tmp_path / "bad_algebra.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run("verify", str(bad))
    assert code == 1
    assert "FAIL iii.theta_square" in out
    code, out, _ = run("--format", "json", "verify", str(bad))
    failed = [c["axiom"] for c in json.loads(out)["checks"] if not c["ok"]]
    assert failed == ["iii.theta_square"]


def test_verify_reports_parse_position(tmp_path):
    p = tmp_path / "p.json"
    p.write_text('{"conductor": 8, "dim": 1, "m": [["1+"]]}')
    code, _, err = run("verify", str(p))
    assert code == 2 and "parse error" in err and "position" in err
    assert run("verify", str(tmp_path / "missing.json"))[0] == 2


def test_catalog():
    code, out, _ = run("catalog")
    assert code == 0 and "kC4" in out
    assert run("catalog", "kC2")[0] == 0
    code, out, _ = run("catalog", "kC4")
    assert code == 1 and out.count("FAIL") == 4
    code, out, _ = run("--format", "json", "catalog", "klein")
    assert code == 0 and all(json.loads(out)["extensions_ok"])


def test_functor_check(c2_file):
    code, out, _ = run("functor", "check", "--kind", "tensor", "--algebra", c2_file, "--dims", "1,2")
    assert code == 0 and "result: PASS" in out
    code, out, _ = run("functor-check", "--kind", "biproduct", "--algebra", c2_file, "--dims", "1,2",
                       "--format", "json", "--seed", "5")
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 5 and doc["check"] == "extended"
    code, _, _ = run("functor", "check", "--kind", "tensor", "--algebra", c2_file, "--check", "separable")
    assert code == 1


def test_functor_dims_validation(c2_file):
    with pytest.raises(SystemExit):
        run("functor", "check", "--kind", "tensor", "--algebra", c2_file, "--dims", "0,x")


def test_hopf_check(tmp_path):
    code, out, _ = run("hopf-check", "--group", "S3")
    assert code == 0 and "A1a.coproduct_formula" in out
    h = group_hopf_algebra(cyclic_group(3), field_make(1))
    doc = json.loads(dumps(h))
    doc["S"] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    doc["S_inv"] = doc["S"]
    p = tmp_path / "h.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run("hopf-check", str(p))
    assert code == 1 and "FAIL antipode_left" in out
    assert run("hopf-check")[0] == 2


def test_acceptance_subset():
    code, out, _ = run("acceptance", "--only", "1,2")
    assert code == 0 and out.count("PASS") == 2 and "2/2 blocking criteria pass" in out


def test_goldens_regenerate_identically(tmp_path):
    code, _, _ = run("goldens", "--out", str(tmp_path))
    assert code == 0
    names = sorted(os.listdir(GOLDEN))
    assert names == sorted(os.listdir(tmp_path))
    for n in names:
        assert (tmp_path / n).read_text() == open(os.path.join(GOLDEN, n)).read(), n


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "frobex", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("frobex ")
