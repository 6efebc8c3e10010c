import json
import os
import subprocess

import pytest

import valdim


def test_dimensions():
    r = valdim.mdim("C(w^2)")
    assert r["value"] == "3"
    assert r["method"] == "both"
    assert [s["group"] for s in r["chain"]] == ["C(w^2)", "C(w)", "C(0)", "0"]
    assert valdim.mdim("Cminus(w^w)")["value"] == "w"
    assert valdim.mdim("Q")["value"] == "undefined"
    assert valdim.breadth("Z^2")["value"] == "1"
    assert valdim.chain("lex(Z,Z)", "chain")["terminal"] == "TotallyOrdered"


def test_literals_round_trip():
    for spec in ["Z", "Z^3", "lex(Z,Z)", "Q", "C(w^2*3+w)", "Cminus(w^w)"]:
        assert valdim.canonical_gamma(valdim.canonical_gamma(spec)) == valdim.canonical_gamma(spec)
        rep = valdim.report("mdim", spec)
        assert rep["schema_version"] == valdim.SCHEMA_VERSION
        assert valdim.canonical_gamma(rep["gamma"]) == rep["gamma"]
        for step in rep["result"]["chain"]:
            assert valdim.canonical_ordinal(step["alpha"]) == step["alpha"]
    assert valdim.natural_sum("w+1", "w^2") == "w^2+w+1"


def test_errors():
    with pytest.raises(valdim.ValdimSyntaxError) as info:
        valdim.canonical_ordinal("w^+1")
    assert info.value.offset == 2
    with pytest.raises(valdim.ValdimError) as info:
        valdim.zg("Q")
    assert info.value.code == "UnsupportedGamma"
    assert issubclass(valdim.ValdimSyntaxError, ValueError)


def test_ziegler_and_pp():
    z = valdim.zg("Z", bound=3, stratify=True)
    assert z["count"] == 8
    assert z["stratify"]["agrees"]
    assert {p["I"]["class"] for p in z["points"]} == {"principal", "zero"}
    lex = valdim.zg("lex(Z,Z)", bound=2)
    assert any(p["I"]["class"] == "limitcut" for p in lex["points"])
    assert valdim.leq("Z", "sum((2;inf))", "sum((1;inf))")["lhs_leq_rhs"]
    star = valdim.spec_star("lex(Z,Z)")
    assert star["cb_rank"] == star["mdim"] == "2"
    q = valdim.classify("Q")
    assert q["superdecomposable_exists"] and q["breadth_gamma"] == "0"


def test_check_selection():
    r = valdim.check("zg-lex")
    assert r["selected"] == 1 and r["failed"] == 0
    empty = valdim.check("no-such-tag")
    assert empty["selected"] == 0 and "warning" in empty


def test_table_is_rendered_from_json():
    rep = valdim.report("classify", "Z^2")
    table = valdim.render_table(rep)
    assert "mdim_gamma" in table
    assert table == valdim.render_table(json.loads(json.dumps(rep)))


@pytest.mark.skipif("VALDIM_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["VALDIM_CLI"]
    ok = subprocess.run([cli, "mdim", "--gamma", "Z^2"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["result"]["value"] == "1"
    assert subprocess.run([cli, "mdim", "--gamma", "Z^"], capture_output=True).returncode == 2
    assert subprocess.run([cli, "check", "--tag", "nothing"], capture_output=True).returncode == 0
    env = dict(os.environ, VALDIM_ITERATION_BUDGET="1")
    r = subprocess.run([cli, "mdim", "--gamma", "lex(Z,Z,Z)"], capture_output=True, text=True, env=env)
    assert json.loads(r.stdout)["result"]["method"] == "closed_form"
