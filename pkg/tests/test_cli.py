import json

import pytest
from click.testing import CliRunner

from mono import acceptance
from mono.cli import RunConfig, caps_from_env, main, run
from mono.cotilt import Catalog
from mono.errors import InputError
from mono.fixtures import kA2, kA2_modules, rem310_catalog
from mono.modrep import dsum


@pytest.fixture()
def fx(tmp_path):
    runner = CliRunner()
    for name in ("kA2", "rem310_catalog", "lambda2", "tn_fixtures"):
        r = runner.invoke(main, ["emit-fixture", name, "--out", str(tmp_path)])
        assert r.exit_code == 0, r.output
    md = kA2_modules()
    (tmp_path / "s1.json").write_text(json.dumps(md["S1"].to_json()))
    (tmp_path / "s1s2.json").write_text(json.dumps(dsum([md["S1"], md["S2"]]).to_json()))
    return tmp_path


def invoke(*args, env=None):
    return CliRunner().invoke(main, [str(a) for a in args], env=env)


def recip(fx, T, *extra):
    return invoke("reciprocity", "--algebra", fx / "kA2.json", "--n", 2, "--T", fx / T,
                  "--catalog", fx / "rem310_catalog.json", *extra)


def test_reciprocity_exit_codes(fx):
    assert recip(fx, "s1s2.json").exit_code == 0
    r = recip(fx, "s1.json", "--format", "json")
    assert r.exit_code == 1
    rep = json.loads(r.output)
    assert rep["witness"]["name"] == "(0,S2)" and rep["status"] == "fails"


def test_malformed_matrix_is_an_input_error(fx):
    bad = {"algebra": "kA2", "dim": 1,
           "action": {"e1": [["1"]], "e2": [["zero"]], "a": [["0"]]}}
    (fx / "bad.json").write_text(json.dumps(bad))
    assert recip(fx, "bad.json").exit_code == 2
    (fx / "garbage.json").write_text("{not json")
    assert recip(fx, "garbage.json").exit_code == 2


def test_reports_are_byte_identical(fx):
    a = recip(fx, "s1.json", "--format", "json").output
    b = recip(fx, "s1.json", "--format", "json").output
    assert a == b


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_verdicts_do_not_depend_on_seed(fx, seed):
    r = recip(fx, "s1.json", "--format", "json", "--seed", seed)
    assert json.loads(r.output)["witness"]["name"] == "(0,S2)"


def test_replay_reproduces_a_failure(fx):
    rep = fx / "report.json"
    rep.write_text(recip(fx, "s1.json", "--format", "json").output)
    r = invoke("replay", rep, "--format", "json")
    assert r.exit_code == 1
    assert json.loads(r.output)["result"]["matches"] is True
    tampered = json.loads(rep.read_text())
    tampered["witness"]["name"] = "(S1,S1)"
    rep.write_text(json.dumps(tampered))
    assert invoke("replay", rep).exit_code == 2


def test_caps_from_env_and_flags():
    assert caps_from_env(None) == {"resolution": 32, "depth": 16, "dim": 6}
    assert caps_from_env("8,4,2") == {"resolution": 8, "depth": 4, "dim": 2}
    assert caps_from_env("depth=3")["depth"] == 3
    with pytest.raises(InputError):
        caps_from_env("speed=3")
    r = invoke("gldim", "--algebra", "kA2", "--format", "json", env={"MONO_CAPS": "8,4,2"})
    assert json.loads(r.output)["caps"] == {"resolution": 8, "depth": 4, "dim": 2}
    r = invoke("gldim", "--algebra", "kA2", "--depth-cap", 9, "--format", "json",
               env={"MONO_CAPS": "8,4,2"})
    assert json.loads(r.output)["caps"]["depth"] == 9
    assert invoke("gldim", env={"MONO_CAPS": "x,y"}).exit_code == 2


def test_emitted_fixtures(fx):
    cat = json.loads((fx / "rem310_catalog.json").read_text())
    assert len(cat["objects"]) == 11
    assert sum(v == "projective" for v in cat["flags"].values()) == 4
    alg = json.loads((fx / "kA2.json").read_text())
    assert alg["kind"] == "quiver" and len(alg["vertices"]) + len(alg["arrows"]) == 3
    lam = json.loads((fx / "lambda2.json").read_text())
    assert lam["relations"] == [[{"coeff": "1", "path": ["x", "x"]}]]
    assert (fx / "T2_kA2.json").exists()
    assert invoke("emit-fixture", "nope").exit_code == 2


@pytest.mark.parametrize("args,code", [
    (["rmon", "rem310:(0,S2)"], 0),
    (["check-sn", "rem310:7"], 1),
    (["check-sn", "rem310:7", "--epi"], 0),
    (["check-sn", "rem310:3", "--cond", "perp-left:S1"], 0),
    (["perp", "S2", "--T", "S1"], 0),
    (["perp", "S1", "--T", "S2"], 1),
    (["perp", "J1", "--T", "J1", "--algebra", "lambda2", "--res-cap", 3], 3),
    (["cotilt", "DA", "--n", 2], 0),
    (["cotilt", "S1+S2"], 1),
    (["cotilt", "A", "--tilting"], 0),
    (["identity", "COR33", "--T", "A", "--catalog", "rem310"], 0),
    (["identity", "PROP38B", "--T", "S1", "--catalog", "rem310"], 2),
    (["profile", "--n", 2], 0),
    (["gproj", "rem310:0"], 0),
    (["gproj", "m:DA"], 1),
    (["thm44", "--catalog", "rem310"], 0),
    (["endalg", "S1+P1"], 0),
    (["gldim", "--n", 2], 0),
    (["gldim", "--n", 2, "--at-most", 1], 1),
    (["gldim", "--algebra", "lambda2"], 3),
    (["thm51", "--catalog", "oracle:kA2:2:3"], 0),
    (["enumerate", "--algebra", "lambda2", "--dim-cap", 3], 0),
    (["enumerate", "--algebra", "lambda2", "--dim-cap", 1], 3),
    (["decompose", "S1+P1+S1"], 0),
    (["reciprocity", "--T", "S1"], 2),
    (["rmon", "rem310:99"], 2),
    (["gldim", "--algebra", "nonsense"], 2),
])
def test_subcommand_exit_codes(args, code):
    r = invoke(*args)
    assert r.exit_code == code, r.output


def test_run_returns_structured_reports():
    code, rep = run(RunConfig("profile", {"algebra": "kA2"}))
    assert code == 0 and rep["result"]["left_selfinj_dim"] == "1"
    code, rep = run(RunConfig("no-such-command"))
    assert code == 2 and "unknown command" in rep["error"]


def test_selftest_subset_passes():
    r = invoke("selftest", "--only", 1, "--only", 2)
    assert r.exit_code == 0
    assert "PASS criterion  1" in r.output


def test_selftest_names_a_corrupted_fixture(monkeypatch):
    good = rem310_catalog()
    broken = Catalog(kA2(), 2, good.objects[1:], True, "missing one object")
    monkeypatch.setattr(acceptance, "rem310_catalog", lambda: broken)
    r = invoke("selftest", "--only", 1, "--format", "json")
    assert r.exit_code == 1
    assert json.loads(r.output)["result"]["failed"] == [1]
