import json

from circlehom.cli import main


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


BOUNDING = json.dumps({"support": [0, 1, 2], "representation": [
    {"angle": "0"}, {"angle": "a1"}, {"angle": "a2"}, {"angle": "0", "iota": "1"}]})
BLOCKED = json.dumps({"support": [0, 1, 2], "representation": [
    {"angle": "0"}, {"angle": "a1"}, {"angle": "a2"}, {"angle": "1/2"}]})


def test_star_command(capsys):
    code, body = run(capsys, "star", "a1 + (1 - a1)")
    assert code == 0
    assert body["display"] == "{1-e, 1, 1+e}"
    code, body = run(capsys, "star", "0 + 1/2")
    assert body["display"] == "{1/2}"
    code, body = run(capsys, "star", "1/2+e + 1/3-e")
    assert body["display"] == "{5/6-e, 5/6, 5/6+e}"


def test_star_parse_error_exit_code(capsys):
    code = main(["--json", "star", "1/2 @"])
    assert code == 2


def test_sd_command(capsys):
    code, body = run(capsys, "sd", '{"angle": "0"}', '{"angle": "1/2", "iota": "2"}')
    assert code == 0
    assert body == {"distance": "1/2+e"}


def test_shell_decide_exit_codes(capsys):
    code, body = run(capsys, "shell-decide", BOUNDING)
    assert code == 0 and body["result"] is True
    code, body = run(capsys, "shell-decide", BLOCKED)
    assert code == 1 and body["result"] is False
    assert body["class"] == "1/2"


def test_certificate_round_trip_via_files(capsys, tmp_path):
    code, body = run(capsys, "shell-decide", BOUNDING)
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(body["certificate"]))
    shell = tmp_path / "shell.json"
    shell.write_text(BOUNDING)
    code, verdict = run(capsys, "chain-verify", f"@{cert}", f"@{shell}")
    assert code == 0 and verdict == {"valid": True}


def test_walk_search_and_verify(capsys):
    code, body = run(capsys, "walk-search", BOUNDING)
    assert code == 0 and body["found"] is True
    walk = body["walk"]
    f01 = walk["terms"][0]["simplex"]["faces"]["0,1"]
    f02 = walk["terms"][-1]["simplex"]["faces"]["0,2"]
    code, verdict = run(capsys, "walk-verify", json.dumps(walk),
                        json.dumps(f01), json.dumps(f02))
    assert code == 0 and verdict["valid"] is True

    code, body = run(capsys, "walk-search", BLOCKED)
    assert code == 1 and body["found"] is False


def test_psi_command(capsys):
    code, body = run(capsys, "psi", "1/3")
    assert code == 0 and body == {"class": "1/3"}
    code, body = run(capsys, "psi", "0", "--iota-shift", "4")
    assert body == {"class": "0"}


def test_m2_command(capsys):
    code, body = run(capsys, "m2-eval", "s_prime_k",
                     '[{"angle":"0"},{"angle":"1/4"},{"angle":"1/2"}]', "--k", "3")
    assert code == 0 and body == {"result": True}


def test_basis_file_flag(capsys, tmp_path):
    basis = tmp_path / "basis.json"
    basis.write_text(json.dumps([
        {"name": "x", "low": "0", "high": "1", "refine": "bisect-sqrt:2"}]))
    code, body = run(capsys, "--basis", str(basis), "star", "x + 1/2")
    assert code == 0
    assert body["values"] == ["1/2 + x"]
    # a deliberately dependent certificate is a configuration error
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([
        {"name": "x", "low": "2/3", "high": "1/3", "refine": "explicit"}]))
    code = main(["--json", "--basis", str(bad), "star", "x"])
    assert code == 3


def test_suite_subset_and_seed_stability(capsys):
    code, body = run(capsys, "--seed", "3", "suite", "--check", "invariants-circle")
    assert code == 0 and body["passed"] is True
    code, body2 = run(capsys, "--seed", "4", "suite", "--check", "invariants-circle")
    assert code == 0 and body2["passed"] is True
    # verdicts agree across seeds; only the sampled instances differ
    assert [c["passed"] for c in body["checks"]] == [c["passed"] for c in body2["checks"]]


def test_suite_default_config_green(capsys):
    code, body = run(capsys, "suite")
    assert code == 0
    assert body["passed"] is True
    assert len(body["checks"]) == 11
    assert all(c["passed"] for c in body["checks"])


def test_suite_dependent_basis_is_configuration_error(tmp_path):
    # a1 declared with an unrefinable certificate spanning rationals: the
    # first comparison that must separate it cannot, which is a configuration
    # problem, not a property failure
    bad = tmp_path / "dependent.json"
    bad.write_text(json.dumps([
        {"name": "a1", "low": "0", "high": "1", "refine": "explicit"},
        {"name": "a2", "low": "0", "high": "1", "refine": "bisect-sqrt:3"}]))
    code = main(["--json", "--basis", str(bad), "suite",
                 "--check", "invariants-circle"])
    assert code == 3
