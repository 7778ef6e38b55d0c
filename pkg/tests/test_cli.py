import json

from resform import cli, corpus


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_milnor_command(capsys):
    code, payload = run_json(capsys, "milnor", "--p", "7",
                             "--vars", "x", "--poly", "x^3")
    assert code == 0
    assert payload["mu"] == 2
    assert payload["basis"] == [[0], [1]]
    assert payload["input"] == "x^3"


def test_gram_char2_goes_through_witt_lift(capsys):
    code, payload = run_json(capsys, "gram", "--p", "2",
                             "--vars", "u", "--poly", "u^2+u^3")
    assert code == 0
    assert payload["mu"] == 2
    assert payload["gram"][0][1] == payload["gram"][1][0]


def test_disc_command(capsys):
    code, payload = run_json(capsys, "disc", "--p", "7",
                             "--vars", "x", "--poly", "x^3")
    assert code == 0
    assert payload["mu"] == 2
    assert payload["class"]["legendre"] == -1


def test_arf_command_and_lift_flag(capsys):
    code, payload = run_json(capsys, "arf", "--p", "2",
                             "--vars", "x,y", "--poly", "x^2+x*y+y^2")
    assert code == 0
    assert payload["arf"]["trace_bit"] == 1
    code, moved = run_json(capsys, "arf", "--p", "2",
                           "--vars", "x,y", "--poly", "x^2+x*y+y^2",
                           "--lift-perturbation", "x*y+1")
    assert code == 0
    assert moved["arf"]["trace_bit"] == 1
    code, payload = run_json(capsys, "arf", "--p", "2", "--m", "2",
                             "--vars", "x,y", "--poly", "x^2+x*y+y^2")
    assert code == 0
    assert payload["arf"]["trace_bit"] == 0


def test_epsilon_command(capsys):
    code, payload = run_json(capsys, "epsilon", "--p", "3",
                             "--vars", "x,y", "--poly", "x^2+y^2")
    assert code == 0
    assert payload["epsilon"] == {
        "sign": -1, "tau_exp": 0, "q_exp": "-1", "witness": None,
    }
    assert payload["dimtot"] == -1


def test_verify_pass_and_exit_zero(capsys):
    code, payload = run_json(capsys, "verify", "--p", "3",
                             "--vars", "x,y", "--poly", "x^2+y^2")
    assert code == 0
    assert payload["verdict"] == "PASS"
    assert payload["psi_twists_checked"] == 2
    assert payload["input"] == "x^2 + y^2"  # rendered with the user's names


def test_verify_literal_convention_fails(capsys):
    code, payload = run_json(capsys, "verify", "--p", "5",
                             "--vars", "t", "--poly", "t^2",
                             "--convention", "literal")
    assert code == 1
    assert payload["verdict"] == "FAIL"


def test_verify_geometric_only_still_exits_zero(capsys):
    code, payload = run_json(capsys, "verify", "--p", "7",
                             "--vars", "x,y", "--poly", "x^3+y^3")
    assert code == 0
    assert payload["verdict"] == "GEOMETRIC_ONLY"
    assert payload["arithmetic"] is None


def test_fermat_command(capsys):
    code, payload = run_json(capsys, "fermat", "--d", "3", "--n", "0", "--a", "1,1")
    assert code == 0
    assert payload == {"d": 3, "n": 0, "mu": 4, "disc_d": 27, "disc_B_value": 6561}


def test_homog2_default_variables(capsys):
    code, payload = run_json(capsys, "homog2", "--p", "2",
                             "--poly", "T0^3+T0*T1^2+T1^3")
    assert code == 0
    assert payload["verdict"] == "PASS"
    assert payload["frobenius_sign"] == 1


def test_homog2_rejects_inhomogeneous(capsys):
    code, payload = run_json(capsys, "homog2", "--p", "2",
                             "--poly", "T0^3+T1^2")
    assert code == 2
    assert payload["error"] == "PolySyntaxError"


def test_error_records(capsys):
    cases = [
        (("milnor", "--p", "6", "--vars", "x", "--poly", "x^2"),
         "UnsupportedPrime"),
        (("arf", "--p", "3", "--vars", "x", "--poly", "x^2"),
         "OddCharacteristic"),
        (("milnor", "--p", "7", "--vars", "x", "--poly", "x^2+y^2"),
         "UnknownVariable"),
        (("milnor", "--p", "7", "--vars", "x"), "PolySyntaxError"),
        (("homog2", "--p", "3", "--poly", "T0^3+T1^3"), "OddCharacteristic"),
        (("homog2", "--p", "2", "--poly", "T0^3"), "SingularForm"),
    ]
    for argv, err in cases:
        code, payload = run_json(capsys, *argv)
        assert code == 2, argv
        assert payload["error"] == err
        assert payload["message"]


def test_plain_output_is_flat_key_values(capsys):
    code, out = run(capsys, "fermat", "--d", "3", "--n", "0", "--a", "1,1")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["mu"] == "4"
    assert lines["disc_d"] == "27"


def test_corpus_command_smoke(capsys, monkeypatch):
    monkeypatch.setattr(corpus, "EXAMPLES",
                        [("tiny", lambda: "ok")])
    monkeypatch.setattr(corpus, "ACCEPTANCE",
                        [("A0", lambda seed: f"seed {seed}")])
    code, payload = run_json(capsys, "corpus", "--seed", "7")
    assert code == 0
    assert payload["ok"] is True
    names = [r["name"] for r in payload["results"]]
    assert names == ["example:tiny", "A0"]
    assert payload["results"][1]["detail"] == "seed 7"


def test_corpus_command_reports_failures(capsys, monkeypatch):
    def boom():
        raise RuntimeError("deliberate")

    monkeypatch.setattr(corpus, "EXAMPLES", [("boom", boom)])
    monkeypatch.setattr(corpus, "ACCEPTANCE", [])
    code, out = run(capsys, "corpus")
    assert code == 1
    assert "FAIL" in out
    assert "RuntimeError: deliberate" in out
    assert out.strip().splitlines()[-1].startswith("overall: FAIL")
