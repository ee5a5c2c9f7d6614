import json
import subprocess
import sys

import pytest

from tracegeo import cli
from tracegeo.errors import ParseError


def run_json(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


# -- group-spec parsing --------------------------------------------------------


def test_parse_simple():
    spec = cli.parse_group_spec("A2")
    assert [str(t) for t in spec.factors] == ["A2"]
    assert spec.torus_rank == 0
    assert spec.restriction_degree == 1
    assert spec.relative_path is None
    assert spec.render() == "A2"


def test_parse_product_and_torus():
    spec = cli.parse_group_spec("D3xA1+T2")
    assert [str(t) for t in spec.factors] == ["D3", "A1"]
    assert spec.torus_rank == 2
    assert spec.render() == "D3xA1+T2"


def test_parse_suffixes_any_order():
    a = cli.parse_group_spec("A1@res=3@relative=x.json")
    b = cli.parse_group_spec("A1@relative=x.json@res=3")
    assert a == b
    assert a.restriction_degree == 3
    assert a.relative_path == "x.json"
    assert a.render() == "A1@res=3@relative=x.json"


def test_parse_round_trip():
    for text in ("A2", "B3xA1", "A1xA1+T1", "D3xA1+T2", "A1@res=3",
                 "C4+T1@res=2", "A2@relative=d.json"):
        spec = cli.parse_group_spec(text)
        assert cli.parse_group_spec(spec.render()) == spec


def test_parse_drops_unit_degree():
    assert cli.parse_group_spec("A2@res=1").render() == "A2"


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as info:
        cli.parse_group_spec("A2xZ9")
    assert "byte offset 3" in str(info.value)
    with pytest.raises(ParseError) as info:
        cli.parse_group_spec("A2+U1")
    assert "byte offset 3" in str(info.value)
    with pytest.raises(ParseError) as info:
        cli.parse_group_spec("A2@res=x")
    assert "byte offset 7" in str(info.value)
    for bad in ("", "xA1", "A2@res=2@res=3", "A2@frob=1", "A2@relative="):
        with pytest.raises(ParseError):
            cli.parse_group_spec(bad)


# -- subcommands through main() ------------------------------------------------


def test_k_json_envelope(capsys):
    code, data = run_json(capsys, ["k", "A2", "--json"])
    assert code == 0
    assert data["schema"] == "1"
    assert data["command"] == "k"
    assert data["result"] == {"spec": "A2", "minorbit": 2, "pairs": 2,
                              "richardson_absolute": 2,
                              "richardson_relative": None,
                              "agreement": True}


def test_k_single_method(capsys):
    code, data = run_json(capsys, ["k", "A3", "--method", "pairs", "--json"])
    assert code == 0
    assert data["result"] == {"spec": "A3", "method": "pairs", "value": 3}


def test_k_degree_flag_overrides_suffix(capsys):
    code, data = run_json(capsys, ["k", "A1@res=2", "--degree", "3",
                                   "--method", "minorbit", "--json"])
    assert code == 0
    assert data["result"]["value"] == 3


def test_k_relative_file(tmp_path, capsys):
    path = tmp_path / "so31.json"
    path.write_text(json.dumps({"simple_roots": [[1]],
                                "nilradical_dims": [2]}))
    code, data = run_json(capsys, ["k", f"D2@relative={path}", "--json"])
    assert code == 0
    assert data["result"]["richardson_relative"] == 2
    assert data["result"]["agreement"] is False
    # the flag route reaches the same datum
    code, data = run_json(capsys, ["k", "D2", "--relative", str(path),
                                   "--json"])
    assert data["result"]["richardson_relative"] == 2


def test_orbits_json(capsys):
    code, data = run_json(capsys, ["orbits", "C2", "--json"])
    assert code == 0
    assert data["result"] == [
        {"label": "(1,1,1,1)", "dim": 0, "flags": []},
        {"label": "(2,1,1)", "dim": 4, "flags": []},
        {"label": "(2,2)", "dim": 6, "flags": []},
        {"label": "(4)", "dim": 8, "flags": []},
    ]


def test_orbits_very_even_flag(capsys):
    code, data = run_json(capsys, ["orbits", "D4", "--json"])
    flagged = [r["label"] for r in data["result"] if r["flags"]]
    assert flagged == ["(2,2,2,2)*", "(4,4)*"]


def test_orbits_gl(capsys):
    code, data = run_json(capsys, ["orbits", "gl3", "--json"])
    assert [r["dim"] for r in data["result"]] == [0, 4, 6]


def test_parabolics_json(capsys):
    code, data = run_json(capsys, ["parabolics", "A2", "--json"])
    assert code == 0
    rows = data["result"]
    assert len(rows) == 13
    full = [r for r in rows if r["dim_V"] == 0]
    assert len(full) == 1 and full[0]["a_M_dim"] == 0
    borels = [r for r in rows if len(r["levi"]) == 0]
    assert len(borels) == 6
    assert all(r["a_M_dim"] == 2 for r in borels)


def test_discriminant_json(capsys):
    code, data = run_json(capsys, [
        "discriminant", "--matrix", '[["2/1", "0"], ["0", "3"]]',
        "--primes", "5", "--json"])
    assert code == 0
    assert data["result"] == {
        "value": "-1/6", "abs_inf": "1/6",
        "p_valuations": {"2": -1, "3": -1, "5": 0},
        "centralizer_dim": 2,
    }


def test_discriminant_rejects_floats(capsys):
    code = cli.main(["discriminant", "--matrix", "[[0.5, 0], [0, 2]]"])
    capsys.readouterr()
    assert code == 2


def test_index_json(capsys):
    code, data = run_json(capsys, ["index", "--group", "sl", "--n", "3",
                                   "--level", "2", "--json"])
    assert code == 0
    assert data["result"]["index"] == 168


def test_levels_json(capsys):
    code, data = run_json(capsys, ["levels", "check-prime-fixed", "2,4,6",
                                   "--json"])
    assert code == 0
    assert data["result"]["ok"] is False
    assert data["result"]["offenders"] == [{"level": 6, "extra": [3]}]
    code, data = run_json(capsys, ["levels", "check-prime-fixed", "6,12",
                                   "--allowed", "2,3", "--json"])
    assert data["result"]["ok"] is True


def test_mellin_preset_exp(capsys):
    code, data = run_json(capsys, ["mellin-fp", "--preset", "exp",
                                   "--lambda", "2", "--json"])
    assert code == 0
    import math
    assert abs(float(data["result"]["finite_part"]) + math.log(2)) < 1e-8


def test_mellin_preset_sqrt(capsys):
    code, data = run_json(capsys, ["mellin-fp", "--preset", "sqrt", "--json"])
    import math
    assert abs(float(data["result"]["finite_part"])
               + 2 * math.sqrt(math.pi)) < 1e-7


def test_mellin_spec_samples(capsys):
    import math
    ts = [round(0.05 * i, 10) for i in range(1, 601)]
    coeffs = ["1", "-2", "2", "-4/3", "2/3", "-4/15", "4/45", "-8/315",
              "2/315"]
    spec = {
        "t0": 1.0,
        "decay": {"C": 1.1, "lambda": 2.0},
        "terms": [[i, c] for i, c in enumerate(coeffs)],
        "samples": [[t, math.exp(-2.0 * t)] for t in ts],
    }
    # sampled data cannot support the default quadrature tolerance
    code, data = run_json(capsys, ["mellin-fp", "--spec", json.dumps(spec),
                                   "--tol", "1e-6", "--json"])
    assert code == 0
    assert abs(float(data["result"]["finite_part"]) + math.log(2)) < 1e-3


def test_mellin_spec_preset_route(capsys):
    code, data = run_json(capsys, [
        "mellin-fp", "--spec", '{"preset": "exp", "lambda": 3.0}', "--json"])
    import math
    assert abs(float(data["result"]["finite_part"]) + math.log(3)) < 1e-8


def test_mellin_requires_exactly_one_source(capsys):
    assert cli.main(["mellin-fp"]) == 2
    capsys.readouterr()
    assert cli.main(["mellin-fp", "--preset", "exp", "--lambda", "1",
                     "--spec", "{}"]) == 2
    capsys.readouterr()


def test_mellin_lying_decay_exits_4(capsys):
    import math
    ts = [round(0.05 * i, 10) for i in range(1, 601)]
    spec = {
        "decay": {"C": 0.0001, "lambda": 5.0},
        "terms": [[0, 1.0]],
        "samples": [[t, math.exp(-t)] for t in ts],
    }
    code = cli.main(["mellin-fp", "--spec", json.dumps(spec)])
    capsys.readouterr()
    assert code == 4


def test_budget_json(capsys):
    code, data = run_json(capsys, ["budget", "--k", "1", "--json"])
    assert code == 0
    result = data["result"]
    assert result["beta"] == "0.618033988749895"
    assert result["exponents"]["e_spec"] == "-1/1"
    assert result["exponents"]["e1"] == "-1/1"
    assert result["exponents"]["e2"] == "-10/9"
    assert result["all_ok"] is True
    assert result["a_exponent"] == 0


def test_budget_rational_inputs(capsys):
    code, data = run_json(capsys, ["budget", "--k", "1", "--C2", "2",
                                   "--eps", "1/2", "--json"])
    assert code == 0
    assert data["result"]["beta"] == "1/2"
    assert data["result"]["lambda"] == "4/1"


def test_exit_codes(capsys):
    assert cli.main(["k", "Z9"]) == 2
    capsys.readouterr()
    assert cli.main(["parabolics", "E8"]) == 3
    capsys.readouterr()
    assert cli.main(["orbits", "G2"]) == 2
    capsys.readouterr()
    assert cli.main(["reproduce", "--inject-fault", "no_such_check"]) == 2
    capsys.readouterr()


def test_thread_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("TRACEGEO_THREADS", "zero")
    assert cli.main(["k", "A1"]) == 2
    capsys.readouterr()
    monkeypatch.setenv("TRACEGEO_THREADS", "4")
    assert cli.main(["k", "A1"]) == 0
    capsys.readouterr()


def test_missing_argument_is_parse_error(capsys):
    assert cli.main(["k"]) == 2
    capsys.readouterr()
    assert cli.main(["no-such-command"]) == 2
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tracegeo", "k", "A2",
                           "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["result"]["pairs"] == 2


def test_console_script():
    proc = subprocess.run(["tracegeo", "index", "--n", "2", "--level", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "48" in proc.stdout


def test_fault_injection_fails_and_names_the_check(capsys):
    code = cli.main(["reproduce", "--inject-fault", "k_sl4", "--json"])
    out = capsys.readouterr().out
    assert code == 1
    data = json.loads(out)
    assert data["result"]["all_ok"] is False
    failing = [c["name"] for c in data["result"]["checks"] if not c["ok"]]
    assert failing == ["k_special_linear"]
