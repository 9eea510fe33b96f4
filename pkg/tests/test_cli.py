"""End-to-end CLI tests, driven in-process through ``elliptica.cli.main``."""

import json

import mpmath
import pytest

from elliptica import (
    catalog_ids,
    delta,
    make_context,
    preset_an_orbifold,
    preset_an_resolution,
    save_model,
    theta,
)
from elliptica.cli import format_complex, main, parse_complex

TAU = "0.3125+1.125i"


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1.5", (1.5, 0.0)),
        ("-2i", (0.0, -2.0)),
        ("0.1-0.2i", (0.1, -0.2)),
        ("i", (0.0, 1.0)),
        ("-i", (0.0, -1.0)),
        ("+i", (0.0, 1.0)),
        ("2I", (0.0, 2.0)),
        ("1e-3i", (0.0, 1e-3)),
        ("1e-3+2.5e-4i", (1e-3, 2.5e-4)),
        (" 0.25 + 0.5 i ", (0.25, 0.5)),
    ],
)
def test_parse_complex(text, expected):
    value = parse_complex(text)
    assert float(value.real) == expected[0]
    assert float(value.imag) == expected[1]


@pytest.mark.parametrize("bad", ["abc", "", "1.2.3i", "i5", "1+2j"])
def test_parse_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


def test_format_complex_round_trips():
    value = mpmath.mpc("1.25", "-0.5")
    text = format_complex(value, 20)
    again = parse_complex(text)
    assert again == value


def test_no_command_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    ids = [line.split()[0] for line in lines]
    assert ids == list(catalog_ids())
    assert len(lines) == 43


def test_verify_pass_and_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(
        [
            "verify",
            "fay.n2",
            "trisecant.additive",
            "--samples",
            "3",
            "--seed",
            "17",
            "--json",
            str(out),
        ]
    )
    stdout = capsys.readouterr().out
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == 2
    assert all(line.startswith("PASS") for line in lines)
    assert "fay.n2" in lines[0]
    data = json.loads(out.read_text())
    assert [entry["identity"] for entry in data] == ["fay.n2", "trisecant.additive"]
    assert all(entry["pass"] for entry in data)
    assert all(entry["seed"] == 17 for entry in data)


def test_verify_failure_exit_code(capsys):
    # an unreachable tolerance forces FAIL lines and exit status 1
    code = main(["verify", "theta.quasiperiod", "--samples", "2", "--tol", "1e-80"])
    stdout = capsys.readouterr().out
    assert code == 1
    assert stdout.startswith("FAIL")


def test_verify_unknown_identity(capsys):
    code = main(["verify", "no.such.identity", "--samples", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error:" in captured.err
    assert "no.such.identity" in captured.err


def test_verify_parallel_matches_serial_output(tmp_path):
    args = ["verify", "an.mckay.n1", "--samples", "4", "--seed", "23"]
    out1 = tmp_path / "serial.json"
    out2 = tmp_path / "parallel.json"
    assert main(args + ["--json", str(out1)]) == 0
    assert main(args + ["--jobs", "2", "--json", str(out2)]) == 0
    serial = json.loads(out1.read_text())[0]
    parallel = json.loads(out2.read_text())[0]
    serial.pop("elapsed_ms")
    parallel.pop("elapsed_ms")
    assert serial == parallel


def test_eval_theta_matches_library(capsys):
    code = main(["eval", "theta", "--tau", TAU, "--args", "0.21875-0.125i", "--digits", "30"])
    printed = capsys.readouterr().out.strip()
    assert code == 0
    with mpmath.mp.workdps(40):  # re-parse above the printed precision
        ctx = make_context(parse_complex(TAU), digits=30)
        expected = theta(ctx, parse_complex("0.21875-0.125i"))
        assert abs(parse_complex(printed) - expected) < mpmath.mpf("1e-25")


def test_eval_delta_with_comma_packed_args(capsys):
    code = main(["eval", "delta", "--tau", TAU, "--args=-0.17+0.05i,0.3", "--digits", "25"])
    printed = capsys.readouterr().out.strip()
    assert code == 0
    with mpmath.mp.workdps(40):
        ctx = make_context(parse_complex(TAU), digits=25)
        expected = delta(ctx, parse_complex("-0.17+0.05i"), mpmath.mpf("0.3"))
        assert abs(parse_complex(printed) - expected) < mpmath.mpf("1e-20")


def test_eval_arity_error(capsys):
    code = main(["eval", "delta", "--tau", TAU, "--args", "0.25"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error:" in captured.err
    assert "delta" in captured.err


def test_class_on_saved_models(tmp_path, capsys):
    res_path = tmp_path / "res.json"
    orb_path = tmp_path / "orb.json"
    save_model(preset_an_resolution(3), res_path)
    save_model(preset_an_orbifold(3), orb_path)
    base = ["--tau", TAU, "--t", "0.21+0.02i,0.13+0.04i", "--z=-0.3+0.1i", "--digits", "25"]
    assert main(["class", "resolution", "--model", str(res_path)] + base) == 0
    left = capsys.readouterr().out.strip()
    assert main(["class", "orbifold", "--model", str(orb_path)] + base) == 0
    right = capsys.readouterr().out.strip()
    # the two halves of the McKay correspondence agree through the CLI too
    assert abs(parse_complex(left) - parse_complex(right)) < mpmath.mpf("1e-18")


def test_class_kind_mismatch(tmp_path, capsys):
    path = tmp_path / "res.json"
    save_model(preset_an_resolution(2), path)
    code = main(
        ["class", "orbifold", "--model", str(path), "--tau", TAU, "--t", "0.2,0.3", "--z", "0.1"]
    )
    captured = capsys.readouterr()
    assert code == 2
    assert "resolution" in captured.err and "orbifold" in captured.err


def test_class_wrong_rank(tmp_path, capsys):
    path = tmp_path / "res.json"
    save_model(preset_an_resolution(2), path)
    code = main(
        ["class", "resolution", "--model", str(path), "--tau", TAU, "--t", "0.2", "--z", "0.1"]
    )
    captured = capsys.readouterr()
    assert code == 2
    assert "rank" in captured.err


def test_shipped_example_models(capsys):
    from importlib.resources import files

    data = files("elliptica") / "data"
    base = ["--tau", TAU, "--t", "0.21+0.02i,0.13+0.04i", "--z=-0.3+0.1i"]
    code = main(
        ["class", "resolution", "--model", str(data / "a2_resolution.json")] + base
    )
    assert code == 0
    left = capsys.readouterr().out.strip()
    code = main(["class", "orbifold", "--model", str(data / "a2_orbifold.json")] + base)
    assert code == 0
    right = capsys.readouterr().out.strip()
    assert abs(parse_complex(left) - parse_complex(right)) < mpmath.mpf("1e-18")


def test_verify_custom_cli(tmp_path, capsys):
    res_path = tmp_path / "res.json"
    orb_path = tmp_path / "orb.json"
    save_model(preset_an_resolution(2), res_path)
    save_model(preset_an_orbifold(2), orb_path)
    code = main(
        [
            "verify-custom",
            "--lhs-model",
            str(res_path),
            "--rhs-model",
            str(orb_path),
            "--samples",
            "3",
            "--seed",
            "9",
        ]
    )
    stdout = capsys.readouterr().out
    assert code == 0
    assert stdout.startswith("PASS custom.mckay")


def test_digits_env_and_flag(tmp_path, capsys, monkeypatch):
    # the env var steers precision ...
    monkeypatch.setenv("ELLIPTICA_DIGITS", "20")
    out = tmp_path / "r.json"
    assert main(["verify", "limit.trig", "--samples", "1", "--json", str(out)]) == 0
    capsys.readouterr()
    assert json.loads(out.read_text())[0]["digits"] == 20
    # ... and an explicit flag beats it
    assert main(
        ["verify", "limit.trig", "--samples", "1", "--digits", "45", "--json", str(out)]
    ) == 0
    capsys.readouterr()
    assert json.loads(out.read_text())[0]["digits"] == 45


def test_digits_below_minimum_rejected(capsys, monkeypatch):
    monkeypatch.setenv("ELLIPTICA_DIGITS", "10")
    code = main(["verify", "limit.trig", "--samples", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "working_digits" in captured.err
