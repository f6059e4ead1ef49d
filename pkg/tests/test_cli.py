"""CLI surface: subcommands, exit codes, JSON determinism, presets."""

from __future__ import annotations

import json

import pytest

from curvlab.cli import main


@pytest.fixture()
def fixture_dir(tmp_path):
    from curvlab.presets import write_preset
    write_preset("ex1", outdir=str(tmp_path))
    write_preset("hypersurface", outdir=str(tmp_path))
    write_preset("msquare", outdir=str(tmp_path))
    write_preset("modx", outdir=str(tmp_path))
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ring_summary(fixture_dir, capsys):
    code, out, _ = run(capsys, "ring", str(fixture_dir / "r3.toml"))
    assert code == 0
    assert "length = 6" in out and "e = 6" in out and "CI = False" in out


def test_betti_and_resolve(fixture_dir, capsys):
    code, out, _ = run(capsys, "betti", str(fixture_dir / "r1.toml"),
                       "--steps", "8")
    assert code == 0 and "[1, 1, 1, 1, 1, 1, 1, 1, 1]" in out
    code, out, _ = run(capsys, "resolve", str(fixture_dir / "r2.toml"),
                       "--steps", "6")
    assert code == 0 and "syzygy lengths" in out


def test_curv_json(fixture_dir, capsys):
    code, out, _ = run(capsys, "curv", str(fixture_dir / "r2.toml"),
                       "--steps", "8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["betti"] == [2 ** n for n in range(9)]
    assert payload["interval"]["classification"] == "exponential"


def test_tor_ext(fixture_dir, capsys):
    r3 = str(fixture_dir / "r3.toml")
    mod = str(fixture_dir / "mod-a.toml")
    code, out, _ = run(capsys, "tor", r3, "--module", mod,
                       "--module2", mod, "--steps", "6")
    assert code == 0 and "l Tor_i = [3, 3, 3, 3, 3, 3, 3]" in out
    code, out, _ = run(capsys, "ext", str(fixture_dir / "r1.toml"),
                       "--steps", "6")
    assert code == 0 and "l Ext^i" in out


def test_injcurv(fixture_dir, capsys):
    code, out, _ = run(capsys, "injcurv", str(fixture_dir / "r2.toml"),
                       "--steps", "8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["bass"] == [2 ** n for n in range(9)]


def test_audit_first_exit_codes(fixture_dir, capsys):
    r3 = str(fixture_dir / "r3.toml")
    code, out, _ = run(capsys, "audit", "first", r3, "--module",
                       str(fixture_dir / "mod-a.toml"), "--steps", "10")
    assert code == 0 and "verdict: PASS" in out
    # VACUOUS still exits 0
    code, out, _ = run(capsys, "audit", "first", r3, "--module",
                       str(fixture_dir / "mod-bc.toml"), "--steps", "10")
    assert code == 0 and "verdict: VACUOUS" in out
    # complete intersection ring: SetupViolation, exit 1
    code, _, err = run(capsys, "audit", "first", str(fixture_dir / "r1.toml"))
    assert code == 1 and "complete intersection" in err


def test_audit_third(fixture_dir, capsys):
    r3 = str(fixture_dir / "r3.toml")
    code, out, _ = run(capsys, "audit", "third", r3, "--steps", "10")
    assert code == 0 and "verdict: PASS" in out


def test_audit_second_tor(fixture_dir, capsys):
    r3 = str(fixture_dir / "r3.toml")
    mod = str(fixture_dir / "mod-a.toml")
    code, out, _ = run(capsys, "audit", "second-tor", r3,
                       "--module", mod, "--steps", "8", "--window", "3")
    assert code == 0 and "verdict:" in out


def test_audit_modx(fixture_dir, capsys):
    r4 = str(fixture_dir / "r4.toml")
    code, out, _ = run(capsys, "audit", "modx", r4, "--x", "x", "--steps", "8")
    assert code == 0 and "verdict: PASS" in out
    code, _, err = run(capsys, "audit", "modx", r4, "--x", "y")
    assert code == 1 and "regular" in err


def test_audit_invariants(fixture_dir, capsys):
    code, out, _ = run(capsys, "audit", "invariants",
                       str(fixture_dir / "r2.toml"), "--count", "4")
    assert code == 0 and "verdict: PASS" in out


def test_parse_errors_exit_2(fixture_dir, tmp_path, capsys):
    code, _, err = run(capsys, "ring", str(tmp_path / "missing.toml"))
    assert code == 2 and "no such file" in err
    bad = tmp_path / "bad.toml"
    bad.write_text('[ring]\nchar = 101\nvars = ["x"]\nideal = ["x^2"]\n'
                   'extra = 1\n')
    code, _, err = run(capsys, "ring", str(bad))
    assert code == 2 and "unknown ring keys" in err
    # steps below window + 2
    code, _, err = run(capsys, "curv", str(fixture_dir / "r1.toml"),
                       "--steps", "3", "--window", "4")
    assert code == 2 and "window" in err


def test_usage_error_exit_2(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_budget_exit_3(fixture_dir, capsys):
    code, _, err = run(capsys, "betti", str(fixture_dir / "r2.toml"),
                       "--steps", "12", "--budget", "50")
    assert code == 3 and "budget" in err.lower()


def test_json_determinism(fixture_dir, capsys):
    argv = ["audit", "first", str(fixture_dir / "r3.toml"),
            "--module", str(fixture_dir / "mod-a.toml"),
            "--steps", "8", "--window", "3", "--json"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == 1 and payload["verdict"] in ("PASS", "VACUOUS")


def test_preset_writes_files(tmp_path, capsys):
    code, out, _ = run(capsys, "preset", "ex1", "--out", str(tmp_path))
    assert code == 0
    for name in ("r3.toml", "mod-a.toml", "mod-bc.toml"):
        assert (tmp_path / name).exists()
        assert str(tmp_path / name) in out
    # the written ring round-trips through the loader
    from curvlab import load_ring
    a = load_ring(str(tmp_path / "r3.toml"))
    assert a.length == 6 and not a.is_ci


def test_preset_modx_hint(tmp_path, capsys):
    code, out, _ = run(capsys, "preset", "modx", "--out", str(tmp_path))
    assert code == 0 and "suggested linear form: x" in out


def test_version(capsys):
    code = main(["--version"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("curvlab ")
