import json
import subprocess
import sys

import pytest

from invforge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- golden outputs -----------------------------------------------------------


def test_transvect_golden(capsys):
    code, out, err = run_cli(capsys, "transvect", "--a", "x0^2", "--b", "x1^2", "--k", "1")
    assert code == 0
    assert out == '{"result":"x0*x1"}\n'
    assert err == ""


def test_alpha_rank_golden(capsys):
    code, out, _ = run_cli(capsys, "alpha-rank", "--n", "1", "--d", "4", "--r", "2")
    assert code == 0
    assert out == '{"rows":15,"cols":15,"rank":15}\n'


def test_membership_golden(capsys):
    code, out, _ = run_cli(capsys, "membership", "--d", "4", "--f", "x0^4 + x1^4")
    assert code == 0
    assert out == '{"member":false,"witness":"U(1,1)"}\n'


def test_membership_accepts(capsys):
    code, out, _ = run_cli(
        capsys, "membership", "--d", "4", "--f", "x0^4 + 2*x0^2*x1^2 + x1^4"
    )
    assert code == 0
    assert out == '{"member":true,"witness":null}\n'


def test_pi_p_constant(capsys):
    code, out, _ = run_cli(
        capsys, "pi-p", "--g", "x0^2*y1^2 - 2*x0*x1*y0*y1 + x1^2*y0^2", "--p", "1"
    )
    assert code == 0
    assert out == '{"result":"12","degree":0}\n'


def test_covariant_golden(capsys):
    code, out, _ = run_cli(
        capsys, "covariant", "--d", "4", "--i", "1", "--j", "1", "--f", "x0^3*x1"
    )
    assert code == 0
    assert out == '{"result":"-1/32*x0^6"}\n'


def test_tau_golden(capsys):
    code, out, _ = run_cli(capsys, "tau", "--r", "2", "--e", "1", "--p", "1")
    assert code == 0
    assert out == '{"result":"-z1^2 + 2*z1*z2 - z2^2"}\n'


def test_scalar_commands(capsys):
    for argv, want in [
        (("n2", "--p", "4", "--q", "4", "--m", "1"), '{"value":"1/14"}\n'),
        (("n3", "--r", "2", "--e", "1", "--pprime", "0", "--p", "0"), '{"value":"1"}\n'),
        (("w", "--p", "2", "--q", "2", "--m", "1"), '{"value":"-3/4"}\n'),
        (("w", "--p", "2", "--q", "2", "--k", "2"), '{"value":"-3/4"}\n'),
        (("f32", "--a", "-2", "--b", "-2", "--c", "-2", "--d", "1", "--e", "1"),
         '{"value":"-6"}\n'),
        (("dixon", "--a", "-2", "--b", "-2", "--c", "-2"), '{"value":"-6"}\n'),
        (("m0", "--n", "1", "--e", "1"), '{"value":2,"excluded":true}\n'),
    ]:
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0, argv
        assert out == want, argv


def test_j_reports_agreement(capsys):
    code, out, _ = run_cli(capsys, "j", "--s", "4", "--p", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"sum": "17160", "closed": "17160", "equal": True}


def test_tau_check_and_g_check(capsys):
    code, out, _ = run_cli(capsys, "tau-check", "--r", "2", "--e", "1", "--p", "1")
    assert code == 0
    assert out == '{"ok":true}\n'
    code, out, _ = run_cli(
        capsys, "g-check", "--r", "2", "--e", "1", "--p", "0", "--pprime", "0"
    )
    assert code == 0
    assert out == '{"ok":true,"n3":"1"}\n'


def test_plethysm_weight_lists(capsys):
    code, out, _ = run_cli(capsys, "plethysm", "--r", "2", "--d", "4")
    assert code == 0
    assert out == '{"weights":[[8,1],[4,1],[0,1]]}\n'
    code, out, _ = run_cli(capsys, "ideal-char", "--r", "3", "--d", "4")
    assert code == 0
    assert out == '{"weights":[[6,1]]}\n'


def test_n1_styles_agree(capsys):
    _, brute, _ = run_cli(capsys, "n1", "--e", "3", "--p", "2", "--brute")
    _, closed, _ = run_cli(capsys, "n1", "--e", "3", "--p", "2", "--closed")
    _, default, _ = run_cli(capsys, "n1", "--e", "3", "--p", "2")
    assert brute == closed == default


def test_deterministic_output(capsys):
    first = run_cli(capsys, "membership", "--d", "4", "--f", "x0^4 + x1^4")
    second = run_cli(capsys, "membership", "--d", "4", "--f", "x0^4 + x1^4")
    assert first == second


# -- failure paths ------------------------------------------------------------


def test_domain_error_exits_1(capsys):
    code, out, err = run_cli(capsys, "transvect", "--a", "x0^2", "--b", "x1^2", "--k", "-1")
    assert code == 1
    assert out == ""
    assert "error" in json.loads(err)


def test_parse_error_exits_1(capsys):
    code, out, err = run_cli(capsys, "transvect", "--a", "x0^", "--b", "x1", "--k", "0")
    assert code == 1
    assert "error" in json.loads(err)


def test_degree_mismatch_exits_1(capsys):
    code, _, err = run_cli(capsys, "covariant", "--d", "4", "--i", "0", "--j", "1", "--f", "x0^3")
    assert code == 1
    assert "error" in json.loads(err)


def test_w_needs_exactly_one_style(capsys):
    code, _, err = run_cli(capsys, "w", "--p", "2", "--q", "2")
    assert code == 1
    code, _, err = run_cli(capsys, "w", "--p", "2", "--q", "2", "--k", "1", "--m", "1")
    assert code == 1


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["transvect", "--a", "x0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_size_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("INVFORGE_SIZE_CAP", "10")
    code, out, err = run_cli(capsys, "alpha-rank", "--n", "1", "--d", "4", "--r", "2")
    assert code == 1
    assert "INVFORGE_SIZE_CAP" in json.loads(err)["error"]


# -- whole-program paths ------------------------------------------------------


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invforge.cli", "n2", "--p", "4", "--q", "4", "--m", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"value":"1/14"}\n'


def test_verify_all_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--level", "desk")
    assert code == 0
    payload = json.loads(out)
    assert payload["level"] == "desk"
    assert payload["all_passed"] is True
    assert len(payload["results"]) == 9
    assert all(r["passed"] for r in payload["results"])
