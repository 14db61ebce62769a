import json
import subprocess
import sys

import pytest

from schubert_real.cli import PINNED_RNC_SEED, main, solve_rnc_with_retries
from schubert_real.errors import RetryBudgetExhausted


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, expected", [
    (("syt", "2,2"), "2"),
    (("degree-rnc", "3"), "162"),
    (("degree-lines", "4"), "5"),
    (("pieri", "1", "1", "3"), "s(1,1) + s(2)"),
])
def test_simple_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    code, _, err = run(capsys, "syt", "1,2")
    assert code == 2 and "error" in err


def test_witness_and_verify(tmp_path, capsys):
    cert, inst = tmp_path / "cert.json", tmp_path / "inst.json"
    code, _, err = run(capsys, "witness-rnc", "--n", "3", "--out", str(cert),
                       "--instance-out", str(inst))
    assert code == 0 and "162 real" in err
    assert run(capsys, "verify", str(cert))[0] == 0

    code, out, _ = run(capsys, "solve-four-lines", str(inst), "--select", "2,1,0,2")
    res = json.loads(out)
    assert res["status"] == "TwoDistinct" and res["selection"] == [2, 1, 0, 2]
    assert len(res["solutions"]) == 2

    data = json.loads(cert.read_text())
    data["solutions"][0]["disc"] *= -1
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 1 and "reality flag" in out


def test_witness_deterministic_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "witness-rnc", "--seed", str(PINNED_RNC_SEED), "--out", str(a))
    run(capsys, "witness-rnc", "--seed", str(PINNED_RNC_SEED), "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_bezout_command(tmp_path, capsys):
    cert = tmp_path / "b.json"
    code, _, _ = run(capsys, "bezout", "--b", "2", "--d1", "3", "--d2", "4", "--seed", "5",
                     "--out", str(cert))
    assert code == 0
    assert len(json.loads(cert.read_text())["solutions"]) == 12
    assert run(capsys, "verify", str(cert))[0] == 0


def test_retry_budget_exhausted(capsys):
    # zero retries and a real-only requirement on a seed that is not fully real
    with pytest.raises(RetryBudgetExhausted):
        solve_rnc_with_retries(3, 0, 0, require_real=True)
    code, _, err = run(capsys, "witness-rnc", "--seed", "0", "--retries", "0", "--require-real")
    assert code == 3 and "error" in err


def test_require_real_finds_pinned_seed():
    result, master, used = solve_rnc_with_retries(3, PINNED_RNC_SEED - 2, 5, require_real=True)
    assert master == PINNED_RNC_SEED and used == 2
    assert result.real_count == 162


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schubert_real", "degree-rnc", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "4"
