import json
import subprocess
import sys

import pytest

from atomsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_atom(capsys):
    assert run(capsys, "atom", "60", "3") == (0, "leader=3 size=8: 3 9 21 27 33 39 51 57\n", "")
    assert run(capsys, "atom", "60", "0")[1] == "leader=60(zero) size=1: 0\n"
    code, _, err = run(capsys, "atom", "7", "13")
    assert code == 2 and "residue out of range" in err


def test_atoms_and_ideal(capsys):
    code, out, _ = run(capsys, "atoms", "6")
    assert out.splitlines() == ["leader=1 size=2: 1 5", "leader=2 size=2: 2 4", "leader=3 size=1: 3",
                                "leader=6(zero) size=1: 0"]
    assert run(capsys, "ideal", "60", "9")[1] == "leader=3 order=20\n"


def test_count(capsys):
    code, out, _ = run(capsys, "count", "60", "3", "10", "13")
    assert code == 0
    assert "count=1" in out and "g=1 n'=60 a'=3 b'=10 c'=13" in out
    out = run(capsys, "count", "60", "6", "10", "3")[1]
    assert "count=0" in out and "reason: g ∤ c" in out
    out = run(capsys, "count", "8", "1", "1", "3")[1]
    assert "count=0" in out and "parity: n' even, a'b'c' odd" in out
    code, _, err = run(capsys, "count", "60", "7", "10", "3")
    assert code == 2 and "divisor" in err


def test_member_profile_locate(capsys):
    assert run(capsys, "member", "8", "1", "1", "4")[1] == "true\n"
    assert run(capsys, "member", "60", "3", "10", "14")[1] == "false\n"
    assert run(capsys, "locate", "60", "3", "3", "6")[1] == "6\n"
    assert run(capsys, "locate", "60", "3", "10", "14")[1] == "absent\n"
    data = json.loads(run(capsys, "--format", "json", "profile", "60", "3", "10")[1])
    assert data["counts"]["1"] == 1 and sum(data["counts"].values()) == 1


def test_sumset(capsys):
    out = run(capsys, "sumset", "60", "3", "3")[1]
    assert "case=B" in out and out.splitlines()[-1] == "leaders: 6 12 30 60(zero)"
    out = run(capsys, "sumset", "60", "3", "10")[1]
    assert "case=A" in out and out.splitlines()[-1] == "leaders: 1"
    assert run(capsys, "sumset", "1", "1", "1")[1].splitlines()[-1] == "leaders: 1(zero)"


def test_icg_levels_text(capsys):
    out = run(capsys, "icg", "60", "-d", "3,10", "levels")[1].splitlines()
    assert out[0] == "level 0: 60(zero)"
    assert out[1].startswith("level 1: 3 10 |")
    assert out[2] == "level 2: 1 6 12 20 30 | multiplicities: 1x1 6x1 12x1 20x1 30x1 60(zero)x2"


def test_icg_levels_json(capsys):
    data = json.loads(run(capsys, "icg", "60", "-d", "3,10", "levels", "--format", "json")[1])
    assert data["n"] == 60 and data["D"] == [3, 10]
    assert data["levels"][2]["leaders"] == [1, 6, 12, 20, 30]
    assert data["levels"][2]["multiplicities"]["60"] == 2
    assert data["unreachable"] == []


def test_icg_power_and_disconnected(capsys):
    out = run(capsys, "icg", "60", "-d", "3,10", "power", "2")[1]
    assert "level-exact: {1,6,12,20,30}" in out
    out = run(capsys, "icg", "6", "-d", "2", "levels")[1]
    assert out.splitlines()[-1] == "unreachable: 1 3"


def test_icg_export(capsys, tmp_path):
    assert run(capsys, "icg", "4", "-d", "1", "export", "edges")[1] == "0 1\n0 3\n1 2\n2 3\n"
    target = tmp_path / "g.dot"
    assert run(capsys, "--output", str(target), "icg", "60", "-d", "3,10", "export", "dot")[1] == ""
    assert target.read_text().count("--") == 300


def test_duplicate_divisors_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["icg", "60", "-d", "3,3", "levels"])
    assert exc.value.code == 2


def test_nonnumeric_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "60", "x", "1", "1"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["atom", "60", "3"],
        ["count", "60", "6", "10", "3"],
        ["sumset", "60", "10", "10"],
        ["icg", "60", "-d", "3,10", "levels"],
        ["icg", "60", "-d", "3,10", "power", "2"],
        ["verify", "12", "lemmas"],
    ],
)
def test_json_round_trip(capsys, argv):
    out = run(capsys, *argv, "--format", "json")[1]
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out
    assert run(capsys, *argv, "--format", "json")[1] == out


def test_verify_modes(capsys):
    for mode, n in [("count", "30"), ("sumset", "30"), ("levels", "30"), ("lemmas", "40")]:
        code, out, _ = run(capsys, "verify", n, mode)
        assert code == 0 and out.endswith(" 0 mismatches\n")


def test_verify_limits(capsys):
    assert run(capsys, "verify", "151", "count")[0] == 2
    assert run(capsys, "verify", "121", "levels")[0] == 2
    assert run(capsys, "verify", "501", "lemmas")[0] == 2
    with pytest.raises(SystemExit):
        main(["verify", "10", "bogus"])


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import atomsum.verify as verify

    real = verify.rep_count

    def broken(n, a, b, c):
        br = real(n, a, b, c)
        return br.__class__(**{**br.__dict__, "count": br.count + (n == 12 and c == 1)})

    monkeypatch.setattr(verify, "rep_count", broken)
    code, out, _ = run(capsys, "verify", "12", "count")
    assert code == 1 and "mismatch" in out


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("ATOMSUM_MAX_N", "100")
    code, _, err = run(capsys, "atom", "1000", "3")
    assert code == 2 and "cap" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "atomsum", "sumset", "60", "3", "10"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "leaders: 1"
