import subprocess
import sys

import pytest

from revcube import cube


def run_cli(*args, env=None):
    cmd = [sys.executable, "-m", "revcube", *args]
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def test_count():
    r = run_cli("count")
    assert r.returncode == 0
    assert r.stdout.strip() == "1594323"
    r = run_cli("count", "--mode", "mechanical")
    assert r.returncode == 0
    assert r.stdout.strip() == "3"


def test_prob_exact():
    r = run_cli("prob")
    assert r.returncode == 0
    assert r.stdout.strip() == "1/12288"
    r = run_cli("prob", "--mode", "mechanical", "--exact")
    assert r.returncode == 0
    assert r.stdout.strip() == "1/3"


def test_prob_mc_pinned():
    r = run_cli("prob", "--mc", "100000", "--seed", "5", "--workers", "2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "estimate: 1/25000"
    assert lines[1] == "stderr: 1.999960e-05"


def test_prob_mc_worker_invariance():
    a = run_cli("prob", "--mode", "mechanical", "--mc", "131072", "--seed", "9")
    b = run_cli(
        "prob", "--mode", "mechanical", "--mc", "131072", "--seed", "9",
        "--workers", "4",
    )
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_prob_mc_bad_args():
    assert run_cli("prob", "--mc", "0").returncode == 2
    assert run_cli("prob", "--mc", "100", "--workers", "0").returncode == 2
    assert run_cli("prob", "--mode", "painted").returncode == 2


def test_random_assembly_deterministic(tmp_path):
    a = run_cli("random-assembly", "--seed", "3")
    b = run_cli("random-assembly", "--seed", "3")
    c = run_cli("random-assembly", "--seed", "4")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout != c.stdout
    t = cube.parse_state(a.stdout)
    assert cube.classify(t).to_string() == "201000200000:2"


def test_random_assembly_seed_env():
    import os

    env = os.environ.copy()
    env["REVCUBE_SEED"] = "3"
    a = run_cli("random-assembly", env=env)
    b = run_cli("random-assembly", "--seed", "3")
    assert a.stdout == b.stdout
    # explicit flag wins over the environment
    env["REVCUBE_SEED"] = "77"
    c = run_cli("random-assembly", "--seed", "3", env=env)
    assert c.stdout == b.stdout
    env["REVCUBE_SEED"] = "notanumber"
    d = run_cli("random-assembly", env=env)
    assert d.returncode == 2
    assert "REVCUBE_SEED" in d.stderr


def test_random_assembly_mechanical_flip_free():
    r = run_cli("random-assembly", "--mode", "mechanical", "--seed", "6")
    t = cube.parse_state(r.stdout)
    assert t.edges.twists == (0,) * 24


def test_solvable_exit_codes(tmp_path):
    solved = tmp_path / "solved.txt"
    solved.write_text(cube.format_state(cube.identity_state()))
    r = run_cli("solvable", str(solved))
    assert r.returncode == 0
    assert r.stdout.strip() == "solvable"

    scrambled = tmp_path / "scrambled.txt"
    g = cube.apply_word([cube.Move.U, cube.Move.MR, cube.Move.F])
    scrambled.write_text(cube.format_state(g))
    assert run_cli("solvable", str(scrambled)).returncode == 0

    from revcube.wreath import WreathElem
    from revcube import perm

    ident = cube.identity_state()
    twist = cube.CubeState(
        ident.edges,
        WreathElem(3, (1,) + (0,) * 7, perm.identity(8)),
        ident.centers,
    )
    bad = tmp_path / "twisted.txt"
    bad.write_text(cube.format_state(twist))
    r = run_cli("solvable", str(bad))
    assert r.returncode == 1
    assert r.stdout.startswith("unsolvable: ")
    assert r.stdout.strip().endswith(":1")


def test_solvable_mechanical_rejects_flips(tmp_path):
    from revcube.wreath import WreathElem
    from revcube import perm

    ident = cube.identity_state()
    flipped = cube.CubeState(
        WreathElem(2, (1, 1) + (0,) * 22, perm.identity(24)),
        ident.corners,
        ident.centers,
    )
    f = tmp_path / "flipped.txt"
    f.write_text(cube.format_state(flipped))
    r = run_cli("solvable", str(f), "--mode", "mechanical")
    assert r.returncode == 2
    assert "not mechanically admissible" in r.stderr
    # the same file is fine in marked mode (a pure pair flip is solvable)
    assert run_cli("solvable", str(f)).returncode == 0


def test_malformed_file_and_missing_file(tmp_path):
    good = cube.format_state(cube.identity_state()).splitlines()
    good[0] = "edges_flip: 0 0"
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(good) + "\n")
    r = run_cli("solvable", str(bad))
    assert r.returncode == 2
    assert "line 1" in r.stderr
    r = run_cli("invariant", str(tmp_path / "missing.txt"))
    assert r.returncode == 2


def test_invariant_canonical_round_trip(tmp_path):
    r = run_cli("random-assembly", "--seed", "12")
    state = tmp_path / "state.txt"
    state.write_text(r.stdout)
    cls = run_cli("invariant", str(state)).stdout.strip()
    assert len(cls) == 14 and cls[12] == ":"

    canon = run_cli("canonical", cls)
    assert canon.returncode == 0
    rep = tmp_path / "rep.txt"
    rep.write_text(canon.stdout)
    assert run_cli("invariant", str(rep)).stdout.strip() == cls


def test_canonical_identity_class_is_solvable(tmp_path):
    canon = run_cli("canonical", "000000000000:0")
    rep = tmp_path / "rep.txt"
    rep.write_text(canon.stdout)
    assert run_cli("solvable", str(rep)).returncode == 0


def test_canonical_rejects_malformed():
    assert run_cli("canonical", "00:9").returncode == 2
    assert run_cli("canonical", "0000000000003:1").returncode == 2


def test_verify_quick():
    r = run_cli("verify", "--level", "quick")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert all(l.startswith("ok: ") for l in lines[:-1])
    assert lines[-1] == "all checks passed"
    assert sum(l.startswith("ok: geometry") for l in lines) == 5


def test_unknown_command():
    assert run_cli("frobnicate").returncode == 2
