import subprocess
import sys

import pytest

from newmansum import cli


def invoke(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


# ------------------------------------------------------------------- eval

def test_eval_plain(capsys):
    code, out, _ = invoke(["eval", "500000"], capsys)
    assert code == 0
    assert out == "18261\n"


def test_eval_zero(capsys):
    code, out, _ = invoke(["eval", "0"], capsys)
    assert code == 0
    assert out == "0\n"


def test_eval_algorithms_agree(capsys):
    for algo in ("decomposition", "recursive", "oracle"):
        code, out, _ = invoke(["eval", "19", "--algorithm", algo], capsys)
        assert code == 0
        assert out == "7\n"


def test_eval_accepts_hex_and_binary(capsys):
    code, out, _ = invoke(["eval", "0x13"], capsys)
    assert (code, out) == (0, "7\n")
    code, out, _ = invoke(["eval", "0b10011"], capsys)
    assert (code, out) == (0, "7\n")


def test_eval_arbitrary_length_argument(capsys):
    n = str(1 << 520)
    code, out, _ = invoke(["eval", n], capsys)
    assert code == 0
    assert int(out) >= 1


def test_eval_residues(capsys):
    code, out, _ = invoke(["eval", "8", "--residue", "1"], capsys)
    assert (code, out) == (0, "-3\n")
    code, out, _ = invoke(["eval", "8", "--residue", "2"], capsys)
    assert (code, out) == (0, "0\n")
    code, out, _ = invoke(
        ["eval", "8", "--residue", "1", "--algorithm", "decomposition"], capsys)
    assert (code, out) == (0, "-3\n")
    code, out, _ = invoke(
        ["eval", "8", "--residue", "1", "--algorithm", "oracle"], capsys)
    assert (code, out) == (0, "-3\n")


RECURSIVE_TRACE = """\
18261
S(500000) = 3*S(125000) + 0
S(125000) = 3*S(31250) + 0
S(31250) = 3*S(7812) + 1
S(7812) = 3*S(1953) + 1
S(1953) = 3*S(488) + 0
S(488) = 3*S(122) + 0
S(122) = 3*S(30) + 1
S(30) = 3*S(7) - 1
S(7) = 3*S(1) + 0
S(1) = 3*S(0) + 1
19683-2187+729+27+9=18261
"""

DECOMPOSITION_TRACE = """\
18261
S(2^18) = 13122
+S([2^n,2^n+2^17)) n even = 0
+S(2^16) = 4374
+S([2^n,2^n+2^15)) n even = 0
+S(2^13) = 729
+S([2^n,2^n+2^8)) n odd = 27
+S(2^5) = 9
13122+0+4374+0+729+27+9=18261
"""


def test_eval_recursive_trace(capsys):
    code, out, _ = invoke(
        ["eval", "500000", "--algorithm", "recursive", "--trace"], capsys)
    assert code == 0
    assert out == RECURSIVE_TRACE
    assert out.splitlines()[-1] == "19683-2187+729+27+9=18261"


def test_eval_decomposition_trace(capsys):
    code, out, _ = invoke(
        ["eval", "500000", "--algorithm", "decomposition", "--trace"], capsys)
    assert code == 0
    assert out == DECOMPOSITION_TRACE


def test_eval_trace_usage_errors(capsys):
    code, _, err = invoke(["eval", "5", "--algorithm", "oracle", "--trace"], capsys)
    assert code == 64
    assert "trace" in err
    code, _, err = invoke(["eval", "5", "--residue", "1", "--trace"], capsys)
    assert code == 64


def test_eval_oracle_cap_exceeded(capsys):
    code, _, err = invoke(
        ["eval", str(2 ** 33), "--algorithm", "oracle"], capsys)
    assert code == 2
    assert "oracle cap" in err


def test_usage_errors(capsys):
    assert invoke(["eval", "-5"], capsys)[0] == 64
    assert invoke(["eval", "abc"], capsys)[0] == 64
    assert invoke(["eval", "5", "--bogus"], capsys)[0] == 64
    assert invoke(["nonsense"], capsys)[0] == 64
    assert invoke([], capsys)[0] == 64


# ------------------------------------------------------------------- verify

def test_verify_clean(capsys):
    code, out, _ = invoke(["verify", "--max", "256"], capsys)
    assert code == 0
    assert "0 failures" in out


def test_verify_trivial(capsys):
    code, out, _ = invoke(["verify", "--max", "0"], capsys)
    assert code == 0
    assert "0 failures" in out


def test_verify_detects_fault(capsys, monkeypatch):
    from newmansum import core

    good = core.recursion_correction
    monkeypatch.setattr(core, "recursion_correction",
                        lambda N: -good(N) if N % 24 == 15 else good(N))
    code, out, _ = invoke(["verify", "--max", "64"], capsys)
    assert code == 1
    assert "first failure" in out
    assert "N=15" in out


# ------------------------------------------------------------------- scan

def test_scan_csv(tmp_path, capsys):
    out_path = tmp_path / "d.csv"
    code, _, _ = invoke(
        ["scan", "--from", "2", "--to", "100", "--step", "1",
         "--out", str(out_path)], capsys)
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "N,S,delta,lower,upper,in_bounds"
    assert len(lines) == 99
    assert all(line.endswith("true") for line in lines[1:])
    assert lines[5] == "6,2,0.483459078354,2,3,true"


def test_scan_row_for_n1_leaves_upper_empty(tmp_path, capsys):
    out_path = tmp_path / "one.csv"
    code, _, _ = invoke(
        ["scan", "--from", "1", "--to", "2", "--out", str(out_path)], capsys)
    assert code == 0
    assert out_path.read_text().splitlines()[1] == "1,1,1.0,0,,true"


def test_scan_checkpoint_row(tmp_path, capsys):
    out_path = tmp_path / "big.csv"
    code, _, _ = invoke(
        ["scan", "--from", "500000", "--to", "500001", "--out", str(out_path)],
        capsys)
    assert code == 0
    row = out_path.read_text().splitlines()[1]
    assert row.startswith("500000,18261,")


def test_scan_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        code, _, _ = invoke(
            ["scan", "--from", "2", "--to", "60", "--out", str(path)], capsys)
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_scan_bad_range(tmp_path, capsys):
    code, _, _ = invoke(
        ["scan", "--from", "9", "--to", "5", "--out", str(tmp_path / "x.csv")],
        capsys)
    assert code == 64


def test_scan_unwritable_path(tmp_path, capsys):
    target = tmp_path / "no-such-dir" / "x.csv"
    code, _, err = invoke(
        ["scan", "--from", "2", "--to", "5", "--out", str(target)], capsys)
    assert code == 2
    assert not target.exists()


# ------------------------------------------------------------------- bounds

BOUNDS_1000 = """\
scanned N in [1, 1000]
bound violations: 0
newman inequality violations: 0
lower bound attained at: 3, 6, 24, 96, 384
upper bound attained at: 19, 67, 259, 260, 271
"""


def test_bounds_output(capsys):
    code, out, _ = invoke(["bounds", "--max", "1000"], capsys)
    assert code == 0
    assert out == BOUNDS_1000


def test_bounds_usage(capsys):
    assert invoke(["bounds", "--max", "1"], capsys)[0] == 64


# ------------------------------------------------------------------- eta

ETA_9 = """\
     x  defined  derived   half  status
     1       +1       -1     +0  MISMATCH
     3       +1       -1     +0  MISMATCH
     5       +1       -1     +0  MISMATCH
     7       +1       +1     +0  ok
     9       +1       -1     +0  MISMATCH
"""


def test_eta_table(capsys):
    code, out, _ = invoke(["eta", "--max", "9"], capsys)
    assert code == 0
    assert out == ETA_9


# ------------------------------------------------------------------- bench

def test_bench_runs(capsys):
    code, out, _ = invoke(["bench", "--exponents", "4,20,64"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("oracle kernel: ")
    assert any(line.startswith("N=2^20:") for line in lines)
    assert any("oracle n/a (over cap)" in line for line in lines if "2^64" in line)
    assert any(line.startswith("prefix scan to ") for line in lines)


# ---------------------------------------------------------------- packaging

def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "newmansum", "eval", "19"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "7\n"


def test_pure_python_fallback_selectable():
    import os

    proc = subprocess.run(
        [sys.executable, "-c",
         "from newmansum import oracle; print(oracle.KERNEL_BACKEND); "
         "print(oracle.oracle_sum(3, 0, 500000))"],
        capture_output=True, text=True,
        env=dict(os.environ, NEWMANSUM_PURE="1"))
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["pure", "18261"]
