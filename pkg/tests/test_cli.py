import json
import subprocess
import sys

import pytest

from spectral_cycles.verify.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.startswith("{")], out


def test_construct(capsys):
    code, (obj,), _ = run(capsys, "construct", "snk", "-n", "5", "-k", "2")
    assert code == 0 and obj["graph6"] == "D}o" and obj["edges"] == 7
    code, _, out = run(capsys, "construct", "snkp", "-n", "5", "-k", "2", "--g6out")
    assert code == 0 and out.strip() == "D~o"


def test_construct_domain_error(capsys):
    assert run(capsys, "construct", "snk", "-n", "4", "-k", "4")[0] == 2


def test_mu(capsys):
    code, (obj,), _ = run(capsys, "mu", "--g6", "I}rEEB?o?")
    assert code == 0 and obj["mu"] == pytest.approx(4.5311288741492755, abs=1e-12)


def test_bad_graph6_is_usage_error(capsys):
    assert run(capsys, "mu", "--g6", "A")[0] == 2


def test_certify(capsys):
    code, (obj,), _ = run(capsys, "certify", "--a", "1", "--b", "6", "--g6", "Dhc")  # C5
    assert code == 0 and obj["verdict"] == "BoundHolds" and obj["column_sums"] == [-4] * 5


def test_transform_step_and_fixpoint(capsys):
    code, lines, _ = run(capsys, "transform", "step", "--g6", "Ch", "-u", "1", "-v", "2")  # P4
    assert code == 0 and lines[0]["f_before"] == "4" and lines[-1]["violations"] == []
    code, lines, _ = run(capsys, "transform", "fixpoint", "--g6", "Ch")
    assert code == 0 and lines[-1]["steps"] == 1
    assert run(capsys, "transform", "step", "--g6", "Ch")[0] == 2


def test_circumference(capsys):
    code, (obj,), _ = run(capsys, "circumference", "--g6", "Dhc")
    assert code == 0 and obj["circumference"] == 5


def test_circumference_budget(capsys):
    assert run(capsys, "circumference", "--g6", "K~~~~~~~~~~~", "--budget", "3")[0] == 3


def test_verify_facts(capsys):
    code, lines, _ = run(capsys, "verify-fact", "f1", "--g6", "F}rE?", "-k", "2")  # S_{7,2}
    assert code == 0 and lines[0]["status"] == "Verified" and lines[0]["note"] == "equality clause"
    code, lines, _ = run(capsys, "verify-fact", "eg", "--enumerate", "4")
    assert code == 0 and lines[-1]["counterexamples"] == 0
    code, lines, _ = run(capsys, "verify-fact", "lemma5", "--count", "20", "--seed", "4")
    assert code == 0 and lines[-1]["checked"] == 20
    code, lines, _ = run(capsys, "verify-fact", "lemma8", "--h", "Bw", "--t1", "3", "--t2", "4")
    assert code == 0 and lines[0]["strict"] is True
    code, lines, _ = run(capsys, "verify-fact", "perron", "--g6", "Ch")
    assert code == 0 and lines[0]["violations"] == []
    code, lines, _ = run(capsys, "verify-fact", "claims", "--g6", "F}rE?", "-k", "2")
    assert code == 0 and len(lines) == 7


def test_scan_to_file(capsys, tmp_path):
    out = tmp_path / "scan.jsonl"
    code, (obj,), _ = run(capsys, "scan", "-n", "5", "-k", "2", "--constraint", "atleast:5",
                          "--enumerate", "--jobs", "1", "--out", str(out))
    assert code == 0 and obj["summary"]["count_scanned"] == 1024
    lines = out.read_text().splitlines()
    assert len(lines) == 1025 and json.loads(lines[-1]) == obj


def test_scan_needs_source(capsys):
    assert run(capsys, "scan", "-n", "5", "-k", "2", "--constraint", "atleast:5")[0] == 2


def test_search(capsys):
    code, (obj,), _ = run(capsys, "search", "-n", "8", "-k", "2", "--constraint", "window:5:6",
                          "--seed", "3", "--budget", "2000")
    assert code == 0 and obj["best"]["graph"] == "GxGv@g" and "history" not in obj


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spectral_cycles", "construct", "snk", "-n", "5", "-k", "2",
                           "--g6out"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "D}o"


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["construct"])
    assert info.value.code == 2
