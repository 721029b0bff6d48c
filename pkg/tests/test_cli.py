import json
import subprocess
import sys

import pytest

from seifertkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def hopf(tmp_path):
    path = tmp_path / "hopf.json"
    path.write_text(json.dumps({"matrix": [[0, 1], [0, 0]]}))
    return path


def test_invariants_trefoil(capsys):
    code, out, _ = run(capsys, "invariants", "--braid", "1 1 1")
    assert code == 0
    assert "genus: 1\n" in out
    assert "signature: -2\n" in out
    assert "alexander: t - 1 + t^-1\n" in out
    assert "equality: yes\n" in out


def test_invariants_matrix(capsys, hopf):
    code, out, _ = run(capsys, "invariants", "--matrix", str(hopf))
    assert code == 0
    assert "alexander: 1\n" in out and "signature: 0\n" in out and "equality: no\n" in out


def test_invariants_braid_file(capsys, tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("1 2 1 2 1 2 1 2\n")
    code, out, _ = run(capsys, "invariants", "--braid-file", str(path))
    assert code == 0 and "genus: 3\n" in out and "signature: -6\n" in out


def test_invariants_errors(capsys, tmp_path):
    assert run(capsys, "invariants", "--braid", "1 0")[0] == 2
    assert run(capsys, "invariants", "--braid", "1 1")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"matrix": [[1, 0], [0, 1]]}))
    assert run(capsys, "invariants", "--matrix", str(bad))[0] == 3
    assert run(capsys, "invariants", "--matrix", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "invariants")[0] == 2


def test_certificate_and_verify(capsys, tmp_path):
    cert = tmp_path / "t37.cert.json"
    code, out, _ = run(capsys, "certificate", "--braid", "1 2 1 2 1 2 1 2 1 2 1 2 1 2", "--out", str(cert))
    assert code == 0 and cert.exists()
    data = json.loads(cert.read_text())
    assert list(data)[:6] == ["N", "a", "d", "final_form", "genus_bound", "realizability_attested"]
    assert data["genus_bound"]["den"] == data["N"]
    assert f"genus_bound: {6 * data['N'] - 1}/{data['N']}" in out

    code, out, _ = run(capsys, "verify", "--braid", "1 2 1 2 1 2 1 2 1 2 1 2 1 2", "--certificate", str(cert))
    assert code == 0 and out.strip().endswith("verdict: PASS")

    data["a"][0] += 1
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--braid", "1 2 1 2 1 2 1 2 1 2 1 2 1 2", "--certificate", str(tampered))
    assert code == 1
    assert "FAIL framing_a" in out


def test_verify_size_mismatch(capsys, tmp_path, hopf):
    cert = tmp_path / "c.json"
    run(capsys, "certificate", "--braid", "1 2 1 2 1 2 1 2 1 2 1 2 1 2", "--out", str(cert))
    assert run(capsys, "verify", "--matrix", str(hopf), "--certificate", str(cert))[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{")
    assert run(capsys, "verify", "--matrix", str(hopf), "--certificate", str(junk))[0] == 2


def test_certificate_equality_case(capsys, tmp_path):
    code, out, _ = run(capsys, "certificate", "--braid", "1 1 1", "--out", str(tmp_path / "x.json"))
    assert code == 4 and not (tmp_path / "x.json").exists()


def test_certificate_raw_matrix(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"matrix": [[1, 1], [0, -1]]}))
    out = tmp_path / "c.json"
    assert run(capsys, "certificate", "--matrix", str(m), "--out", str(out))[0] == 5
    assert run(capsys, "certificate", "--matrix", str(m), "--out", str(out), "--attest-annulus", "+1")[0] == 0
    assert run(capsys, "verify", "--matrix", str(m), "--certificate", str(out))[0] == 0
    code = run(capsys, "certificate", "--matrix", str(m), "--out", str(out), "--attest-annulus", "-1",
               "--witness", "0 1")[0]
    assert code == 0
    assert json.loads(out.read_text())["final_form"] == [[0, -1], [0, 0]]


def test_certificate_output_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "certificate", "--braid", "1 2 " * 7, "--out", str(a))
    run(capsys, "certificate", "--braid", "1 2 " * 7, "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_census_two_strands(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, text, _ = run(capsys, "census", "--strands", "2", "--crossings", "9", "--out", str(out))
    assert code == 0
    assert "types=T(2,3),T(2,5),T(2,7),T(2,9)" in text and "verdict=PASS" in text
    assert out.read_text().startswith("word,s,c,genus,signature,alexander,equality,torus_match,certificate_path\n")


def test_census_three_strands(capsys):
    code, text, _ = run(capsys, "census", "--strands", "3", "--crossings", "10")
    assert code == 1
    assert "verdict=FAIL prime_verdict=PASS" in text
    assert "violation: 1 1 1 2 2 2:" in text
    code, _, _ = run(capsys, "census", "--strands", "3", "--crossings", "10", "--scope", "prime")
    assert code == 0


def test_census_bad_bounds(capsys):
    assert run(capsys, "census", "--strands", "1", "--crossings", "5")[0] == 2
    assert run(capsys, "census", "--strands", "3", "--crossings", "0")[0] == 2


def test_torus(capsys):
    code, out, _ = run(capsys, "torus", "3", "4")
    assert code == 0 and out == "1 2 1 2 1 2 1 2\n"
    assert run(capsys, "torus", "2", "4")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seifertkit", "invariants", "--braid", "1 1 1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "signature: -2" in proc.stdout
