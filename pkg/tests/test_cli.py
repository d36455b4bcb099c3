import json
from pathlib import Path

import pytest

from trit_codes import cli

GOLDEN_DIR = Path(__file__).parent / "golden"


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 0, err
    return json.loads(out)


def strip_timings(obj):
    if isinstance(obj, list):
        return [strip_timings(o) for o in obj]
    obj = dict(obj)
    obj["timings"] = {}
    return obj


GOLDEN_CASES = [
    ("construct_m5_e160.json", ["construct", "-m", "5", "-e", "160"], True),
    ("construct_m6_e374_s.json", ["construct", "-m", "6", "-e", "374", "--s"], True),
    ("verify_Ar2_m6.json", ["verify", "--family", "A-r2", "-m", "6"], True),
    ("verify_D5evenPNr2_m4.json", ["verify", "--family", "D5-even-PN-r2", "-m", "4"], True),
    ("survey_m3_s.json", ["survey", "-m", "3", "--s"], True),
    ("coset_m5_e160.json", ["coset", "-m", "5", "-e", "160"], False),
    ("spectrum_m4_r14.json", ["spectrum", "-m", "4", "-r", "14"], False),
    ("conditions_m5_e160.json", ["conditions", "-m", "5", "-e", "160"], False),
]


@pytest.mark.parametrize("name,argv,drop_timings", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_json_output_matches_golden(capsys, name, argv, drop_timings):
    payload = run_json(capsys, *argv, "--format", "json")
    if drop_timings:
        payload = strip_timings(payload)
    want = json.loads((GOLDEN_DIR / name).read_text())
    assert payload == want


def test_json_schema_keys_are_stable(capsys):
    payload = run_json(capsys, "construct", "-m", "4", "-e", "2", "--s", "--format", "json")
    assert list(payload) == [
        "spec", "n", "k", "d_exact", "d_lower", "d_upper",
        "generator", "optimal", "certificates", "family", "timings",
    ]


def test_construct_text_output(capsys):
    rc, out, _ = run(capsys, "construct", "-m", "5", "-e", "160")
    assert rc == 0
    assert out.splitlines() == [
        "modulus: x^5+2x+1",
        "generator: x^10+2x^9+x^8+x^5+x^4+x^3+2x^2+2x+2",
        "[n, k] = [242, 232]",
    ]


def test_construct_coset_collision_exits_2(capsys):
    rc, out, err = run(capsys, "construct", "-m", "5", "-e", "3")
    assert rc == 2
    assert "coset" in err


def test_construct_force_warns(capsys):
    rc, out, _ = run(capsys, "construct", "-m", "5", "-e", "3", "--force")
    assert rc == 0
    assert "warning" in out


def test_verify_pass_and_fail_exit_codes(capsys):
    rc, out, _ = run(capsys, "verify", "--family", "E20", "-m", "3")
    assert rc == 0 and "PASS" in out
    rc, _, err = run(capsys, "verify", "--family", "OP160", "-m", "6")
    assert rc == 1
    assert "odd" in err


def test_verify_budget_exit_3(capsys):
    rc, out, _ = run(capsys, "verify", "--family", "E16", "-m", "5", "--budget", "10")
    assert rc == 3
    assert "predicted, unverified" in out


def test_factor_command(capsys):
    rc, out, _ = run(capsys, "factor", "x^8+x^7+x^5+x^3+x+1")
    assert rc == 0
    assert out.strip() == "(x+2)^2 (x^3+x^2+x+2) (x^3+2x^2+2x+2)"
    rc, out, _ = run(capsys, "factor", "x^2+1")
    assert rc == 0 and out.strip() == "(x^2+1)"
    rc, _, err = run(capsys, "factor", "0")
    assert rc == 2
    rc, _, err = run(capsys, "factor", "x^+bogus")
    assert rc == 2


def test_factor_corpus_mode(capsys):
    rc, out, _ = run(capsys, "factor", "--corpus")
    assert rc == 0
    assert "corpus checks passed" in out
    assert "FAIL" not in out


def test_minpoly_command(capsys):
    rc, out, _ = run(capsys, "minpoly", "-m", "5", "-e", "1")
    assert rc == 0
    assert "x^5+2x+1" in out


def test_spectrum_text(capsys):
    rc, out, _ = run(capsys, "spectrum", "-m", "4", "-r", "14")
    assert rc == 0
    assert "PN" in out and "coulter-matthews" in out


def test_conditions_exit_codes(capsys):
    rc, out, _ = run(capsys, "conditions", "-m", "5", "-e", "160")
    assert rc == 0 and "PASS" in out
    rc, out, _ = run(capsys, "conditions", "-m", "4", "-e", "52")
    assert rc == 1 and "FAIL" in out
    rc, _, err = run(capsys, "conditions", "-m", "4", "-e", "160")
    assert rc == 2  # out of range for GF(3^4)


def test_survey_text_includes_known_rows(capsys):
    rc, out, _ = run(capsys, "survey", "-m", "4", "--s")
    assert rc == 0
    assert "e=2 " in out or "e=2  " in out
    assert "42" in out  # e=42 appears inside the e=14 coset
    assert "D5-even-PN-r2" in out


def test_survey_budget_guard_exit_3(capsys):
    rc, _, err = run(capsys, "survey", "-m", "9")
    assert rc == 3
    assert "budget" in err


def test_survey_modulus_override_is_echoed(capsys):
    payload = run_json(capsys, "construct", "-m", "2", "-e", "2",
                       "--modulus", "x^2+2x+2", "--format", "json")
    assert payload["spec"]["modulus"] == "x^2+2x+2"


def test_survey_workers_do_not_change_output(capsys):
    one = run_json(capsys, "survey", "-m", "3", "--s", "--format", "json")
    two = run_json(capsys, "survey", "-m", "3", "--s", "--workers", "2", "--format", "json")
    assert strip_timings(one) == strip_timings(two)


def test_report_writes_files(tmp_path, capsys):
    rc, out, _ = run(capsys, "report", "-m", "3", "--s", "-o", str(tmp_path))
    assert rc == 0
    csv_path = tmp_path / "survey_m3_s.csv"
    assert csv_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header.startswith("m,e,coset,n,k")
    pngs = sorted(p.name for p in tmp_path.glob("*.png"))
    assert pngs == ["distance_m3_s.png", "uniformity_m3_s.png"]
    for p in tmp_path.glob("*.png"):
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_unknown_family_tag_exits_2(capsys):
    rc, _, err = run(capsys, "verify", "--family", "NOPE", "-m", "5")
    assert rc == 2
