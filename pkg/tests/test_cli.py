"""End-to-end checks of the command line frontend.

main() is called in-process with an argv list; stdout is inspected via
capsys.  Exit code conventions: 0 all checks pass, 1 an identity check
failed, 2 invalid input.
"""

import json

import pytest

from exactlie.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, ["--emit", "json"] + argv)
    return code, json.loads(out)


def test_slice_rank_2_passes(capsys):
    code, out, _ = run(capsys, ["slice", "--algebra", "sp", "--rank", "2", "--orbit", "2,1,1"])
    assert code == 0
    assert "check printed-reference-match: pass" in out


def test_slice_rank_4_coefficient_120(capsys):
    code, report = run_json(
        capsys, ["slice", "--algebra", "sp", "--rank", "4", "--orbit", "6,1,1"]
    )
    assert code == 0
    assert "120*a^2*x" in report["results"]["f"]
    assert report["exit_code"] == 0


def test_slice_rank_3_reports_sign_mismatch(capsys):
    # the derivation and the fixed-minus reference disagree at odd n;
    # the difference polynomial must be surfaced, not hidden
    code, report = run_json(
        capsys, ["slice", "--algebra", "sp", "--rank", "3", "--orbit", "4,1,1"]
    )
    assert code == 1
    failing = [c for c in report["checks"] if c["status"] == "fail"]
    assert len(failing) == 1
    assert failing[0]["name"] == "printed-reference-match"
    assert "difference" in failing[0]["detail"]
    assert "y^6" in failing[0]["detail"]


def test_slice_malformed_orbit(capsys):
    code, out, err = run(capsys, ["slice", "--algebra", "sp", "--rank", "3", "--orbit", "1,6,1"])
    assert code == 2
    assert "weakly decreasing" in err


def test_slice_wrong_orbit_for_rank(capsys):
    code, _, err = run(capsys, ["slice", "--algebra", "sp", "--rank", "3", "--orbit", "2,1,1"])
    assert code == 2
    assert "hook orbit" in err


def test_classify_enumerate_c4(capsys):
    code, report = run_json(capsys, ["classify", "--algebra", "C", "--rank", "4", "--enumerate"])
    assert code == 0
    rows = report["results"]["table"]
    row = next(r for r in rows if r["partition"] == [4, 4])
    assert row["b2"] == 5
    assert row["star"] is False


def test_classify_single_orbit(capsys):
    code, report = run_json(
        capsys, ["classify", "--algebra", "B", "--rank", "3", "--orbit", "5,1,1"]
    )
    assert code == 0
    assert report["results"]["b2"] == 5
    assert report["results"]["star"] is False
    assert report["results"]["subregular_singularity"] == "A5"


def test_classify_regular_rejected(capsys):
    code, _, err = run(capsys, ["classify", "--algebra", "C", "--rank", "4", "--orbit", "8"])
    assert code == 2
    assert "regular" in err


def test_classify_g2_dims(capsys):
    code, report = run_json(
        capsys, ["classify", "--algebra", "G", "--rank", "2", "--orbit", "dim:8"]
    )
    assert code == 0
    assert report["results"]["b2"] == 3


def test_f4_betti_json(capsys):
    code, report = run_json(capsys, ["f4", "betti"])
    assert code == 0
    assert report["results"] == {"b2": 4, "decomposition": "2+1+1"}


def test_f4_verify(capsys):
    code, report = run_json(capsys, ["f4", "verify"])
    assert code == 0
    assert report["results"]["dims"]["0"] == 8
    assert report["results"]["dims"]["2"] == 8


def test_g2_verify(capsys):
    code, report = run_json(capsys, ["g2", "verify"])
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert "jacobi-identity" in names
    assert "chi6-identity-reading" in names
    assert all(c["status"] == "pass" for c in report["checks"])


def test_dualpair_witness_types(capsys):
    code, report = run_json(capsys, ["dualpair", "--n", "3", "--i", "3"])
    assert code == 0
    assert report["results"]["rho_type"] == [3, 3]
    assert report["results"]["pi_type"] == [2, 2]
    assert report["results"]["moment_constant"] == "1"


def test_dualpair_invalid_i(capsys):
    code, _, err = run(capsys, ["dualpair", "--n", "4", "--i", "2"])
    assert code == 2
    assert "odd" in err


def test_json_output_is_deterministic(capsys):
    _, out1, _ = run(capsys, ["--emit", "json", "dualpair", "--n", "3", "--i", "1"])
    _, out2, _ = run(capsys, ["--emit", "json", "dualpair", "--n", "3", "--i", "1"])
    assert out1 == out2
    _, out3, _ = run(capsys, ["--emit", "json", "--seed", "0", "classify", "--algebra", "D", "--rank", "4", "--enumerate"])
    _, out4, _ = run(capsys, ["classify", "--algebra", "D", "--rank", "4", "--enumerate", "--emit", "json"])
    assert out3 == out4


def test_global_flags_both_positions(capsys):
    code1, r1 = run_json(capsys, ["f4", "betti"])
    code2, out2, _ = run(capsys, ["f4", "betti", "--emit", "json"])
    assert code1 == code2 == 0
    assert r1 == json.loads(out2)


def test_check_aggregates_all_suites(capsys):
    code, report = run_json(capsys, ["check"])
    # two known failures: the odd-n sign of the hook reference form
    assert code == 1
    fails = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    assert fails == ["hook-n3-printed-form", "hook-n5-printed-form"]
    assert report["results"]["first_failure"] == "hook-n3-printed-form"
    assert report["results"]["suites"] == [
        "classify",
        "dualpair",
        "f4",
        "g2",
        "hook",
        "kernel",
    ]
    detail = next(c for c in report["checks"] if c["name"] == "hook-n3-printed-form")
    assert "difference" in detail["detail"]
