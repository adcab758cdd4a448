"""Verifier reports and the command-line surface."""

import pytest

from dynkin_tilting import verify
from dynkin_tilting.cli import run
from dynkin_tilting.verify import (
    orientation_sweep,
    run_suite,
    verify_bc_equality,
    verify_identities,
    verify_sincere_structure,
    verify_type,
)


def test_verify_type_e6():
    rep = verify_type("E", 6)
    assert rep.passed
    line = rep.lines()[0]
    assert "1 6 20 50 110 228 418 | 833" in line


def test_verify_type_rejects_big_ranks():
    with pytest.raises(ValueError, match="estimated result count 16796"):
        verify_type("A", 9)


def test_verify_orientations_a4_d4():
    assert len(orientation_sweep("A", 4)) == 8
    assert len(orientation_sweep("D", 4)) == 8
    assert verify_type("A", 4, orientation_sweep("A", 4)).passed
    assert verify_type("D", 4, orientation_sweep("D", 4)).passed


def test_orientation_sweep_sample_is_seeded():
    s1 = orientation_sweep("A", 6)
    s2 = orientation_sweep("A", 6)
    assert s1 == s2
    assert len(s1) == 10


def test_bc_equality():
    assert verify_bc_equality(5).passed


def test_identities_n50():
    rep = verify_identities(50)
    assert rep.passed
    assert len(rep.checks) == 16


def test_sincere_structure():
    rep = verify_sincere_structure(5)
    assert rep.passed
    ids = {c.check_id for c in rep.checks}
    assert ids == {"sincere.u", "sincere.v", "sincere.per-vertex", "sincere.total", "sincere.eta"}


def test_report_rendering_shape():
    rep = verify_identities(10)
    for line in rep.lines():
        fields = line.split("\t")
        assert len(fields) == 5
        assert fields[4] in ("PASS", "FAIL")
    assert rep.render().endswith("checks passed\n")


def test_failing_check_does_not_abort(tmp_path, monkeypatch):
    from dynkin_tilting import oeis

    bad = tmp_path / "b129869.txt"
    bad.write_text("0 1\n1 5\n2 21\n3 1\n4 1\n5 1\n6 1\n7 1\n")
    monkeypatch.setenv(oeis.FIXTURE_ENV_VAR, str(tmp_path))
    rep = verify.verify_reconcile({"A129869": 8})
    assert not rep.passed
    assert len(rep.checks) == 1
    assert "FAIL" in rep.render()


def test_suite_quick_passes_and_thread_invariant():
    r1 = run_suite("quick")
    r8 = run_suite("quick", threads=8)
    assert r1.passed
    assert r1.render() == r8.render()


def test_suite_full_passes():
    rep = run_suite("full")
    assert rep.passed
    assert len(rep.checks) > 100


def test_suite_slow_covers_e7_e8():
    rep = run_suite("slow")
    assert rep.passed
    subjects = " ".join(c.subject for c in rep.checks)
    assert "E7" in subjects and "E8" in subjects
    assert any("1771 4784 17342 | 25080" in c.actual for c in rep.checks)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("exhaustive")


# --- CLI ---------------------------------------------------------------------


def test_cli_table(capsys):
    assert run(["table", "D", "6"]) == 0
    assert capsys.readouterr().out == "1 6 20 50 105 196 294 | total 672\n"
    assert run(["table", "G", "2"]) == 0
    assert capsys.readouterr().out == "1 2 5 | total 8\n"


def test_cli_table_bad_rank(capsys):
    assert run(["table", "C", "1"]) == 2
    assert "inadmissible" in capsys.readouterr().err


def test_cli_usage_error(capsys):
    assert run(["table", "Z", "1"]) == 2
    assert run([]) == 2
    assert run(["frobnicate"]) == 2


def test_cli_enumerate(capsys):
    assert run(["enumerate", "D", "4"]) == 0
    out = capsys.readouterr().out
    assert "by-support-rank: 1 4 9 16 20 | total 50" in out


def test_cli_enumerate_antichain_has_both_rows(capsys):
    assert run(["enumerate", "A", "2", "--statistic", "antichain"]) == 0
    out = capsys.readouterr().out
    assert "by-support-rank: 1 2 2 | total 5" in out
    assert "by-size:         1 3 1 | total 5" in out


def test_cli_enumerate_orientation(capsys):
    assert run(["enumerate", "A", "4", "--orientation", "1>2,3>2,4>3"]) == 0
    out = capsys.readouterr().out
    assert "1 4 9 14 14 | total 42" in out


def test_cli_enumerate_listing(capsys):
    assert run(["enumerate", "A", "2", "--statistic", "antichain", "--list"]) == 0
    assert capsys.readouterr().out == "-\n1,0\n1,0 1,1\n1,1\n2,0\n"


def test_cli_triangle_csv(capsys):
    assert run(["triangle", "B", "--rows", "10", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[9] == "1,9,45,165,495,1287,3003,6435,12870,24310"


def test_cli_reconcile(capsys):
    assert run(["reconcile", "A009766", "--terms", "55"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_verify_quick_deterministic(capsys):
    assert run(["verify", "--quick"]) == 0
    first = capsys.readouterr().out
    assert run(["verify", "--quick"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert run(["verify", "--quick", "--threads", "8"]) == 0
    third = capsys.readouterr().out
    assert first == third
    assert first.startswith("# verify suite=quick")
    assert "checks passed" in first


def test_cli_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "report.txt"
    assert run(["verify", "--quick", "--out", str(out)]) == 0
    assert out.read_text() == capsys.readouterr().out
