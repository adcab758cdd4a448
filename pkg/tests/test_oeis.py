"""Triangle rendering, b-file parsing, and fixture reconciliation."""

import pytest

from dynkin_tilting import oeis
from dynkin_tilting.oeis import (
    BFileError,
    fetch_bfile,
    generate_terms,
    parse_bfile,
    reconcile,
    render_triangle,
    triangle_doc,
)


def test_triangle_doc_row_shapes():
    a = triangle_doc("A", 10)
    assert a.rows[0] == (1,)
    assert len(a.rows[9]) == 10
    d = triangle_doc("D", 8)
    assert d.first_row == 2
    assert d.rows[0] == (1, 2, 1)
    lucas = triangle_doc("lucas", 5)
    assert lucas.rows[0] == (2,)
    assert lucas.rows[3] == (1, 4, 5, 2)


def test_pretty_rendering_d_has_dots_and_sums():
    text = render_triangle("D", 8, "pretty").decode()
    lines = text.splitlines()
    assert lines[0].split() == ["0", "·"]
    assert lines[1].split() == ["1", "·", "·"]
    assert lines[2].split() == ["2", "1", "2", "1", "|", "4"]
    assert lines[-1].split()[-1] == "35750"


def test_pretty_rendering_b_row9():
    text = render_triangle("B", 10, "pretty").decode()
    row9 = text.splitlines()[9].split()
    assert row9[1:11] == ["1", "9", "45", "165", "495", "1287", "3003", "6435", "12870", "24310"]
    assert row9[-1] == "48620"


def test_pretty_sum_columns_match_totals():
    from dynkin_tilting.formulas import a_total

    for name, series, first in (("A", "A", 0), ("B", "B", 0), ("D", "D", 2)):
        text = render_triangle(name, 10, "pretty").decode()
        data_lines = [ln for ln in text.splitlines() if "|" in ln]
        for k, line in enumerate(data_lines):
            assert int(line.rsplit("|", 1)[1]) == a_total(series, first + k)


def test_csv_rendering():
    text = render_triangle("B", 10, "csv").decode()
    assert text.splitlines()[9] == "1,9,45,165,495,1287,3003,6435,12870,24310"


def test_bfile_roundtrip():
    for name in ("A", "B", "D", "pascal", "lucas", "sheared-catalan"):
        blob = render_triangle(name, 9, "bfile").decode()
        parsed = parse_bfile("X", blob)
        doc = triangle_doc(name, 9)
        flat = [v for row in doc.rows for v in row]
        assert list(parsed.values()) == flat
        assert parsed.offset == doc.offset


def test_bad_inputs():
    with pytest.raises(ValueError):
        render_triangle("Z", 5, "pretty")
    with pytest.raises(ValueError):
        render_triangle("A", 5, "yaml")
    with pytest.raises(ValueError):
        render_triangle("A", 0, "csv")
    with pytest.raises(ValueError):
        generate_terms("A000001", 5)


def test_parse_bfile_errors():
    with pytest.raises(BFileError, match="line 2"):
        parse_bfile("X", "0 1\nabc def\n")
    with pytest.raises(BFileError, match="line 3"):
        parse_bfile("X", "0 1\n1 2\n5 9\n")
    with pytest.raises(BFileError):
        parse_bfile("X", "# only comments\n")
    parsed = parse_bfile("X", "# c\n\n0 1\n1 2\n")
    assert parsed.entries == ((0, 1), (1, 2))


def test_fixture_first_entries():
    assert fetch_bfile("A009766").entries[0] == (0, 1)
    assert fetch_bfile("A029635").entries[0] == (0, 2)
    assert fetch_bfile("A241188").entries[0] == (1, 1)


def test_generated_prefixes():
    assert [v for _, v in generate_terms("A009766", 10)] == [1, 1, 1, 1, 2, 2, 1, 3, 5, 5]
    assert [v for _, v in generate_terms("A008315", 12)] == [1, 1, 1, 1, 1, 2, 1, 3, 2, 1, 4, 5]
    assert [v for _, v in generate_terms("A029635", 10)] == [2, 1, 2, 1, 3, 2, 1, 4, 5, 2]
    assert [v for _, v in generate_terms("A129869", 8)] == [1, 5, 20, 77, 294, 1122, 4290, 16445]


def test_d_fixture_matches_transcribed_rows():
    from tests.test_formulas import TRIANGLE_B, TRIANGLE_D

    flat_d = [v for n in sorted(TRIANGLE_D) for v in TRIANGLE_D[n][0]]
    got = list(fetch_bfile("A241188").values())[: len(flat_d)]
    assert got == flat_d
    flat_b = [v for n in sorted(TRIANGLE_B) for v in TRIANGLE_B[n][0]]
    assert list(fetch_bfile("A059481").values())[: len(flat_b)] == flat_b


def test_reconcile_all_fixtures():
    for sid, terms in [
        ("A009766", 55),
        ("A059481", 55),
        ("A241188", 54),
        ("A008315", 40),
        ("A007318", 55),
        ("A029635", 40),
        ("A129869", 8),
    ]:
        res = reconcile(sid, terms)
        assert res.passed, (sid, res.detail)


def test_reconcile_reports_mismatch(tmp_path, monkeypatch):
    bad = tmp_path / "b129869.txt"
    bad.write_text("0 1\n1 5\n2 21\n")
    monkeypatch.setenv(oeis.FIXTURE_ENV_VAR, str(tmp_path))
    res = reconcile("A129869", 3)
    assert not res.passed
    assert "index 2" in res.detail


def test_missing_fixture(tmp_path, monkeypatch):
    monkeypatch.setenv(oeis.FIXTURE_ENV_VAR, str(tmp_path))
    with pytest.raises(FileNotFoundError):
        fetch_bfile("A007318")


def test_online_fetch_falls_back(monkeypatch, capsys):
    # no network in CI: the fetch must warn and fall back to the fixture
    res = fetch_bfile("A129869", online=True, timeout=0.01)
    assert res.entries[0] == (0, 1)
