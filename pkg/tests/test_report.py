import csv

from trit_codes import families
from trit_codes.report import write_report


def test_report_rows_match_survey(tmp_path):
    paths = write_report(3, False, tmp_path)
    with paths.csv.open() as fh:
        rows = list(csv.DictReader(fh))
    expected = families.survey(3, False, optimal_only=False)
    assert len(rows) == len(expected)
    by_e = {int(r["e"]): r for r in rows}
    for row in expected:
        got = by_e[row.e]
        assert int(got["n"]) == row.report.n
        assert got["generator"] == str(row.report.generator)
        assert got["optimal"] == str(row.report.optimal)
    assert paths.csv.name == "survey_m3.csv"
    for fig in paths.figures:
        assert fig.stat().st_size > 1000
