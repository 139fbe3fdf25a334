import json

from plimpton import formats
from plimpton.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_all_lines_reproduced(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "15/15 lines reproduced" in out
        assert out.count(": ok") == 15
        assert "boundary 82.5824" in out

    def test_use_inscribed_flags_five_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "--use-inscribed")
        assert code == 1
        assert "10/15 lines reproduced" in out
        for row in (2, 8, 9, 13, 15):
            assert f"line {row:2d}: MISMATCH" in out

    def test_single_line(self, capsys):
        code, out, _ = run(capsys, "verify", "--line", "3")
        assert code == 0
        assert "1/1 lines reproduced" in out

    def test_json_export(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "verify")
        assert code == 0
        payload = json.loads(out)
        assert len(payload) == 15
        assert all(record["status"] == "ok" for record in payload)

    def test_csv_round_trips_tablet_lines(self, capsys, tmp_path):
        from plimpton.tablet import load_dataset

        path = tmp_path / "tablet.csv"
        code, _, _ = run(capsys, "--format", "csv", "--output", str(path), "verify")
        assert code == 0
        parsed = formats.from_csv(path.read_text(encoding="utf-8"))
        lines = [formats.tablet_from_record(r) for r in parsed]
        assert lines == list(load_dataset().lines)


class TestReconstruct:
    def test_line_1(self, capsys):
        code, out, _ = run(capsys, "reconstruct", "24.30")
        assert code == 0
        assert "1.59.00.15" in out
        assert "colII         119" in out.replace("  ", "  ")
        assert "2.49" in out
        assert "base" in out and "120" in out

    def test_flat_triangle(self, capsys):
        code, out, _ = run(capsys, "reconstruct", "0")
        assert code == 0
        assert "colII         0" in out

    def test_out_of_range_anchor_one(self, capsys):
        code, _, err = run(capsys, "reconstruct", "59.59", "--anchor", "1")
        assert code == 2
        assert "not below 60" in err

    def test_malformed_takiltum(self, capsys):
        # 59.59 at anchor 0 is inside the range but not a perfect square
        code, _, err = run(capsys, "reconstruct", "59.59")
        assert code == 2
        assert "square" in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "reconstruct", "1.60.3")
        assert code == 2
        assert "exceeds 59" in err

    def test_shorten_flag(self, capsys):
        code, out, _ = run(capsys, "reconstruct", "10.40", "--shorten", "max")
        assert code == 0
        assert "colII         56" in out
        assert "colIII        106" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "reconstruct", "24.30")
        assert code == 0
        (record,) = json.loads(out)
        assert record["colI_sex"] == "1.59.00.15"
        assert record["colI_decimal"] == "3600 x 1.983402p7"


class TestEnumerate:
    def test_default_csv_with_marks(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "enumerate", "--mark-tablet")
        assert code == 0
        records = formats.from_csv(out)
        assert len(records) == 245
        marked = [r for r in records if r["tablet_line"]]
        assert len(marked) == 15
        assert [int(r["tablet_line"]) for r in marked] == list(range(1, 16))

    def test_range_window(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "enumerate", "--range", "44.7:44.8")
        assert code == 0
        records = formats.from_csv(out)
        assert len(records) == 1
        assert records[0]["width"] == "119"

    def test_max_places_cap(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "enumerate", "--max-places", "4")
        assert code == 0
        records = formats.from_csv(out)
        assert records
        assert all(int(r["colI_places"]) <= 4 for r in records)

    def test_gaps_footer(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "enumerate", "--gaps")
        assert code == 0
        assert "# gaps:" in out
        assert "tablet_span_rows=28" in out

    def test_markdown_output(self, capsys):
        code, out, _ = run(
            capsys, "--format", "md", "enumerate", "--max-generator", "20"
        )
        assert code == 0
        assert out.startswith("| row |")

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "--format", "csv", "enumerate")
        _, second, _ = run(capsys, "--format", "csv", "enumerate")
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "table.csv"
        code, out, _ = run(
            capsys, "--format", "csv", "--output", str(path), "enumerate",
            "--max-generator", "20",
        )
        assert code == 0
        assert out == ""
        assert path.read_text(encoding="utf-8").startswith("row,")


class TestConvert:
    def test_triple(self, capsys):
        code, out, _ = run(capsys, "convert", "triple", "4601", "6649", "4800")
        assert code == 0
        assert "bab_tan    57.5125" in out
        assert "bab_sec    83.1125" in out
        assert "sine       4601/6649" in out

    def test_values(self, capsys):
        code, out, _ = run(capsys, "convert", "values", "3/4", "5/4")
        assert code == 0
        assert "width      45" in out
        assert "diagonal   75" in out
        assert "base       60" in out

    def test_bad_triple(self, capsys):
        code, _, err = run(capsys, "convert", "triple", "3", "5", "5")
        assert code == 2
        assert "right triangle" in err


class TestErrors:
    def test_line_13(self, capsys):
        code, out, _ = run(capsys, "errors", "13")
        assert code == 0
        assert "multiply un-rooted column I by 16" in out

    def test_all_errata_summarized(self, capsys):
        code, out, _ = run(capsys, "errors")
        assert code == 0
        for row in (2, 8, 9, 13, 15):
            assert f"line {row} column" in out
        assert "ruled out" in out

    def test_clean_row(self, capsys):
        code, out, _ = run(capsys, "errors", "11")
        assert code == 0
        assert "no erratum" in out

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "errors", "99")
        assert code == 2
        assert "99" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "errors", "2")
        assert code == 0
        (record,) = json.loads(out)
        assert record["row"] == 2
        assert len(record["hypotheses"]) == 4
        assert any(h["rejected"] for h in record["hypotheses"])


class TestCadence:
    def test_default_cadence(self, capsys):
        code, out, _ = run(capsys, "cadence")
        assert code == 0
        assert "total span: 3600.0 s over 25 steps" in out

    def test_custom(self, capsys):
        code, out, _ = run(capsys, "cadence", "--steps", "15", "--seconds", "150")
        assert code == 0
        assert "total span: 2100.0 s" in out

    def test_bad_steps(self, capsys):
        code, _, err = run(capsys, "cadence", "--steps", "0")
        assert code == 2
        assert "at least one" in err
