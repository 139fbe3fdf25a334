"""Export the full gradient table and its gap statistics.

Writes the default enumeration (generators <= 1000, column I capped at
11 places) as CSV with the tablet rows marked, and prints the spacing
summary.  Output lands in ./full_table.csv unless a path is given.

Run:  python scripts/export_full_table.py [output.csv]
"""

import sys

from plimpton import formats
from plimpton.enumeration import gap_analysis, generate, tablet_positions


def main(argv):
    output = argv[1] if len(argv) > 1 else "full_table.csv"
    rows = generate()
    marks = {}
    for line_number, position in enumerate(tablet_positions(rows), start=1):
        if position is not None:
            marks[position] = line_number
    records = [
        formats.enumeration_record(row, i + 1, marks.get(i))
        for i, row in enumerate(rows)
    ]
    with open(output, "w", encoding="utf-8") as handle:
        handle.write(formats.to_csv(records, formats.ENUMERATION_COLUMNS))
    _, summary = gap_analysis(rows)
    print(f"wrote {len(rows)} rows to {output} ({len(marks)} tablet rows marked)")
    print(
        f"gaps: mean {summary.mean_arcmin:.2f}', max {summary.max_arcmin:.2f}',"
        f" {summary.tablet_span_count} rows inside the tablet span"
        f" (mean {summary.tablet_span_mean_arcmin:.2f}')"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
