"""One-page tablet report: verification, errors, boundary and cadence.

Run:  python scripts/tablet_report.py
"""

import sys

from plimpton import formats
from plimpton.enumeration import cadence_map
from plimpton.reconstruction import definition_range_report, verify_all
from plimpton.scribal import chain_label, classify
from plimpton.tablet import load_dataset


def main():
    dataset = load_dataset()
    report = verify_all(dataset)
    print("== reproduction from column 0 ==")
    for check in report.checks:
        line = dataset.get_line(check.row)
        status = "ok" if check.passed else "MISMATCH"
        print(
            f"line {check.row:2d}: {status}  col0 {formats.decimal_with_period(line.col0):>12}"
            f"  ->  {line.col_ii_corrected:>5} / {line.col_iii_corrected:>5}"
            f"  (base {line.base}, X {line.stretch}"
            + (f", shortened by {line.shorten_divisor}" if line.shorten_divisor else "")
            + ")"
        )

    print("\n== scribal errors ==")
    for row in range(1, 16):
        result = classify(row)
        if not result.explanations:
            continue
        print(f"line {row} column {result.column}: {result.inscribed} for {result.corrected}")
        for chain in result.explanations:
            print(f"    {chain_label(chain)}")

    print("\n== definition range ==")
    boundary = definition_range_report()
    print(
        f"predicate {boundary['predicate']};"
        f" boundary {boundary['boundary_deg']:.4f} deg;"
        f" quoted ~{boundary['quoted_boundary_deg']} deg;"
        f" delta {boundary['delta_deg']:+.4f} deg"
    )

    print("\n== observation cadence ==")
    cm = cadence_map(25, 150)
    print(f"25 steps at 150 s: {cm.total_seconds:.0f} s total")
    cm = cadence_map(15, 150)
    print(f"15 observed steps: {cm.total_seconds:.0f} s elapsed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
