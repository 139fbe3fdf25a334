"""Deterministic table serialization: CSV, JSON and Markdown.

Machine formats carry rationals as exact "num/den" strings and
sexagesimal values as dotted text, so every format round-trips the full
row losslessly.  Human-facing decimal output may use the p-marker
convention for repeating decimals ("1.983402p7" repeats the 7); machine
fields never do.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .enumeration import EnumeratedRow
from .reconstruction import GradientTriangle
from .sexagesimal import from_rational
from .tablet import TabletLine

ENUMERATION_COLUMNS = [
    "row", "col0", "colI_sex", "colI_frac", "width", "diagonal", "base",
    "X", "shorten_d", "bab_tan", "bab_sec", "angle_deg", "colI_places",
    "tablet_line",
]

TABLET_COLUMNS = [
    "row", "col0_sex", "col0_frac", "colI_sex", "colI_frac",
    "colII_inscribed", "colII_corrected", "colIII_inscribed", "colIII_corrected",
    "pre_II", "pre_III", "stretch", "shorten_d", "base",
]


def decimal_with_period(value: Fraction) -> str:
    """Decimal text with a p marker where the digits start repeating.

    1681/108 renders as "15.56p481": the block after p repeats forever.
    Terminating values come out plain.
    """
    value = Fraction(value)
    if value < 0:
        return "-" + decimal_with_period(-value)
    integer, remainder = divmod(value.numerator, value.denominator)
    if remainder == 0:
        return str(integer)
    digits: list[str] = []
    seen: dict[int, int] = {}
    cycle_start = None
    while remainder:
        if remainder in seen:
            cycle_start = seen[remainder]
            break
        seen[remainder] = len(digits)
        remainder *= 10
        digit, remainder = divmod(remainder, value.denominator)
        digits.append(str(digit))
    if cycle_start is None:
        return f"{integer}.{''.join(digits)}"
    head = "".join(digits[:cycle_start])
    cycle = "".join(digits[cycle_start:])
    return f"{integer}.{head}p{cycle}"


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _parse_frac(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def enumeration_record(row: EnumeratedRow, position: int, tablet_line: int | None = None) -> dict[str, str]:
    tri = row.triangle
    two_p = 60 * (tri.sec_fv - 1)
    return {
        "row": str(position),
        "col0": str(from_rational(two_p).numeral),
        "colI_sex": str(from_rational(row.col_i).numeral),
        "colI_frac": _frac_str(row.col_i),
        "width": str(tri.width),
        "diagonal": str(tri.diagonal),
        "base": str(tri.base),
        "X": str(tri.stretch),
        "shorten_d": str(tri.shorten_divisor) if tri.shorten_divisor else "",
        "bab_tan": _frac_str(60 * tri.tan_fv),
        "bab_sec": _frac_str(60 * tri.sec_fv),
        "angle_deg": repr(row.angle_deg),
        "colI_places": str(row.col_i_places),
        "tablet_line": str(tablet_line) if tablet_line is not None else "",
    }


def enumeration_from_record(record: dict[str, str]) -> EnumeratedRow:
    tan_fv = _parse_frac(record["bab_tan"]) / 60
    sec_fv = _parse_frac(record["bab_sec"]) / 60
    tri = GradientTriangle(
        width=int(record["width"]),
        diagonal=int(record["diagonal"]),
        base=int(record["base"]),
        tan_fv=tan_fv,
        sec_fv=sec_fv,
        stretch=int(record["X"]),
        shorten_divisor=int(record["shorten_d"]) if record["shorten_d"] else None,
    )
    return EnumeratedRow(
        triangle=tri,
        col_i=_parse_frac(record["colI_frac"]),
        angle_deg=float(record["angle_deg"]),
        col_i_places=int(record["colI_places"]),
    )


def tablet_record(line: TabletLine) -> dict[str, str]:
    pre_ii = str(line.pre_shortening[0]) if line.pre_shortening else ""
    pre_iii = str(line.pre_shortening[1]) if line.pre_shortening else ""
    return {
        "row": str(line.row),
        "col0_sex": str(from_rational(line.col0).numeral),
        "col0_frac": _frac_str(line.col0),
        "colI_sex": str(from_rational(line.col_i).numeral),
        "colI_frac": _frac_str(line.col_i),
        "colII_inscribed": str(line.col_ii_inscribed),
        "colII_corrected": str(line.col_ii_corrected),
        "colIII_inscribed": str(line.col_iii_inscribed),
        "colIII_corrected": str(line.col_iii_corrected),
        "pre_II": pre_ii,
        "pre_III": pre_iii,
        "stretch": str(line.stretch),
        "shorten_d": str(line.shorten_divisor) if line.shorten_divisor else "",
        "base": str(line.base),
    }


def tablet_from_record(record: dict[str, str]) -> TabletLine:
    pre = None
    if record["pre_II"]:
        pre = (int(record["pre_II"]), int(record["pre_III"]))
    return TabletLine(
        row=int(record["row"]),
        col0=_parse_frac(record["col0_frac"]),
        col_i=_parse_frac(record["colI_frac"]),
        col_ii_inscribed=int(record["colII_inscribed"]),
        col_ii_corrected=int(record["colII_corrected"]),
        col_iii_inscribed=int(record["colIII_inscribed"]),
        col_iii_corrected=int(record["colIII_corrected"]),
        pre_shortening=pre,
        stretch=int(record["stretch"]),
        shorten_divisor=int(record["shorten_d"]) if record["shorten_d"] else None,
        base=int(record["base"]),
    )


def to_csv(records: list[dict[str, str]], columns: list[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buffer.getvalue()


def from_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def to_json(records: list[dict[str, str]]) -> str:
    return json.dumps(records, indent=2) + "\n"


def from_json(text: str) -> list[dict[str, str]]:
    return json.loads(text)


def to_markdown(records: list[dict[str, str]], columns: list[str]) -> str:
    lines = [
        "| " + " | ".join(columns) + " |",
        "| " + " | ".join("---" for _ in columns) + " |",
    ]
    for record in records:
        lines.append("| " + " | ".join(record[c] for c in columns) + " |")
    return "\n".join(lines) + "\n"


def from_markdown(text: str) -> list[dict[str, str]]:
    lines = [l for l in text.splitlines() if l.strip().startswith("|")]
    if len(lines) < 2:
        return []
    def cells(line: str) -> list[str]:
        return [c.strip() for c in line.strip().strip("|").split("|")]
    columns = cells(lines[0])
    return [dict(zip(columns, cells(line))) for line in lines[2:]]


def render(records: list[dict[str, str]], columns: list[str], fmt: str) -> str:
    if fmt == "csv":
        return to_csv(records, columns)
    if fmt == "json":
        return to_json(records)
    if fmt == "md":
        return to_markdown(records, columns)
    raise ValueError(f"unknown format {fmt!r}")


def parse_table(text: str, fmt: str) -> list[dict[str, str]]:
    if fmt == "csv":
        return from_csv(text)
    if fmt == "json":
        return from_json(text)
    if fmt == "md":
        return from_markdown(text)
    raise ValueError(f"unknown format {fmt!r}")
