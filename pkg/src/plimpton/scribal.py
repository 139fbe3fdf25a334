"""Mechanical simulation of the tablet's scribal errors.

Each mechanism is a small total function on a digit sequence: misread a
final 5 as 2, twist two neighbouring written digits, halve the value,
merge two adjacent places, slip one place by a small amount, multiply
the un-rooted column-I remainder by the stretching factor, or shorten
by a divisor.  Chains of mechanisms applied to a line's corrected value
either reproduce the inscribed value exactly or they do not -- there is
no scoring, only exact digit equality.

classify searches all chains up to length three for a row's erratum and
reports every minimal chain that works; the competing narrative
hypotheses for line 2 are also registered by name, including the one
that fails to reproduce the inscription and the rejected direct-halving
chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sexagesimal import Sexagesimal, from_rational
from .tablet import RowOutOfRange, TabletDataset, TabletLine, load_dataset


class MechanismInapplicable(ValueError):
    """The mechanism's precondition fails on this digit sequence."""


Digits = tuple[int, ...]


def _to_digits(value: int) -> Digits:
    return Sexagesimal.from_int(value).digits


def _value(digits: Digits) -> int:
    out = 0
    for d in digits:
        out = out * 60 + d
    return out


def _trim(digits: Digits) -> Digits:
    """Floating form: drop trailing zero places."""
    out = list(digits)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class MisreadFinalFiveAsTwo:
    """A final 5 taken for a 2 (both signs drawn with two verticals)."""

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        if digits[-1] != 5:
            raise MechanismInapplicable("last digit is not 5")
        return digits[:-1] + (2,)

    def label(self) -> str:
        return "misread final 5 as 2"


@dataclass(frozen=True)
class TransposeDigits:
    """Swap two adjacent written decimal digits (e.g. 42 read as 24).

    Positions index the concatenated decimal rendering of the numeral
    ("6.42.2" flattens to 6422); after the swap the string is re-split
    with the original token lengths.
    """

    i: int
    j: int

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        tokens = [str(d) for d in digits]
        flat = "".join(tokens)
        if not (1 <= self.i < self.j <= len(flat)) or self.j != self.i + 1:
            raise MechanismInapplicable(f"positions {self.i},{self.j} out of range")
        chars = list(flat)
        chars[self.i - 1], chars[self.j - 1] = chars[self.j - 1], chars[self.i - 1]
        out = []
        pos = 0
        for token in tokens:
            piece = "".join(chars[pos : pos + len(token)])
            pos += len(token)
            value = int(piece)
            if value > 59:
                raise MechanismInapplicable(f"twisted place {piece} exceeds 59")
            out.append(value)
        if tuple(out) == digits:
            raise MechanismInapplicable("swap changes nothing")
        if out[0] == 0 and len(out) > 1:
            raise MechanismInapplicable("twist would create a leading zero")
        return tuple(out)

    def label(self) -> str:
        return f"transpose written digits {self.i},{self.j}"


@dataclass(frozen=True)
class HalveDigits:
    """Halve the value in floating form (an odd value gains a place)."""

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        value = _value(digits)
        if value % 2 == 0:
            return _trim(_to_digits(value // 2))
        return _trim(_to_digits(value * 30))

    def label(self) -> str:
        return "halve"


@dataclass(frozen=True)
class MergeAdjacentDigits:
    """Add two neighbouring places into one (45,14 collapsing to 59)."""

    position: int

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        p = self.position
        if not 1 <= p < len(digits):
            raise MechanismInapplicable(f"no adjacent pair at {p}")
        merged = digits[p - 1] + digits[p]
        if merged > 59:
            raise MechanismInapplicable(f"merged place {merged} exceeds 59")
        return digits[: p - 1] + (merged,) + digits[p + 1 :]

    def label(self) -> str:
        return f"merge places {self.position},{self.position + 1}"


@dataclass(frozen=True)
class DigitSlip:
    """One place written off by a small amount (8 noted as 9)."""

    position: int
    delta: int

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        p = self.position
        if not 1 <= p <= len(digits):
            raise MechanismInapplicable(f"no place {p}")
        slipped = digits[p - 1] + self.delta
        if not 0 <= slipped <= 59:
            raise MechanismInapplicable(f"slipped place {slipped} out of range")
        if p == 1 and slipped == 0 and len(digits) > 1:
            raise MechanismInapplicable("slip would create a leading zero")
        return digits[: p - 1] + (slipped,) + digits[p :]

    def label(self) -> str:
        return f"slip place {self.position} by {self.delta:+d}"


@dataclass(frozen=True)
class MultiplyValueInsteadOfRoot:
    """Stretch column I minus one itself, skipping the square root.

    The line-13 blunder: the scribe extended the takiltum remainder
    27.00.03.45 by the reciprocal 16 instead of rooting it first.
    Ignores the incoming digits; the input is the line's column I.
    """

    factor: int

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        remainder = line.col_i - 3600
        if remainder <= 0:
            raise MechanismInapplicable("column I has no remainder above 1")
        product = remainder * self.factor
        scaled = from_rational(Fraction(product))
        return _trim(scaled.numeral.digits)

    def label(self) -> str:
        return f"multiply un-rooted column I by {self.factor}"


@dataclass(frozen=True)
class ShortenWithDivisor:
    """Divide the written value by d; fails unless d divides it."""

    divisor: int

    def apply(self, digits: Digits, line: TabletLine) -> Digits:
        value = _value(digits)
        if self.divisor < 1 or value % self.divisor:
            raise MechanismInapplicable(f"{self.divisor} does not divide {value}")
        return _trim(_to_digits(value // self.divisor))

    def label(self) -> str:
        return f"shorten by {self.divisor}"


Mechanism = (
    MisreadFinalFiveAsTwo
    | TransposeDigits
    | HalveDigits
    | MergeAdjacentDigits
    | DigitSlip
    | MultiplyValueInsteadOfRoot
    | ShortenWithDivisor
)
Chain = tuple[Mechanism, ...]

MAX_CHAIN_LENGTH = 3
_SLIP_DELTAS = (-2, -1, 1, 2)
_SHORTEN_DIVISORS = (2, 3, 4, 5)


def chain_label(chain: Chain) -> str:
    return " -> ".join(m.label() for m in chain)


def _start_digits(dataset: TabletDataset, line: TabletLine, column: str) -> Digits:
    """The corrected pipeline value a chain perturbs.

    For shortened lines the scribe worked from the pre-shortening pair,
    so that is the start for columns II/III; column I starts from the
    corrected takiltum digits.
    """
    if column == "I":
        return from_rational(line.col_i).numeral.digits
    if column == "II":
        value = line.pre_shortening[0] if line.pre_shortening else line.col_ii_corrected
        return _to_digits(value)
    if column == "III":
        value = line.pre_shortening[1] if line.pre_shortening else line.col_iii_corrected
        return _to_digits(value)
    raise ValueError(f"unknown column {column!r}")


def simulate(row: int, chain: Chain, column: str | None = None) -> Sexagesimal:
    """Apply a mechanism chain to a row's corrected value.

    column defaults to the row's registered erratum column; pass one
    explicitly to perturb an error-free row.
    """
    dataset = load_dataset()
    line = dataset.get_line(row)
    if column is None:
        errata = dataset.errata_for(row)
        if not errata:
            raise MechanismInapplicable(
                f"row {row} has no erratum; pass a column to perturb"
            )
        column = errata[0].column
    digits = _start_digits(dataset, line, column)
    for mechanism in chain:
        digits = mechanism.apply(digits, line)
    return Sexagesimal(digits)


def refute(row: int, chain: Chain, column: str | None = None) -> bool:
    """True iff the chain does NOT reproduce the inscribed value."""
    dataset = load_dataset()
    errata = dataset.errata_for(row)
    if not errata:
        raise MechanismInapplicable(f"row {row} has no erratum to refute against")
    target = errata[0].inscribed
    try:
        return simulate(row, chain, column) != target
    except MechanismInapplicable:
        return True


def _candidate_mechanisms(digits: Digits, line: TabletLine) -> list[Mechanism]:
    out: list[Mechanism] = [MisreadFinalFiveAsTwo(), HalveDigits()]
    flat_len = sum(len(str(d)) for d in digits)
    out.extend(TransposeDigits(i, i + 1) for i in range(1, flat_len))
    out.extend(MergeAdjacentDigits(p) for p in range(1, len(digits)))
    out.extend(
        DigitSlip(p, delta)
        for p in range(1, len(digits) + 1)
        for delta in _SLIP_DELTAS
    )
    # the factor a scribe would reach for: the reciprocal of the common
    # factor visible in the un-rooted column-I remainder itself
    remainder = line.col_i - 3600
    if 0 < remainder and remainder.denominator > 1:
        out.append(MultiplyValueInsteadOfRoot(remainder.denominator))
    out.extend(ShortenWithDivisor(d) for d in _SHORTEN_DIVISORS)
    return out


@dataclass(frozen=True)
class NamedHypothesis:
    """A narrative chain registered for a row, with its outcome."""

    label: str
    chain: Chain
    reproduces: bool
    rejected: bool = False  # registered specifically as a ruled-out path


@dataclass(frozen=True)
class ErrorReport:
    """Everything known about one row's inscribed-vs-corrected gap."""

    row: int
    column: str | None
    inscribed: Sexagesimal | None
    corrected: Sexagesimal | None
    explanations: tuple[Chain, ...]
    hypotheses: tuple[NamedHypothesis, ...]
    unexplained: bool


# Narrative hypotheses for line 2's three-way reading, plus the chain the
# analysis rules out.  The double-misread variant lands on 3.22.1, which
# matches the alternate reading of the inscription, not the printed one.
_LINE2_HYPOTHESES: tuple[tuple[str, Chain, bool], ...] = (
    ("misread, twist, then halve",
     (MisreadFinalFiveAsTwo(), TransposeDigits(2, 3), HalveDigits()), False),
    ("misread, halve, then twist while writing",
     (MisreadFinalFiveAsTwo(), HalveDigits(), TransposeDigits(2, 3)), False),
    ("double misread, then halve",
     (DigitSlip(2, 2), MisreadFinalFiveAsTwo(), HalveDigits()), False),
    ("direct halving of the unabridged value",
     (HalveDigits(),), True),
)


def named_hypotheses(row: int) -> tuple[NamedHypothesis, ...]:
    """The registered narrative chains for a row, evaluated exactly."""
    if row == 2:
        out = []
        for label, chain, rejected in _LINE2_HYPOTHESES:
            out.append(
                NamedHypothesis(label, chain, not refute(row, chain), rejected)
            )
        return tuple(out)
    canonical: dict[int, tuple[str, Chain]] = {
        8: ("adjacent places merged while copying", (MergeAdjacentDigits(4),)),
        9: ("first place slipped by one", (DigitSlip(1, 1),)),
        13: ("stretched the un-rooted value", (MultiplyValueInsteadOfRoot(16),)),
        15: ("diagonal shortened by 4 against the width's 2", (ShortenWithDivisor(4),)),
    }
    if row in canonical:
        label, chain = canonical[row]
        return (NamedHypothesis(label, chain, not refute(row, chain)),)
    return ()


def classify(row: int) -> ErrorReport:
    """Search chains of length <= 3 that map corrected to inscribed.

    Only chains of the minimal working length are reported (longer ones
    always exist by padding with mutually cancelling slips).  Rows
    without errata come back empty and explained.
    """
    dataset = load_dataset()
    if not 1 <= row <= len(dataset.lines):
        raise RowOutOfRange(f"row {row} outside 1..{len(dataset.lines)}")
    errata = dataset.errata_for(row)
    if not errata:
        return ErrorReport(row, None, None, None, (), (), unexplained=False)
    erratum = errata[0]
    line = dataset.get_line(row)
    start = _start_digits(dataset, line, erratum.column)
    target = erratum.inscribed.digits

    frontier: list[tuple[Digits, Chain]] = [(start, ())]
    found: list[Chain] = []
    for _ in range(MAX_CHAIN_LENGTH):
        next_frontier = []
        for digits, chain in frontier:
            for mechanism in _candidate_mechanisms(digits, line):
                try:
                    result = mechanism.apply(digits, line)
                except MechanismInapplicable:
                    continue
                new_chain = chain + (mechanism,)
                if result == target:
                    found.append(new_chain)
                next_frontier.append((result, new_chain))
        if found:
            break
        frontier = next_frontier
    explanations = tuple(sorted(set(found), key=chain_label))
    return ErrorReport(
        row=row,
        column=erratum.column,
        inscribed=erratum.inscribed,
        corrected=erratum.corrected,
        explanations=explanations,
        hypotheses=named_hypotheses(row),
        unexplained=not explanations,
    )
