"""Exact linear-series arithmetic.

A series here is a net: the span of 3 independent polynomials of ambient
degree d with rational coefficients.  The module computes the net's
vanishing sequence at any point (infinity included) by exact row
reduction, and decides the root-sum relation: whether a single constant K
satisfies beta_{d-1} + K*beta_d = 0 across the whole net, equivalently
whether all full-degree members share the same sum of roots.  For a net
with no base point at infinity, the relation holds iff the vanishing
sequence at infinity is {0, >=2, *}; that equivalence is the tested
contract of ``root_sum_criterion``.

Everything is fractions.Fraction; vanishing orders are discrete and one
rounded pivot would corrupt them, so no floats appear anywhere.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "PolySeries",
    "VanishingSequence",
    "RootSumRelation",
    "RankDeficientError",
    "SeriesFormatError",
    "vanishing_sequence",
    "root_sum_relation",
    "root_sum_criterion",
    "root_sum",
    "translate",
    "series_from_json",
    "series_to_json",
]


class RankDeficientError(Exception):
    """The three basis rows do not span a rank-3 series."""


class SeriesFormatError(ValueError):
    """A series document violates the interchange format; message names the field."""


@dataclass(frozen=True)
class PolySeries:
    """Rank-3 net of degree-d polynomials, rows = coefficient vectors b_0..b_d."""

    degree: int
    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"ambient degree must be >= 1, got {self.degree}")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.basis)
        if len(rows) != 3:
            raise ValueError(f"a net has exactly 3 basis rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != self.degree + 1:
                raise ValueError(
                    f"basis row {i} has {len(row)} coefficients, expected {self.degree + 1}"
                )
        object.__setattr__(self, "basis", rows)


@dataclass(frozen=True)
class VanishingSequence:
    """The three distinct orders of vanishing, strictly increasing."""

    orders: tuple[int, int, int]

    def __post_init__(self):
        a0, a1, a2 = self.orders
        if not (0 <= a0 < a1 < a2):
            raise ValueError(f"orders must be strictly increasing and >= 0: {self.orders}")

    @property
    def a0(self) -> int:
        return self.orders[0]

    @property
    def a1(self) -> int:
        return self.orders[1]

    @property
    def a2(self) -> int:
        return self.orders[2]


@dataclass(frozen=True)
class RootSumRelation:
    """The constant K with b_{d-1} + K*b_d = 0 across the net.

    ``degenerate`` marks the case where both top coefficients vanish on the
    whole net; every K works there and 0 is reported by convention.
    """

    k: Fraction
    degenerate: bool = False


def _echelon_pivots(rows: list[list[Fraction]]) -> list[int]:
    """Pivot columns of the row space, in increasing order."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(len(mat[0])):
        pivot_row = next((r for r in range(top, len(mat)) if mat[r][col] != 0), None)
        if pivot_row is None:
            continue
        mat[top], mat[pivot_row] = mat[pivot_row], mat[top]
        lead = mat[top][col]
        for r in range(top + 1, len(mat)):
            if mat[r][col] != 0:
                factor = mat[r][col] / lead
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[top])]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return pivots


def _require_rank3(series: PolySeries) -> None:
    if len(_echelon_pivots([list(r) for r in series.basis])) < 3:
        raise RankDeficientError("basis rows are linearly dependent; rank < 3")


def _shifted(coeffs, c: Fraction) -> list[Fraction]:
    """Coefficients of f(x + c) given those of f."""
    d = len(coeffs) - 1
    out = [Fraction(0)] * (d + 1)
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        power = Fraction(1)
        for j in range(i, -1, -1):
            out[j] += a * math.comb(i, j) * power
            power *= c
    return out


def vanishing_sequence(
    series: PolySeries, at_infinity: bool = True, point: Fraction | int | str | None = None
) -> VanishingSequence:
    """The three orders of vanishing of the net at a point.

    At infinity a polynomial vanishes to order d - deg, so the reversed
    coefficient rows are reduced; at a finite point the rows are recentred
    there first.  The pivot columns of the echelon form are exactly the
    orders achieved by the net.
    """
    if at_infinity:
        rows = [list(reversed(row)) for row in series.basis]
    else:
        if point is None:
            raise ValueError("a finite point is required when at_infinity is false")
        c = Fraction(point)
        rows = [_shifted(row, c) for row in series.basis]
    pivots = _echelon_pivots(rows)
    if len(pivots) < 3:
        raise RankDeficientError("basis rows are linearly dependent; rank < 3")
    return VanishingSequence(tuple(pivots))


def root_sum(coeffs) -> Fraction | None:
    """Sum of the roots, -b_{d-1}/b_d, or None when the top coefficient is 0."""
    if coeffs[-1] == 0:
        return None
    return -Fraction(coeffs[-2]) / Fraction(coeffs[-1])


def root_sum_relation(series: PolySeries) -> RootSumRelation | None:
    """The shared K with b_{d-1} + K*b_d = 0 on the net, if one exists.

    Linearity makes checking the three basis rows sufficient.  Returns
    None when no single K works; returns the degenerate marker when both
    top coefficients vanish identically on the net.
    """
    _require_rank3(series)
    tops = [(row[-2], row[-1]) for row in series.basis]
    if all(lead == 0 for _, lead in tops):
        if all(sub == 0 for sub, _ in tops):
            return RootSumRelation(Fraction(0), degenerate=True)
        return None
    sub0, lead0 = next(t for t in tops if t[1] != 0)
    k = -Fraction(sub0) / Fraction(lead0)
    if all(sub + k * lead == 0 for sub, lead in tops):
        return RootSumRelation(k, degenerate=False)
    return None


def root_sum_criterion(series: PolySeries) -> bool:
    """Whether the net admits the root-sum constant K.

    Contract (tested, not assumed): on a net with no base point at
    infinity, this is true iff the vanishing sequence at infinity has
    second order >= 2.
    """
    return root_sum_relation(series) is not None


def translate(series: PolySeries, shift: Fraction | int | str) -> PolySeries:
    """The net of f(x + shift) for f in the series.

    Preserves existence of the root-sum constant; K itself moves to
    K - d*shift because every root moves by -shift.
    """
    c = Fraction(shift)
    return PolySeries(
        series.degree, tuple(tuple(_shifted(row, c)) for row in series.basis)
    )


# ---------------------------------------------------------------------------
# Interchange format: {"degree": d, "basis": [[...], [...], [...]]} with
# every coefficient an exact rational string like "5", "-3/7".


def _parse_entry(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise SeriesFormatError(f"{where}: expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise SeriesFormatError(f"{where}: zero denominator in {text!r}") from None
    except ValueError:
        raise SeriesFormatError(f"{where}: not a rational literal: {text!r}") from None


def series_from_json(text: str) -> PolySeries:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SeriesFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SeriesFormatError("top level: expected an object")
    if "degree" not in doc:
        raise SeriesFormatError("degree: missing")
    degree = doc["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise SeriesFormatError(f"degree: expected an integer >= 1, got {degree!r}")
    basis = doc.get("basis")
    if not isinstance(basis, list) or len(basis) != 3:
        raise SeriesFormatError("basis: expected a list of exactly 3 rows")
    rows = []
    for i, row in enumerate(basis):
        if not isinstance(row, list) or len(row) != degree + 1:
            raise SeriesFormatError(
                f"basis[{i}]: expected a list of {degree + 1} rational strings"
            )
        rows.append(
            tuple(_parse_entry(entry, f"basis[{i}][{j}]") for j, entry in enumerate(row))
        )
    return PolySeries(degree, tuple(rows))


def series_to_json(series: PolySeries) -> str:
    doc = {
        "degree": series.degree,
        "basis": [[str(x) for x in row] for row in series.basis],
    }
    return json.dumps(doc, separators=(",", ":"))
