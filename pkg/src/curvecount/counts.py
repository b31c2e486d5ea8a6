"""Exact curve-count arithmetic.

The base quantity is the number of irreducible, reduced, nodal rational
plane curves of degree d through 3d-1 general points.  Those numbers obey
the Kontsevich recursion

    N_1 = 1,
    N_d = sum over i+j=d, i,j>0 of
          N_i * N_j * ( i^2 j^2 * C(3d-4, 3i-2)  -  i^3 j * C(3d-4, 3i-1) ),

and everything else here is an exact integer formula on top of them: the
count of elliptic plane curves of degree d with fixed j-invariant is
C(d-1,2)*N_d divided by the automorphism factor of the j-class (1
generically, 3 at j=0, 2 at j=1728), and the top intersection number on
the closure of the irreducible-domain locus is C(d-1,2)*N_d itself.

All arithmetic is on Python ints (arbitrary precision); there is no
floating point anywhere in this module.  Division by the automorphism
factor is checked, never assumed: a non-exact division means the table
feeding it is corrupt.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

__all__ = [
    "JClass",
    "RecursionTable",
    "CacheError",
    "ExactDivisionError",
    "DivisibilityRow",
    "binomial",
    "rational_count",
    "elliptic_count",
    "zt_invariant",
    "divisibility_report",
    "load_table",
    "save_table",
]


class CacheError(Exception):
    """A persistent count table failed validation.

    ``line_no`` is the 1-based offending line when the failure is tied to a
    specific line of the file.
    """

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


class ExactDivisionError(ArithmeticError):
    """An elliptic-count division left a remainder.

    The quotients are integers by theorem, so a remainder can only mean the
    recursion table feeding the division is wrong.
    """


class JClass(Enum):
    """The three j-invariant classes with finite j.

    j = 0 and j = 1728 carry extra curve automorphisms (orders 3 and 2);
    every other finite j is automorphism-free.  j = infinity is deliberately
    not a class here: the nodal-curve count is exposed as ``zt_invariant``.
    """

    GENERIC = "generic"
    J_ZERO = "0"
    J_1728 = "1728"

    @property
    def aut_factor(self) -> int:
        return _AUT_FACTOR[self]


_AUT_FACTOR = {JClass.GENERIC: 1, JClass.J_ZERO: 3, JClass.J_1728: 2}


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0, k > n, or n < 0.

    The out-of-range convention makes the recursion sum total: no term
    needs special-casing at the boundary.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _recursion_value(d: int, lower) -> int:
    """Value of the degree-d recursion step given all lower counts.

    ``lower`` is any mapping holding entries for 1..d-1.  Intermediate
    terms are signed; only the final sum is a count.
    """
    total = 0
    for i in range(1, d):
        j = d - i
        total += (
            lower[i]
            * lower[j]
            * (
                i * i * j * j * binomial(3 * d - 4, 3 * i - 2)
                - i**3 * j * binomial(3 * d - 4, 3 * i - 1)
            )
        )
    return total


class RecursionTable:
    """Dense memo of the rational-curve counts for degrees 1..max_degree.

    Filling is single-writer; once filled to a degree the table can be read
    concurrently.  Entry 1 is pinned to 1 and every other entry is the
    recursion value over all lower entries.
    """

    def __init__(self):
        self._values: dict[int, int] = {1: 1}

    def __getitem__(self, d: int) -> int:
        return self._values[d]

    def __contains__(self, d: int) -> bool:
        return d in self._values

    @property
    def max_degree(self) -> int:
        return len(self._values)

    def fill_to(self, d: int) -> None:
        for n in range(self.max_degree + 1, d + 1):
            self._values[n] = _recursion_value(n, self._values)

    def items(self):
        return sorted(self._values.items())


def rational_count(d: int, table: RecursionTable | None = None) -> int:
    """Number of degree-d rational plane curves through 3d-1 general points.

    Fills ``table`` (a fresh one when omitted) densely up to d as a side
    effect.
    """
    if d <= 0:
        raise ValueError(f"rational count needs d >= 1, got {d}")
    if table is None:
        table = RecursionTable()
    table.fill_to(d)
    return table[d]


def elliptic_count(d: int, j: JClass, table: RecursionTable | None = None) -> int:
    """Number of degree-d elliptic plane curves with j-invariant in class j
    through 3d-1 general points: C(d-1,2) * N_d / aut_factor(j).

    The division is performed and verified exactly; a remainder raises
    ExactDivisionError (it would contradict the integrality of the counts).
    """
    if d < 3:
        raise ValueError(f"elliptic counts are defined for d >= 3, got {d}")
    numerator = binomial(d - 1, 2) * rational_count(d, table)
    quot, rem = divmod(numerator, j.aut_factor)
    if rem != 0 or quot * j.aut_factor != numerator:
        raise ExactDivisionError(
            f"C({d-1},2)*N_{d} = {numerator} is not divisible by {j.aut_factor}; "
            "the recursion table is corrupt"
        )
    return quot


def zt_invariant(d: int, table: RecursionTable | None = None) -> int:
    """Top intersection number on the irreducible-domain locus: C(d-1,2)*N_d.

    Equals aut_factor(j) * elliptic_count(d, j) for every j-class, and
    counts the maps from the 1-nodal rational curve (the j = infinity
    content).
    """
    if d < 3:
        raise ValueError(f"the invariant is defined for d >= 3, got {d}")
    return binomial(d - 1, 2) * rational_count(d, table)


@dataclass(frozen=True)
class DivisibilityRow:
    d: int
    count_mod3: int
    d_mod3: int
    binom_mod3: int

    @property
    def anomaly(self) -> bool:
        """True when 3 | N_d fails to match 3 | d."""
        return (self.count_mod3 == 0) != (self.d_mod3 == 0)


def divisibility_report(d_max: int, table: RecursionTable | None = None) -> list[DivisibilityRow]:
    """Mod-3 behaviour of the rational counts for 3 <= d <= d_max.

    Each row carries N_d mod 3, d mod 3 and C(d-1,2) mod 3, and flags
    itself when divisibility of N_d by 3 disagrees with divisibility of d.
    """
    if d_max < 3:
        raise ValueError(f"report needs d_max >= 3, got {d_max}")
    if table is None:
        table = RecursionTable()
    table.fill_to(d_max)
    return [
        DivisibilityRow(d, table[d] % 3, d % 3, binomial(d - 1, 2) % 3)
        for d in range(3, d_max + 1)
    ]


# ---------------------------------------------------------------------------
# Persistent cache.  UTF-8 text, one "d<SPACE>value" line per degree, d
# running 1, 2, 3, ... with no gaps and no blank lines.


def save_table(table: RecursionTable, path: str | Path) -> None:
    lines = [f"{d} {v}\n" for d, v in table.items()]
    Path(path).write_text("".join(lines), encoding="utf-8")


def load_table(path: str | Path, rng: random.Random | None = None) -> RecursionTable:
    """Load a cached table, refusing anything that fails validation.

    Beyond the syntactic checks (consecutive degrees from 1, decimal
    values), the base entry must be exactly 1 and one randomly chosen
    stored entry is re-derived from the lower entries before the file is
    trusted.  ``rng`` only picks the entry to re-check.
    """
    if rng is None:
        rng = random.Random()
    values: dict[int, int] = {}
    text = Path(path).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        parts = line.split(" ")
        if len(parts) != 2:
            raise CacheError(f"expected 'd value', got {line!r}", line_no)
        try:
            d, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise CacheError(f"non-integer field in {line!r}", line_no) from None
        if d != line_no:
            raise CacheError(f"degree {d} out of sequence (expected {line_no})", line_no)
        if v < 0:
            raise CacheError(f"negative count {v}", line_no)
        values[d] = v
    if not values:
        raise CacheError("cache file is empty")
    if values[1] != 1:
        raise CacheError(f"base entry must be 1, got {values[1]}", 1)
    n = len(values)
    if n >= 2:
        probe = rng.randrange(2, n + 1)
        expected = _recursion_value(probe, values)
        if values[probe] != expected:
            raise CacheError(
                f"stored entry for degree {probe} is {values[probe]}, "
                f"re-derivation gives {expected}",
                probe,
            )
    table = RecursionTable()
    table._values = values
    return table
