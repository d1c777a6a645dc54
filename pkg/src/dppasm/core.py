"""Domain objects and their statistics.

All coordinates are 1-based.  A DPP row ``i`` is stored densely; its
``t``-th stored entry (0-based) lives in absolute column ``i + t``.
Monotone triangles are stored apex first, so row ``i`` has ``i`` entries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AsmHasMinusOnes,
    ColumnNotStrictlyDecreasing,
    InternalInvariantViolation,
    InvalidAsm,
    InvalidPartition,
    InvalidPermutation,
    InvalidTriangle,
    PartExceedsOrder,
    PartNotPositive,
    RowNotWeaklyDecreasing,
    RowTooLongForLargestPart,
    RowTooShortForNextRow,
)

__all__ = [
    "Dpp", "Partition", "MonotoneTriangle", "Asm", "Permutation",
    "DppStats", "AsmStats",
    "validate_dpp", "special_parts", "dpp_stats",
    "inversion_number", "diagonal_equal_entries", "strict_diagonal_entries",
    "asm_stats", "is_asm_by_alternation",
]


def _check_dpp(rows: tuple[tuple[int, ...], ...], n: int) -> None:
    # Checks run cell by cell in row-major order so the first violation
    # reported is deterministic.
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    for r, row in enumerate(rows, start=1):
        if not row:
            raise RowTooLongForLargestPart("empty row", r, r)
        if r > 1 and len(rows[r - 2]) < row[0]:
            raise RowTooShortForNextRow(
                f"row {r - 1} has {len(rows[r - 2])} parts but row {r} "
                f"has largest part {row[0]}", r, r)
        above = rows[r - 2] if r > 1 else ()
        for t, v in enumerate(row):
            col = r + t
            if v < 1:
                raise PartNotPositive(f"part {v} is not positive", r, col)
            if t > 0 and v > row[t - 1]:
                raise RowNotWeaklyDecreasing(
                    f"{row[t - 1]} followed by {v}", r, col)
            if r > 1:
                # entry in the same absolute column one row up
                if t + 1 >= len(above) or above[t + 1] <= v:
                    raise ColumnNotStrictlyDecreasing(
                        f"part {v} is not below a larger part", r, col)
            if v > n:
                raise PartExceedsOrder(f"part {v} exceeds order {n}", r, col)
        if len(row) >= row[0]:
            raise RowTooLongForLargestPart(
                f"row {r} has {len(row)} parts, largest part {row[0]}",
                r, r + len(row) - 1)


@dataclass(frozen=True)
class Dpp:
    """A descending plane partition together with its ambient order ``n``."""

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_dpp(rows, self.n)

    @property
    def parts(self) -> list[int]:
        """Parts in row-major order."""
        return [v for row in self.rows for v in row]

    def cells(self):
        """Yield ``(row, column, value)`` in row-major order."""
        for r, row in enumerate(self.rows, start=1):
            for t, v in enumerate(row):
                yield r, r + t, v

    def __str__(self):
        if not self.rows:
            return "-"
        return " / ".join(" ".join(map(str, row)) for row in self.rows)


def validate_dpp(grid: Iterable[Sequence[int]], n: int) -> Dpp:
    """Build a :class:`Dpp`, raising the first violated condition."""
    return Dpp(tuple(tuple(row) for row in grid), n)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(v) for v in self.parts)
        object.__setattr__(self, "parts", parts)
        for t, v in enumerate(parts):
            if v < 1:
                raise InvalidPartition(f"part {v} is not positive")
            if t and v > parts[t - 1]:
                raise InvalidPartition(f"parts not weakly decreasing: {parts}")

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def is_admissible(self, n: int) -> bool:
        """True when every part is at most ``n`` and ``i`` occurs at most ``i - 1`` times."""
        if self.parts and self.parts[0] > n:
            return False
        return all(c <= i - 1 for i, c in self.multiplicities().items())

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return " ".join(map(str, self.parts)) if self.parts else "-"


@dataclass(frozen=True)
class MonotoneTriangle:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, row in enumerate(rows, start=1):
            if len(row) != i:
                raise InvalidTriangle(f"row {i} has {len(row)} entries", i, 1)
            for j in range(1, i):
                if row[j - 1] >= row[j]:
                    raise InvalidTriangle("row not strictly increasing", i, j + 1)
            if i > 1:
                above = rows[i - 2]
                for j in range(1, i):
                    if not row[j - 1] <= above[j - 1] <= row[j]:
                        raise InvalidTriangle("rows do not interleave", i - 1, j)
        if n and rows[-1] != tuple(range(1, n + 1)):
            raise InvalidTriangle(f"bottom row must be 1..{n}", n, 1)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def __str__(self):
        if not self.rows:
            return "-"
        return " / ".join(" ".join(map(str, row)) for row in self.rows)


def _partial_sums_ok(line: Sequence[int]) -> bool:
    s = 0
    for v in line:
        if v not in (-1, 0, 1):
            return False
        s += v
        if s not in (0, 1):
            return False
    return s == 1


@dataclass(frozen=True)
class Asm:
    """An alternating sign matrix, ``entries[i - 1][j - 1]`` is ``A_{ij}``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        for i, row in enumerate(entries, start=1):
            if len(row) != n:
                raise InvalidAsm(f"row {i} has length {len(row)}, expected {n}", i, 1)
            if not _partial_sums_ok(row):
                raise InvalidAsm("row partial sums leave {0, 1}", i, 1)
        for j in range(n):
            if not _partial_sums_ok([row[j] for row in entries]):
                raise InvalidAsm("column partial sums leave {0, 1}", 1, j + 1)

    @property
    def n(self) -> int:
        return len(self.entries)

    def nonzero(self):
        """Yield ``(i, j, value)`` for nonzero entries, 1-based."""
        for i, row in enumerate(self.entries, start=1):
            for j, v in enumerate(row, start=1):
                if v:
                    yield i, j, v

    @property
    def minus_ones(self) -> int:
        return sum(row.count(-1) for row in self.entries)

    def is_permutation_matrix(self) -> bool:
        return self.minus_ones == 0

    def __str__(self):
        if not self.entries:
            return "-"
        return "; ".join(" ".join(map(str, row)) for row in self.entries)


def is_asm_by_alternation(matrix: Sequence[Sequence[int]]) -> bool:
    """Alternative ASM test: nonzero entries alternate in sign starting and
    ending with +1 along every row and column."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        return False
    lines = [list(row) for row in matrix] + [[row[j] for row in matrix] for j in range(n)]
    for line in lines:
        if any(v not in (-1, 0, 1) for v in line):
            return False
        signs = [v for v in line if v]
        if not signs or signs[0] != 1 or signs[-1] != 1:
            return False
        if any(a == b for a, b in zip(signs, signs[1:])):
            return False
    return True


@dataclass(frozen=True)
class Permutation:
    """One-line notation ``images[i - 1] = sigma(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f"{images} is not a permutation of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def inversions(self) -> int:
        s = self.images
        return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])

    def to_asm(self) -> Asm:
        n = self.n
        return Asm(tuple(tuple(int(self.images[i] == j + 1) for j in range(n))
                         for i in range(n)))

    @classmethod
    def from_asm(cls, a: Asm) -> "Permutation":
        if a.minus_ones:
            raise AsmHasMinusOnes(f"matrix has {a.minus_ones} entries equal to -1")
        return cls(tuple(row.index(1) + 1 for row in a.entries))

    def __str__(self):
        if not self.images:
            return "-"
        sep = "" if self.n <= 9 else " "
        return sep.join(map(str, self.images))


@dataclass(frozen=True)
class DppStats:
    p: int
    k: int
    m: int
    weight: int


@dataclass(frozen=True)
class AsmStats:
    inversions: int
    minus_ones: int
    diag_equalities: int
    last_col_one_row: int
    first_row_one_col: int


def special_parts(d: Dpp) -> list[tuple[int, int, int]]:
    """Entries with value at most column minus row, as ``(row, column, value)``."""
    return [(r, c, v) for r, c, v in d.cells() if v <= c - r]


def dpp_stats(d: Dpp) -> DppStats:
    parts = d.parts
    return DppStats(
        p=len(parts),
        k=parts.count(d.n),
        m=len(special_parts(d)),
        weight=sum(parts),
    )


def inversion_number(a: Asm) -> int:
    """Sum of ``A_ij * A_kl`` over ``i > k`` and ``j < l``."""
    nz = list(a.nonzero())
    total = 0
    for i, j, x in nz:
        for k, l, y in nz:
            if i > k and j < l:
                total += x * y
    return total


def diagonal_equal_entries(t: MonotoneTriangle) -> list[int]:
    """Values ``a_{i,j}`` equal to their southeast neighbour ``a_{i+1,j+1}``,
    listed in row-major order."""
    rows = t.rows
    return [v for i in range(len(rows) - 1)
            for j, v in enumerate(rows[i]) if v == rows[i + 1][j + 1]]


def strict_diagonal_entries(t: MonotoneTriangle) -> list[tuple[int, int]]:
    """Positions ``(i-1, j)`` whose entry sits strictly between both lower
    neighbours; these are the -1 entries of the matching ASM."""
    rows = t.rows
    out = []
    for i in range(1, len(rows)):
        below, above = rows[i], rows[i - 1]
        for j in range(i):
            if below[j] < above[j] < below[j + 1]:
                out.append((i, j + 1))
    return out


def asm_stats(a: Asm) -> AsmStats:
    from .bijection import asm_to_mt

    n = a.n
    inv = inversion_number(a)
    neg = a.minus_ones
    diag = len(diagonal_equal_entries(asm_to_mt(a)))
    if inv != diag + neg:
        raise InternalInvariantViolation(
            f"I(A)={inv} but E(A)+N(A)={diag}+{neg} for {a}")
    last = next((i for i in range(1, n + 1) if a.entries[i - 1][n - 1] == 1), 0)
    first = next((j for j in range(1, n + 1) if a.entries[0][j - 1] == 1), 0)
    return AsmStats(inv, neg, diag, last, first)
