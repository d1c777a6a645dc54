"""The bijection between DPPs without special parts and permutation matrices.

The forward direction is

    Dpp -> Partition -> MonotoneTriangle -> Asm

and every stage is recorded in a :class:`BijectionTrace`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Asm,
    Dpp,
    MonotoneTriangle,
    Partition,
    Permutation,
    asm_stats,
    diagonal_equal_entries,
    dpp_stats,
    special_parts,
    strict_diagonal_entries,
)
from .errors import (
    AsmHasMinusOnes,
    DppasmError,
    HasSpecialParts,
    InternalInvariantViolation,
    MultiplicityTooHigh,
    PartExceedsOrder,
    TriangleHasMinusOnes,
)

__all__ = [
    "BijectionTrace",
    "dpp_to_partition", "partition_to_dpp",
    "partition_to_mt", "mt_to_partition",
    "mt_to_asm", "asm_to_mt",
    "mt_to_permutation", "permutation_to_mt",
    "dpp_to_asm", "asm_to_dpp",
]


@dataclass(frozen=True)
class BijectionTrace:
    dpp: Dpp
    partition: Partition
    triangle: MonotoneTriangle
    asm: Asm
    permutation: Permutation

    @property
    def n(self) -> int:
        return self.dpp.n

    def stages(self):
        """``(kind, object)`` pairs in pipeline order."""
        return [
            ("dpp", self.dpp),
            ("partition", self.partition),
            ("monotone-triangle", self.triangle),
            ("asm", self.asm),
            ("permutation", self.permutation),
        ]


def dpp_to_partition(d: Dpp) -> Partition:
    sp = special_parts(d)
    if sp:
        r, c, v = sp[0]
        raise HasSpecialParts(f"{d} has special part {v} at ({r}, {c})")
    return Partition(tuple(sorted(d.parts, reverse=True)))


def _check_admissible(p: Partition, n: int) -> None:
    if p.parts and p.parts[0] > n:
        raise PartExceedsOrder(f"part {p.parts[0]} exceeds order {n}")
    for i, c in sorted(p.multiplicities().items()):
        if c > i - 1:
            raise MultiplicityTooHigh(f"{c} parts equal to {i}, at most {i - 1} allowed")


def partition_to_dpp(p: Partition, n: int) -> Dpp:
    """Fill rows greedily, starting a new row whenever the next part would
    be special at the end of the current one."""
    _check_admissible(p, n)
    rows: list[list[int]] = []
    for v in p.parts:
        # appending to the current row puts v at offset len(row), where it is
        # special iff v <= len(row)
        if rows and v > len(rows[-1]):
            rows[-1].append(v)
        else:
            rows.append([v])
    try:
        d = Dpp(tuple(map(tuple, rows)), n)
    except DppasmError as exc:
        raise InternalInvariantViolation(f"insertion of {p} produced invalid DPP: {exc}") from exc
    if special_parts(d):
        raise InternalInvariantViolation(f"insertion of {p} produced special parts")
    return d


def partition_to_mt(p: Partition, n: int) -> MonotoneTriangle:
    """Lay border strips of ``n, n-1, ..., 1`` into the triangle.

    The strip of value ``i`` starts at bottom cell ``(n, i)`` and climbs,
    stepping northeast to ``(r-1, c)`` whenever that cell is free and
    otherwise northwest to ``(r-1, c-1)`` while northwest steps remain; it
    uses exactly as many northwest steps as ``i`` has copies in ``p``.
    """
    _check_admissible(p, n)
    mult = p.multiplicities()
    grid: dict[tuple[int, int], int] = {}
    for i in range(n, 0, -1):
        budget = mult.get(i, 0)
        r, c = n, i
        grid[r, c] = i
        while r > 1:
            if c <= r - 1 and (r - 1, c) not in grid:
                r -= 1
            elif budget and c > 1 and (r - 1, c - 1) not in grid:
                r, c = r - 1, c - 1
                budget -= 1
            else:
                break
            grid[r, c] = i
        if budget:
            raise InternalInvariantViolation(
                f"strip of {i}s stopped at ({r}, {c}) with {budget} northwest steps unused")
    missing = [(r, c) for r in range(1, n + 1) for c in range(1, r + 1) if (r, c) not in grid]
    if missing:
        raise InternalInvariantViolation(f"cells {missing} left empty for {p}")
    t = MonotoneTriangle(tuple(tuple(grid[r, c] for c in range(1, r + 1))
                               for r in range(1, n + 1)))
    if strict_diagonal_entries(t):
        raise InternalInvariantViolation(f"triangle for {p} has a strict diagonal pair")
    return t


def _require_no_minus_ones(t: MonotoneTriangle) -> None:
    bad = strict_diagonal_entries(t)
    if bad:
        i, j = bad[0]
        raise TriangleHasMinusOnes(f"entry ({i}, {j}) lies strictly between its lower neighbours")


def mt_to_partition(t: MonotoneTriangle) -> Partition:
    _require_no_minus_ones(t)
    return Partition(tuple(sorted(diagonal_equal_entries(t), reverse=True)))


def mt_to_asm(t: MonotoneTriangle) -> Asm:
    n = t.n
    prev: set[int] = set()
    rows = []
    for row in t.rows:
        cur = set(row)
        rows.append(tuple((j in cur) - (j in prev) for j in range(1, n + 1)))
        prev = cur
    return Asm(tuple(rows))


def asm_to_mt(a: Asm) -> MonotoneTriangle:
    n = a.n
    sums = [0] * n
    rows = []
    for row in a.entries:
        sums = [s + v for s, v in zip(sums, row)]
        rows.append(tuple(j + 1 for j in range(n) if sums[j] == 1))
    return MonotoneTriangle(tuple(rows))


def mt_to_permutation(t: MonotoneTriangle) -> Permutation:
    _require_no_minus_ones(t)
    images = []
    prev: set[int] = set()
    for row in t.rows:
        (new,) = set(row) - prev
        images.append(new)
        prev = set(row)
    return Permutation(tuple(images))


def permutation_to_mt(s: Permutation) -> MonotoneTriangle:
    return MonotoneTriangle(tuple(tuple(sorted(s.images[:i]))
                                  for i in range(1, s.n + 1)))


def _check_trace(tr: BijectionTrace) -> BijectionTrace:
    ds = dpp_stats(tr.dpp)
    st = asm_stats(tr.asm)
    if ds.p != st.inversions or ds.k != tr.n - st.last_col_one_row:
        raise InternalInvariantViolation(
            f"statistics not transported: {ds} vs {st} for {tr.dpp}")
    return tr


def dpp_to_asm(d: Dpp) -> BijectionTrace:
    p = dpp_to_partition(d)
    t = partition_to_mt(p, d.n)
    return _check_trace(BijectionTrace(d, p, t, mt_to_asm(t), mt_to_permutation(t)))


def asm_to_dpp(a: Asm) -> BijectionTrace:
    if a.minus_ones:
        raise AsmHasMinusOnes(f"matrix has {a.minus_ones} entries equal to -1")
    t = asm_to_mt(a)
    p = mt_to_partition(t)
    d = partition_to_dpp(p, a.n)
    return _check_trace(BijectionTrace(d, p, t, a, mt_to_permutation(t)))
