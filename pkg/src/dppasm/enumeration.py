"""Exhaustive generators for small orders.

Every ``enumerate_*`` function returns a :class:`Family`, an iterable that
can be consumed any number of times.  Iteration is in canonical order
(lexicographic in the row-major part sequence for DPPs, in the apex-first
reading word for triangles); ``Family.raw()`` skips the sort and is what
counting code should use at larger ``n``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Callable, Iterable, Iterator

from .bijection import mt_to_asm
from .core import Dpp, MonotoneTriangle, Permutation

__all__ = [
    "Family",
    "enumerate_dpps", "enumerate_dpps_no_special", "enumerate_mts",
    "enumerate_asms", "enumerate_permutations", "dpp_arrangements",
]


class Family:
    """A restartable sequence of combinatorial objects."""

    def __init__(self, generate: Callable[[], Iterable], key=None):
        self._generate = generate
        self._key = key

    def raw(self) -> Iterator:
        """Objects in generation order (no sorting, constant memory)."""
        return iter(self._generate())

    def __iter__(self):
        if self._key is None:
            return self.raw()
        return iter(sorted(self.raw(), key=self._key))

    def count(self) -> int:
        return sum(1 for _ in self.raw())


def dpp_key(d: Dpp):
    return (d.parts, [len(row) for row in d.rows])


def mt_key(t: MonotoneTriangle):
    return [v for row in t.rows for v in row]


def _rows_below(above: tuple[int, ...] | None, cap: int,
                no_special: bool, pool: Counter | None) -> Iterator[tuple[int, ...]]:
    """All admissible next rows given the row above (``None`` for row 1).

    ``cap`` bounds the largest part: ``n`` for the first row, the length of
    the previous row otherwise.  ``pool`` optionally restricts parts to a
    multiset, which is consumed and restored in place.
    """
    for first in range(2, cap + 1):
        if above is not None and above[1] <= first:
            break
        if pool is not None and not pool[first]:
            continue
        if pool is not None:
            pool[first] -= 1
        # row length must stay below ``first``
        yield from _extend([first], above, first - 1, no_special, pool)
        if pool is not None:
            pool[first] += 1


def _extend(row, above, max_len, no_special, pool):
    yield tuple(row)
    t = len(row)
    if t >= max_len:
        return
    hi = row[-1]
    if above is not None:
        # entry above offset t sits at offset t + 1 of the previous row
        if t + 1 >= len(above):
            return
        hi = min(hi, above[t + 1] - 1)
    lo = t + 1 if no_special else 1
    for v in range(hi, lo - 1, -1):
        if pool is not None:
            if not pool[v]:
                continue
            pool[v] -= 1
        row.append(v)
        yield from _extend(row, above, max_len, no_special, pool)
        row.pop()
        if pool is not None:
            pool[v] += 1


def _dpp_rows(n: int, no_special: bool = False, pool: Counter | None = None):
    """Yield row tuples of every DPP of order ``n`` (subject to the filters)."""

    def rec(rows):
        if pool is None or not +pool:
            yield tuple(rows)
        cap = len(rows[-1]) if rows else n
        above = rows[-1] if rows else None
        for row in _rows_below(above, cap, no_special, pool):
            rows.append(row)
            yield from rec(rows)
            rows.pop()

    yield from rec([])


def enumerate_dpps(n: int) -> Family:
    return Family(lambda: (Dpp(rows, n) for rows in _dpp_rows(n)), dpp_key)


def enumerate_dpps_no_special(n: int) -> Family:
    return Family(lambda: (Dpp(rows, n) for rows in _dpp_rows(n, no_special=True)), dpp_key)


def _mt_rows(n: int):
    if n == 0:
        yield ()
        return

    def rec(rows):
        below = rows[0]
        if len(below) == 1:
            yield tuple(rows)
            return
        # choose entries b_j in [below_j, below_{j+1}], strictly increasing
        def choose(j, acc):
            if j == len(below) - 1:
                yield tuple(acc)
                return
            lo = below[j] if not acc else max(below[j], acc[-1] + 1)
            for v in range(lo, below[j + 1] + 1):
                acc.append(v)
                yield from choose(j + 1, acc)
                acc.pop()

        for row in choose(0, []):
            rows.insert(0, row)
            yield from rec(rows)
            rows.pop(0)

    yield from rec([tuple(range(1, n + 1))])


def enumerate_mts(n: int) -> Family:
    return Family(lambda: (MonotoneTriangle(rows) for rows in _mt_rows(n)), mt_key)


def enumerate_asms(n: int) -> Family:
    """ASMs in the order of their monotone triangles."""
    mts = enumerate_mts(n)
    return Family(lambda: (mt_to_asm(t) for t in mts))


def enumerate_permutations(n: int) -> Family:
    return Family(lambda: (Permutation(s) for s in itertools.permutations(range(1, n + 1))))


def dpp_arrangements(parts: Iterable[int], n: int) -> list[Dpp]:
    """Every DPP of order ``n`` whose multiset of parts is exactly ``parts``."""
    pool = Counter(parts)
    if any(v < 1 or v > n for v in pool):
        return []
    found = (Dpp(rows, n) for rows in _dpp_rows(n, pool=pool))
    return sorted(found, key=dpp_key)
