"""Exhaustive verification suites used by ``dppasm verify``.

Each suite checks one claim for a single order ``n`` and returns a
:class:`SuiteResult`; nothing here raises on a failed property.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .bijection import asm_to_dpp, asm_to_mt, dpp_to_asm
from .core import asm_stats, diagonal_equal_entries, dpp_stats, inversion_number
from .enumeration import (
    enumerate_asms,
    enumerate_dpps,
    enumerate_dpps_no_special,
    enumerate_mts,
    enumerate_permutations,
)
from .errors import DppasmError, InternalInvariantViolation
from .formats import dumps
from .genfunc import count_formula, empirical_gf, nosp_gf_formula, q_count_formula

SUITES = ("roundtrip", "stats", "gf", "inversion-identity", "conjecture3-m0")


@dataclass
class SuiteResult:
    suite: str
    n: int
    checked: int = 0
    failed: int = 0
    counterexample: str | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, witness=None, why: str = ""):
        self.checked += 1
        if not passed:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = (dumps(witness) if witness is not None else "") + (
                    f" ({why})" if why else "")

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.suite} n={self.n}: {self.checked - self.failed}/{self.checked} passed {status}"
        if self.note:
            line += f" [{self.note}]"
        return line


def _guarded(res: SuiteResult, obj, check):
    try:
        passed, why = check(obj)
    except (DppasmError, InternalInvariantViolation) as exc:
        passed, why = False, f"{type(exc).__name__}: {exc}"
    res.record(passed, obj, why)


def check_roundtrip(n: int) -> SuiteResult:
    res = SuiteResult("roundtrip", n)

    def dpp_side(d):
        back = asm_to_dpp(dpp_to_asm(d).asm).dpp
        return back == d, f"came back as {back}"

    def perm_side(s):
        a = s.to_asm()
        back = dpp_to_asm(asm_to_dpp(a).dpp).asm
        return back == a, f"came back as {back}"

    for d in enumerate_dpps_no_special(n).raw():
        _guarded(res, d, dpp_side)
    for s in enumerate_permutations(n).raw():
        _guarded(res, s, perm_side)
    return res


def check_stats(n: int) -> SuiteResult:
    """Parts become inversions; parts equal to n fix the last-column 1."""
    res = SuiteResult("stats", n)

    def transport(d):
        tr = dpp_to_asm(d)
        st = dpp_stats(d)
        inv = inversion_number(tr.asm)
        classical = tr.permutation.inversions()
        last = next(i for i, row in enumerate(tr.asm.entries, 1) if row[-1] == 1) if n else 0
        ok = st.p == inv == classical and st.k == n - last
        return ok, f"p={st.p} k={st.k} vs I={inv} ({classical}) last={last}"

    for d in enumerate_dpps_no_special(n).raw():
        _guarded(res, d, transport)
    return res


def check_gf(n: int) -> SuiteResult:
    res = SuiteResult("gf", n)
    dpps = list(enumerate_dpps(n).raw())
    nosp = list(enumerate_dpps_no_special(n).raw())

    full = empirical_gf(dpp_stats(d).weight for d in dpps)
    res.record(full == q_count_formula(n), None, f"empirical {full} != q-product formula")
    part = empirical_gf(dpp_stats(d).weight for d in nosp)
    res.record(part == nosp_gf_formula(n), None, f"empirical {part} != bracket product")
    total = count_formula(n)
    res.record(total == len(dpps) == enumerate_mts(n).count() == q_count_formula(n)(1),
               None, f"count formula {total} vs {len(dpps)} DPPs")
    res.record(len(nosp) == factorial(n) == nosp_gf_formula(n)(1), None,
               f"{len(nosp)} DPPs without special parts, expected {factorial(n)}")
    return res


def check_inversion_identity(n: int) -> SuiteResult:
    """I(A) from the raw double sum against the triangle scan plus -1 count."""
    res = SuiteResult("inversion-identity", n)

    def identity(a):
        inv = inversion_number(a)
        e = len(diagonal_equal_entries(asm_to_mt(a)))
        return inv == e + a.minus_ones, f"I={inv} E={e} N={a.minus_ones}"

    for a in enumerate_asms(n).raw():
        _guarded(res, a, identity)
    return res


def check_conjecture3_m0(n: int) -> SuiteResult:
    """Joint distribution of (parts, parts equal to n) against
    (inversions, last-column position), and the first-row phrasing."""
    res = SuiteResult("conjecture3-m0", n)
    lhs: Counter = Counter()
    lhs_first: Counter = Counter()
    for d in enumerate_dpps_no_special(n).raw():
        st = dpp_stats(d)
        lhs[st.p, st.k] += 1
        # k parts equal to n <-> a 1 in column k + 1 of the first row
        lhs_first[st.p, st.k + 1 if n else 0] += 1
    rhs: Counter = Counter()
    rhs_first: Counter = Counter()
    for s in enumerate_permutations(n).raw():
        st = asm_stats(s.to_asm())
        rhs[st.inversions, n - st.last_col_one_row] += 1
        rhs_first[st.inversions, st.first_row_one_col] += 1
    for key in sorted(set(lhs) | set(rhs)):
        res.record(lhs[key] == rhs[key], None,
                   f"(p, k)={key}: {lhs[key]} DPPs vs {rhs[key]} permutations")
    res.record(lhs_first == rhs_first, None, "first-row column distribution differs")
    matched = sum(min(lhs[k], rhs[k]) for k in lhs)
    res.note = f"{matched} pairs matched"
    return res


_CHECKS = {
    "roundtrip": check_roundtrip,
    "stats": check_stats,
    "gf": check_gf,
    "inversion-identity": check_inversion_identity,
    "conjecture3-m0": check_conjecture3_m0,
}


def run_suite(name: str, n_max: int) -> list[SuiteResult]:
    """Run one suite (or ``"all"``) for every ``n`` in ``0..n_max``."""
    names = SUITES if name == "all" else (name,)
    if any(s not in _CHECKS for s in names):
        raise ValueError(f"unknown suite {name!r}")
    return [_CHECKS[s](n) for s in names for n in range(n_max + 1)]
