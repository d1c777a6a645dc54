"""
Joint distribution of parts and maximal parts
=============================================

Tabulate (number of parts, parts equal to n) over DPPs without special
parts next to (inversions, n - row of the last-column 1) over
permutations.
"""

from collections import Counter

from dppasm import asm_stats, dpp_stats, enumerate_dpps_no_special, enumerate_permutations

n = 4
left = Counter()
for d in enumerate_dpps_no_special(n):
    st = dpp_stats(d)
    left[st.p, st.k] += 1

right = Counter()
for s in enumerate_permutations(n):
    st = asm_stats(s.to_asm())
    right[st.inversions, n - st.last_col_one_row] += 1

print("  p  k  DPPs  perms")
for key in sorted(left | right):
    print(f"{key[0]:3d}{key[1]:3d}{left[key]:6d}{right[key]:7d}")
assert left == right
