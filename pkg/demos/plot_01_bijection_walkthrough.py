"""
From a descending plane partition to a permutation matrix
=========================================================

Walk one DPP through every stage of the bijection and look at the
statistics that survive the trip.
"""

from dppasm import asm_stats, asm_to_dpp, dpp_stats, dpp_to_asm, validate_dpp

# A DPP of order 6.  Row i is indented i - 1 cells.
d = validate_dpp([[6, 6, 6, 6, 5], [5, 4, 4, 4], [3, 3]], n=6)
print(d, dpp_stats(d))

# The trace keeps every intermediate object.
trace = dpp_to_asm(d)
for kind, obj in trace.stages():
    print(f"{kind:>18}: {obj}")

# Parts of the DPP are exactly the triangle entries equal to their
# southeast neighbour, so the part count equals the inversion number.
st = asm_stats(trace.asm)
print("inversions:", st.inversions, " parts:", len(d.parts))

# Four parts equal 6, so the 1 in the last column sits in row 6 - 4.
print("last-column 1 in row", st.last_col_one_row)

# Going back recovers the DPP.
assert asm_to_dpp(trace.asm).dpp == d
