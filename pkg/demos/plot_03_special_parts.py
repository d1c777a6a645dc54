"""
Where the bijection stops
=========================

Special parts break the uniqueness that the construction relies on.
"""

from dppasm import dpp_arrangements, special_parts, validate_dpp

d = validate_dpp([[4, 4, 3], [3, 1]], n=4)
print(d, "special parts:", special_parts(d))

# The same multiset of parts can be arranged in two ways.
for arrangement in dpp_arrangements([5, 5, 5, 3, 1], n=5):
    print(arrangement, special_parts(arrangement))

# Without special parts there is exactly one arrangement.
print([str(e) for e in dpp_arrangements([4, 4, 3, 3], n=4) if not special_parts(e)])
