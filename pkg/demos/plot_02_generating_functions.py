"""
Weight generating functions
===========================

Compare the product formulas with generating functions read off the
enumerators.
"""

from dppasm import (
    dpp_stats,
    empirical_gf,
    enumerate_dpps,
    enumerate_dpps_no_special,
    nosp_gf_formula,
    q_count_formula,
    q_factorial,
)

for n in range(6):
    weights = [dpp_stats(d).weight for d in enumerate_dpps(n)]
    print(n, len(weights), empirical_gf(weights) == q_count_formula(n))

print()
print("all DPPs, n=4:     ", q_count_formula(4))

# Without special parts the generating function is a product of brackets
# [i] evaluated at q^i.  It counts n! objects but it is not n!_q.
n = 3
nosp = empirical_gf(dpp_stats(d).weight for d in enumerate_dpps_no_special(n))
print("no special, n=3:   ", nosp)
print("bracket product:   ", nosp_gf_formula(n))
print("q-factorial 3!_q:  ", q_factorial(n))
