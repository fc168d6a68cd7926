# Walkthrough: the cyclic anatomy of a t**2-element root set.
#
# Every root of order exactly t spins out a cycle (1, a, a^2, ..., a^(t-1)).
# Collecting the distinct cycles partitions the root set into g groups:
# six for t = 5 (25 roots), twelve for t = 6 (36 roots).  Roots of lower
# order recur across cycles, and laying the cycles out as a g x t matrix
# exposes them as whole columns: exactly the columns whose index shares a
# factor with t.  Those values can never seed a full cycle.  The group
# sizes and repetition counts are the raw material for events with
# probability k/t or k/t**2.

import math

from powmap import cyclic_groups, group_matrix, multiplicity_report, root_set

# --- 25 quintic roots mod 341
gp = cyclic_groups(root_set(5, 31, 11))
print(f"{len(gp.groups)} cycles among the 25 quintic roots mod 341:")
for g in gp.groups:
    print("  ", g)
print("repetitions beyond the shared 1:", multiplicity_report(gp))
print("(5 is prime, so distinct cycles only meet at 1)")

# --- 36 sextic roots mod 403
gp = cyclic_groups(root_set(6, 31, 13))
print(f"\n{len(gp.groups)} cycles among the 36 sextic roots mod 403:")
matrix, ineligible = group_matrix(gp)
bad_cols = [j for j in range(6) if math.gcd(j, 6) > 1]
header = "   ".join(f"a^{j}{'*' if j in bad_cols else ' '}" for j in range(6))
print("   " + header + "   (* = column index shares a factor with 6)")
for row in matrix:
    print("  ", " ".join(f"{v:4d}" for v in row))

report = multiplicity_report(gp)
print("repeated in 3 cycles:", report[3], "(the order-3 roots)")
print("repeated in 4 cycles:", report[4], "(the order-2 roots)")
print("unusable as initial values:", ineligible)
