# Walkthrough: the 5-to-1 power map mod a prime, end to end.
#
# With p = 61 we have phi = 60 = 5 * 12, so raising to the 5th power maps
# exactly five messages onto every cipher.  The five-element kernel is the
# set of quintic roots of unity, and the sender's rank inside the sorted
# candidate list is what lets the receiver undo the collision.

from powmap import (
    candidate_set,
    eligible_generators,
    make_params,
    mapping_table,
    quintic_roots_prime,
    roots_bruteforce,
    run_session,
)

params = make_params(5, 61)
print(f"parameters: t={params.t} p={params.p} phi={params.phi} class={params.div_class.value}")

# Two independent routes to the same root set: a full scan, and the nested
# radical formulas (square roots of 5 and of -2(5 ± sqrt 5), all mod p).
scan = roots_bruteforce(5, 61)
radical = quintic_roots_prime(61)
print("roots by scan:    ", scan.roots)
print("roots by radicals:", radical.roots)
assert scan.roots == radical.roots

# Any root of order exactly 5 generates the rest.
print("usable generators:", eligible_generators(scan))

# The 12 x 6 table: each row holds the five messages sharing one cipher.
print("\n5-to-1 mapping for alpha = 9 (m, m*a, m*a^2, m*a^3, m*a^4 | c):")
for row, c in mapping_table(params, 9):
    print("  ", " ".join(f"{v:2d}" for v in row), "|", c)

# A message and its four shadows.
m = 28
print(f"\ncandidates sharing the cipher of m={m}:", candidate_set(m, scan))

# The full exchange: only (t, n, c, rank) travels.
tr = run_session(params, m)
print("\nsession transcript")
print(" ", tr.params_summary)
for label, value in tr.alice_steps:
    print(f"  alice {label} = {value}")
print("  wire:", tr.packet_line.strip())
for label, value in tr.bob_steps:
    print(f"  bob {label} = {value}")
print("  round trip ok:", tr.matched)
assert tr.decoded == m
