# Walkthrough: the 6-to-1 power map, where the exponent is composite.
#
# Degree 6 brings two wrinkles degree 5 does not have.  First, the root
# set contains elements of order 2 and 3 that cannot generate all six
# roots, so the generator must be screened by its multiplicative order.
# Second, for a semiprime modulus the receiver extracts the sixth root
# factor by factor (a square root step and a cube root step mod each
# prime) because no single inverse exponent exists there.

from powmap import (
    eligible_generators,
    extract_root,
    make_params,
    mapping_table,
    roots_bruteforce,
    run_session,
    sextic_roots_prime,
)

# --- prime modulus p = 43, phi = 42 = 6 * 7
rs = sextic_roots_prime(43)
print("sextic roots mod 43:", rs.roots)
assert rs.roots == roots_bruteforce(6, 43).roots
print("orders:", rs.orders)
print("eligible generators (order exactly 6):", eligible_generators(rs))

params = make_params(6, 43)
print("\n6-to-1 mapping for alpha = 7:")
for row, c in mapping_table(params, 7):
    print("  ", " ".join(f"{v:2d}" for v in row), "|", c)

tr = run_session(params, 2)
print("\nsession m=2:", tr.packet_line.strip())
bob = dict(tr.bob_steps)
print(f"receiver: a={bob['a']} res={bob['res']} root={bob['root']} decoded={bob['decoded']}")
assert tr.matched

# --- semiprime modulus n = 31 * 13 = 403, phi = 360 (divisible by 36)
params = make_params(6, 31, 13)
tr = run_session(params, 59)
print("\nsession m=59 mod 403:", tr.packet_line.strip(), "-> decoded", tr.decoded)
assert tr.matched

r = extract_root(233, params)
print(f"a sixth root of 233 mod 403: {r} (check: {r}^6 mod 403 = {pow(r, 6, 403)})")
