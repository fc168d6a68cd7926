"""Frozen expected values for the worked examples used across the suite.

Sets are stored sorted ascending.  Group listings keep power order
(1, a, a**2, ...), matching how cyclic_groups emits them.
"""

QUINTIC_ROOTS_61 = [1, 9, 20, 34, 58]
QUINTIC_ROOTS_11 = [1, 3, 4, 5, 9]
QUINTIC_ROOTS_31 = [1, 2, 4, 8, 16]
SEXTIC_ROOTS_43 = [1, 6, 7, 36, 37, 42]
SEXTIC_ROOTS_31 = [1, 5, 6, 25, 26, 30]
SEXTIC_ROOTS_13 = [1, 3, 4, 9, 10, 12]

QUINTIC_ROOTS_187 = [1, 69, 86, 103, 137]

QUINTIC_ROOTS_341 = [
    1, 4, 16, 47, 64, 70, 78, 97, 125, 126, 157, 159, 163, 188, 190,
    202, 218, 221, 225, 256, 280, 287, 295, 311, 312,
]

SEXTIC_ROOTS_403 = [
    1, 25, 30, 36, 56, 61, 68, 87, 88, 92, 94, 118, 129, 160, 181, 185,
    191, 192, 211, 212, 218, 222, 243, 274, 285, 309, 311, 315, 316,
    335, 342, 347, 367, 373, 378, 402,
]

# Sorted candidate lists for specific messages.
CANDIDATES_28_MOD_61 = [8, 11, 28, 37, 38]
CANDIDATES_3_MOD_187 = [3, 20, 37, 71, 122]
CANDIDATES_2_MOD_43 = [2, 12, 14, 29, 31, 41]
CANDIDATES_51_MOD_341 = [
    10, 18, 40, 41, 51, 72, 98, 129, 134, 142, 160, 164, 173, 175, 195,
    204, 206, 222, 226, 227, 237, 266, 288, 299, 315,
]
CANDIDATES_59_MOD_403 = [
    15, 18, 28, 34, 44, 46, 47, 59, 80, 96, 106, 109, 111, 137, 158,
    171, 189, 201, 202, 214, 232, 245, 266, 292, 294, 297, 307, 323,
    344, 356, 357, 359, 369, 375, 385, 388,
]

# 5-to-1 mapping table, p=61, alpha=9: (m, m*a, m*a^2, m*a^3, m*a^4, cipher).
TABLE_61_9 = [
    (1, 9, 20, 58, 34, 1),
    (2, 18, 40, 55, 7, 32),
    (3, 27, 60, 52, 41, 60),
    (4, 36, 19, 49, 14, 48),
    (5, 45, 39, 46, 48, 14),
    (6, 54, 59, 43, 21, 29),
    (8, 11, 38, 37, 28, 11),
    (10, 29, 17, 31, 35, 21),
    (12, 47, 57, 25, 42, 13),
    (13, 56, 16, 22, 15, 47),
    (23, 24, 33, 53, 50, 50),
    (26, 51, 32, 44, 30, 40),
]

# 6-to-1 mapping table, p=43, alpha=7.
TABLE_43_7 = [
    (1, 7, 6, 42, 36, 37, 1),
    (2, 14, 12, 41, 29, 31, 21),
    (3, 21, 18, 40, 22, 25, 41),
    (4, 28, 24, 39, 15, 19, 11),
    (5, 35, 30, 38, 8, 13, 16),
    (9, 20, 11, 34, 23, 32, 4),
    (10, 27, 17, 33, 16, 26, 35),
]

# The six power cycles of the 25 roots mod 341 (as sets).
GROUP_SETS_341 = [
    {1, 4, 16, 64, 256},
    {1, 47, 163, 159, 312},
    {1, 70, 126, 295, 190},
    {1, 78, 287, 221, 188},
    {1, 97, 157, 202, 225},
    {1, 125, 280, 218, 311},
]

# The twelve power cycles of the 36 roots mod 403 (as sets).
GROUP_SETS_403 = [
    {1, 25, 222, 311, 118, 129},
    {1, 30, 94, 402, 373, 309},
    {1, 36, 87, 311, 315, 56},
    {1, 61, 94, 92, 373, 185},
    {1, 68, 191, 92, 211, 243},
    {1, 88, 87, 402, 315, 316},
    {1, 160, 211, 311, 191, 335},
    {1, 181, 118, 402, 222, 285},
    {1, 192, 191, 402, 211, 212},
    {1, 218, 373, 311, 94, 342},
    {1, 274, 118, 92, 222, 378},
    {1, 367, 87, 92, 315, 347},
]

REPEATED_THRICE_403 = {222, 94, 211, 373, 191, 118, 87, 315}
REPEATED_FOUR_TIMES_403 = {311, 92, 402}


def primes_below(limit: int) -> list[int]:
    """Simple sieve; plenty fast for the desk-scale bounds used in tests."""
    sieve = bytearray([1]) * limit
    sieve[:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return [i for i in range(limit) if sieve[i]]
