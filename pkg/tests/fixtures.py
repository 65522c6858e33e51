"""
Expected parameters transcribed from the published tables and families.

Only the tests read these; table generation never does.
"""

# (e, n) -> K_n
KMAX_VALUES = {
    (16, 63): 7,
    (16, 76): 7,
    (9, 55): 3,
    (64, 255): 31,
    (25, 234): 11,
    (49, 196): 24,
    (64, 283): 28,
    (81, 200): 33,
    (81, 400): 40,
    (81, 405): 40,
    (81, 162): 40,
}

# Binary records: (N, K, D, marker)
TABLE1 = [
    (252, 204, 7, '*'), (252, 196, 8, '*'), (248, 200, 7, '*'), (248, 192, 8, '*'),
    (244, 196, 7, '*'), (244, 188, 8, '*'), (240, 192, 7, '*'), (240, 184, 8, '*'),
    (252, 203, 7, 'S'), (252, 195, 8, 'S'), (251, 200, 7, 'L'), (251, 199, 7, 'S'),
    (251, 198, 7, 'S'), (251, 192, 8, 'L'), (251, 191, 8, 'S'), (251, 190, 8, 'S'),
    (250, 200, 7, 'L'), (250, 199, 7, 'S'), (250, 198, 7, 'S'), (250, 197, 7, 'S'),
    (250, 196, 7, 'L'), (250, 192, 8, 'L'), (250, 191, 8, 'S'), (250, 190, 8, 'S'),
    (249, 200, 7, 'L'), (249, 199, 7, 'S'), (249, 198, 7, 'S'), (249, 197, 7, 'S'),
    (249, 196, 7, 'S'), (249, 195, 7, 'S'), (249, 192, 8, 'L'), (249, 191, 8, 'S'),
    (249, 190, 8, 'S'), (249, 189, 8, 'S'), (248, 199, 7, 'S'), (248, 198, 7, 'S'),
    (248, 197, 7, 'S'), (248, 196, 7, 'S'), (248, 195, 7, 'S'), (248, 194, 7, 'S'),
    (248, 191, 8, 'S'), (248, 190, 8, 'S'), (248, 189, 8, 'S'), (248, 188, 8, 'S'),
    (247, 196, 7, 'L'), (247, 195, 7, 'S'), (247, 194, 7, 'S'), (247, 193, 7, 'S'),
    (247, 188, 8, 'L'), (247, 187, 8, 'S'), (246, 196, 7, 'L'), (246, 195, 7, 'S'),
    (246, 194, 7, 'S'), (246, 193, 7, 'S'), (246, 192, 7, 'S'), (246, 188, 8, 'L'),
    (246, 187, 8, 'S'), (246, 186, 8, 'S'), (245, 196, 7, 'L'), (245, 195, 7, 'S'),
    (245, 194, 7, 'S'), (245, 193, 7, 'S'), (245, 192, 7, 'S'), (245, 191, 7, 'S'),
    (245, 188, 8, 'L'), (245, 187, 8, 'S'), (245, 186, 8, 'S'), (245, 185, 8, 'S'),
    (244, 195, 7, 'S'), (244, 194, 7, 'S'), (244, 193, 7, 'S'), (244, 192, 7, 'S'),
    (244, 191, 7, 'S'), (244, 187, 8, 'S'), (244, 186, 8, 'S'), (244, 185, 8, 'S'),
    (244, 184, 8, 'S'), (243, 192, 7, 'L'), (243, 191, 7, 'S'), (243, 184, 8, 'L'),
    (243, 183, 8, 'S'), (242, 192, 7, 'L'), (242, 191, 7, 'S'), (242, 184, 8, 'L'),
    (242, 183, 8, 'S'), (241, 192, 7, 'L'), (241, 191, 7, 'S'), (241, 184, 8, 'L'),
    (241, 183, 8, 'S'), (240, 191, 7, 'S'), (240, 183, 8, 'S'),
]

# Rows whose shortest derivations end in different rules
TABLE1_AMBIGUOUS = {
    (250, 196, 7), (249, 196, 7), (248, 196, 7), (244, 192, 7), (248, 188, 8), (244, 184, 8),
}

BINARY_SEEDS = [(252, 204, 7), (252, 196, 8), (248, 200, 7), (248, 192, 8),
                (244, 196, 7), (244, 188, 8), (240, 192, 7), (240, 184, 8)]

# (q, N, K, D) sets
TABLE2 = {(4, 152, 152 - 4 * k, k + 1) for k in range(1, 8)}
TABLE3 = {(5, 468, 468 - 4 * k, k + 1) for k in range(4, 12)}
F4_153 = {(4, 153, 140, 4), (4, 153, 136, 5), (4, 153, 132, 6), (4, 153, 128, 7)}
F4_765 = {(4, 765, 765 - 6 * j, 1 + j) for j in range(18, 32)}
F7_392 = {(7, 392, 388 - 4 * j, 2 + j) for j in range(3, 24)}
F8_566 = {(8, 566, 562 - 4 * j, 2 + j) for j in range(5, 28)}
F8_567 = {(8, 567, 562 - 4 * j, 2 + j) for j in range(5, 28)}
F9_400 = {(9, 400, 396 - 4 * j, 2 + j) for j in range(3, 33)}
F9_800 = {(9, 800, 796 - 4 * j, 2 + j) for j in range(3, 40)}
F9_810 = {(9, 810, 806 - 4 * j, 2 + j) for j in range(3, 40)}
F9_324 = {(9, 324, 320 - 4 * j, 2 + j) for j in range(7, 40) if j != 10}

FAMILIES = {
    'table2': TABLE2,
    'table3': TABLE3,
    'f4-153': F4_153,
    'f4-765': F4_765,
    'f7-392': F7_392,
    'f8-566': F8_566,
    'f8-567': F8_567,
    'f9-400': F9_400,
    'f9-800': F9_800,
    'f9-810': F9_810,
    'f9-324': F9_324,
}

# Improvements claimed over earlier codes: (ours, theirs)
IMPROVEMENTS = [
    ((4, 765, 657, 19), (4, 765, 643, 19)),
    ((4, 765, 651, 20), (4, 765, 639, 20)),
    ((4, 765, 645, 21), (4, 765, 631, 21)),
    ((7, 392, 368, 7), (7, 392, 364, 7)),
    ((8, 567, 542, 7), (8, 567, 539, 7)),
    ((3, 110, 98, 4), (3, 110, 96, 4)),
]
