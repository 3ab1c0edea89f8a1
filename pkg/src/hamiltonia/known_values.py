"""Published minimum Hamiltonian cycle counts and ceil(h) values, keyed by (n, k).

Minima marked as connectivity-2-only were obtained by checking only graphs
of vertex connectivity 2 and are listed separately.
"""

KNOWN_MINIMA = {
    (5, 4): 12, (6, 4): 16, (7, 4): 23, (8, 4): 29, (9, 4): 36, (10, 4): 36,
    (11, 4): 48, (12, 4): 60, (13, 4): 72, (14, 4): 72, (15, 4): 72, (16, 4): 72,
    (6, 5): 60, (8, 5): 177, (10, 5): 480, (12, 5): 576, (14, 5): 1296,
    (7, 6): 360, (8, 6): 744, (9, 6): 1553, (10, 6): 3214, (11, 6): 6564,
    (12, 6): 12000, (13, 6): 22680, (14, 6): 14400,
    (8, 7): 2520, (10, 7): 14963, (12, 7): 87808, (14, 7): 430920,
}

KNOWN_MINIMA_KAPPA2 = {
    (17, 4): 96, (18, 4): 108,
    (16, 5): 3888, (18, 5): 3456,
    (15, 6): 29760, (16, 6): 57600, (17, 6): 118080, (18, 6): 239040,
    (16, 7): 518400, (18, 7): 2937600,
}

KNOWN_CEIL_H = {
    (5, 4): 18, (6, 4): 21, (7, 4): 24, (8, 4): 28, (9, 4): 32, (10, 4): 36,
    (11, 4): 42, (12, 4): 48, (13, 4): 55, (14, 4): 63, (15, 4): 72, (16, 4): 83,
    (17, 4): 96, (18, 4): 110,
    (6, 5): 96, (8, 5): 175, (10, 5): 317, (12, 5): 576, (14, 5): 1047,
    (16, 5): 1902, (18, 5): 3456,
    (7, 6): 600, (8, 6): 945, (9, 6): 1488, (10, 6): 2343, (11, 6): 3689,
    (12, 6): 5808, (13, 6): 9146, (14, 6): 14400, (15, 6): 22675, (16, 6): 35704,
    (17, 6): 56219, (18, 6): 88523,
    (8, 7): 4320, (10, 7): 14299, (12, 7): 47324, (14, 7): 156629, (16, 7): 518400,
    (18, 7): 1715775,
}
