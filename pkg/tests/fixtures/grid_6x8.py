"""Hand-transcribed 6x8 grid orientations.

Vertices are 1-based ``(row, column)`` pairs; each arc is ``(tail, head)``.
"""

GRID_MIN_6x8_ARCS = [((1, 1), (1, 2)), ((1, 2), (1, 3)), ((1, 3), (1, 4)), ((1, 4), (1, 5)), ((1, 5), (1, 6)), ((1, 6), (1, 7)), ((1, 7), (1, 8)), ((2, 1), (1, 1)), ((2, 1), (3, 1)), ((2, 2), (1, 2)), ((2, 2), (2, 1)), ((2, 2), (2, 3)), ((2, 3), (1, 3)), ((2, 3), (2, 4)), ((2, 3), (3, 3)), ((2, 4), (1, 4)), ((2, 4), (2, 5)), ((2, 4), (3, 4)), ((2, 5), (1, 5)), ((2, 5), (2, 6)), ((2, 5), (3, 5)), ((2, 6), (1, 6)), ((2, 6), (2, 7)), ((2, 6), (3, 6)), ((2, 7), (1, 7)), ((2, 7), (2, 8)), ((2, 7), (3, 7)), ((2, 8), (1, 8)), ((2, 8), (3, 8)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 2), (2, 2)), ((3, 2), (3, 3)), ((3, 2), (4, 2)), ((3, 3), (3, 4)), ((3, 3), (4, 3)), ((3, 4), (3, 5)), ((3, 4), (4, 4)), ((3, 5), (3, 6)), ((3, 5), (4, 5)), ((3, 6), (3, 7)), ((3, 6), (4, 6)), ((3, 7), (4, 7)), ((3, 8), (3, 7)), ((3, 8), (4, 8)), ((4, 1), (4, 2)), ((4, 2), (4, 3)), ((4, 3), (4, 4)), ((4, 4), (4, 5)), ((4, 5), (4, 6)), ((4, 6), (4, 7)), ((4, 7), (4, 8)), ((5, 1), (4, 1)), ((5, 1), (6, 1)), ((5, 2), (4, 2)), ((5, 2), (5, 1)), ((5, 2), (5, 3)), ((5, 3), (4, 3)), ((5, 3), (5, 4)), ((5, 3), (6, 3)), ((5, 4), (4, 4)), ((5, 4), (5, 5)), ((5, 4), (6, 4)), ((5, 5), (4, 5)), ((5, 5), (5, 6)), ((5, 5), (6, 5)), ((5, 6), (4, 6)), ((5, 6), (5, 7)), ((5, 6), (6, 6)), ((5, 7), (4, 7)), ((5, 7), (5, 8)), ((5, 7), (6, 7)), ((5, 8), (4, 8)), ((5, 8), (6, 8)), ((6, 1), (6, 2)), ((6, 2), (5, 2)), ((6, 2), (6, 3)), ((6, 3), (6, 4)), ((6, 4), (6, 5)), ((6, 5), (6, 6)), ((6, 6), (6, 7)), ((6, 8), (6, 7))]

GRID_MIN_6x8_SET = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (5, 4), (5, 5), (5, 6), (5, 7), (5, 8), (6, 1), (6, 2)]

GRID_MAX_6x8_ARCS = [((1, 1), (2, 1)), ((1, 2), (1, 1)), ((1, 2), (1, 3)), ((1, 3), (1, 4)), ((1, 3), (2, 3)), ((1, 4), (1, 5)), ((1, 4), (2, 4)), ((1, 5), (1, 6)), ((1, 5), (2, 5)), ((1, 6), (1, 7)), ((1, 6), (2, 6)), ((1, 7), (1, 8)), ((1, 7), (2, 7)), ((1, 8), (2, 8)), ((2, 1), (2, 2)), ((2, 1), (3, 1)), ((2, 2), (1, 2)), ((2, 2), (2, 3)), ((2, 3), (2, 4)), ((2, 4), (2, 5)), ((2, 5), (2, 6)), ((2, 6), (2, 7)), ((2, 7), (2, 8)), ((2, 8), (3, 8)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 2), (2, 2)), ((3, 2), (3, 3)), ((3, 2), (4, 2)), ((3, 3), (2, 3)), ((3, 3), (3, 4)), ((3, 3), (4, 3)), ((3, 4), (2, 4)), ((3, 4), (3, 5)), ((3, 4), (4, 4)), ((3, 5), (2, 5)), ((3, 5), (3, 6)), ((3, 5), (4, 5)), ((3, 6), (2, 6)), ((3, 6), (3, 7)), ((3, 6), (4, 6)), ((3, 7), (2, 7)), ((3, 7), (3, 8)), ((3, 7), (4, 7)), ((3, 8), (4, 8)), ((4, 1), (4, 2)), ((4, 1), (5, 1)), ((4, 2), (4, 3)), ((4, 3), (4, 4)), ((4, 4), (4, 5)), ((4, 5), (4, 6)), ((4, 6), (4, 7)), ((4, 7), (4, 8)), ((4, 8), (5, 8)), ((5, 1), (5, 2)), ((5, 1), (6, 1)), ((5, 2), (4, 2)), ((5, 2), (5, 3)), ((5, 2), (6, 2)), ((5, 3), (4, 3)), ((5, 3), (5, 4)), ((5, 3), (6, 3)), ((5, 4), (4, 4)), ((5, 4), (5, 5)), ((5, 4), (6, 4)), ((5, 5), (4, 5)), ((5, 5), (5, 6)), ((5, 5), (6, 5)), ((5, 6), (4, 6)), ((5, 6), (5, 7)), ((5, 6), (6, 6)), ((5, 7), (4, 7)), ((5, 7), (5, 8)), ((5, 7), (6, 7)), ((5, 8), (6, 8)), ((6, 1), (6, 2)), ((6, 2), (6, 3)), ((6, 3), (6, 4)), ((6, 4), (6, 5)), ((6, 5), (6, 6)), ((6, 6), (6, 7)), ((6, 7), (6, 8))]

GRID_MAX_6x8_SET = [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4), (5, 5), (5, 6), (5, 7), (5, 8)]
