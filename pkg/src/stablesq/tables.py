"""Reference values of m(n, d, k), the largest codimension of U^2 over
codimension-k subspaces of degree-d forms in n variables.

Rows cover n = 3..6, k = 1..9, d = 2..9.  A None marks a cell where
k >= dim A(n)_d, so no proper table entry exists.
"""

from __future__ import annotations

D_COLUMNS = (2, 3, 4, 5, 6, 7, 8, 9)

_ROWS: dict[tuple[int, int], tuple[int | None, ...]] = {
    (3, 1): (3, 3, 3, 3, 3, 3, 3, 3),
    (3, 2): (6, 6, 6, 6, 6, 6, 6, 6),
    (3, 3): (10, 10, 10, 10, 10, 10, 10, 10),
    (3, 4): (12, 13, 13, 13, 13, 13, 13, 13),
    (3, 5): (14, 16, 17, 16, 16, 16, 16, 16),
    (3, 6): (None, 21, 21, 21, 21, 21, 21, 21),
    (3, 7): (None, 23, 24, 24, 25, 24, 24, 24),
    (3, 8): (None, 25, 27, 27, 28, 29, 27, 27),
    (3, 9): (None, 27, 30, 31, 31, 32, 33, 31),
    (4, 1): (4, 4, 4, 4, 4, 4, 4, 4),
    (4, 2): (8, 8, 8, 8, 8, 8, 8, 8),
    (4, 3): (13, 13, 13, 13, 13, 13, 13, 13),
    (4, 4): (20, 20, 20, 20, 20, 20, 20, 20),
    (4, 5): (23, 24, 25, 24, 24, 24, 24, 24),
    (4, 6): (26, 29, 29, 31, 28, 28, 28, 28),
    (4, 7): (30, 35, 35, 35, 37, 35, 35, 35),
    (4, 8): (32, 39, 40, 41, 41, 43, 40, 40),
    (4, 9): (34, 45, 45, 45, 47, 47, 49, 45),
    (5, 1): (5, 5, 5, 5, 5, 5, 5, 5),
    (5, 2): (10, 10, 10, 10, 10, 10, 10, 10),
    (5, 3): (17, 16, 16, 16, 16, 16, 16, 16),
    (5, 4): (24, 25, 24, 24, 24, 24, 24, 24),
    (5, 5): (35, 35, 35, 35, 35, 35, 35, 35),
    (5, 6): (39, 40, 40, 41, 40, 40, 40, 40),
    (5, 7): (43, 47, 45, 46, 49, 45, 45, 45),
    (5, 8): (48, 54, 55, 54, 54, 57, 54, 54),
    (5, 9): (55, 60, 60, 63, 61, 62, 65, 59),
    (6, 1): (6, 6, 6, 6, 6, 6, 6, 6),
    (6, 2): (12, 12, 12, 12, 12, 12, 12, 12),
    (6, 3): (21, 19, 19, 19, 19, 19, 19, 19),
    (6, 4): (28, 31, 28, 28, 28, 28, 28, 28),
    (6, 5): (40, 40, 41, 40, 40, 40, 40, 40),
    (6, 6): (56, 56, 56, 56, 56, 56, 56, 56),
    (6, 7): (61, 62, 62, 62, 62, 62, 62, 62),
    (6, 8): (66, 71, 68, 68, 68, 71, 68, 68),
    (6, 9): (73, 79, 81, 79, 79, 79, 81, 79),
}

PUBLISHED_M: dict[tuple[int, int, int], int | None] = {
    (n, d, k): row[D_COLUMNS.index(d)]
    for (n, k), row in _ROWS.items()
    for d in D_COLUMNS
}


def published_value(n: int, d: int, k: int) -> int | None:
    """Reference m(n, d, k), or None for untabulated cells.

    Raises KeyError outside the covered grid n = 3..6, d = 2..9, k = 1..9.
    """
    return PUBLISHED_M[(n, d, k)]


def covered(n: int, d: int, k: int) -> bool:
    return (n, d, k) in PUBLISHED_M
