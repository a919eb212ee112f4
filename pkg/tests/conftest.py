import math
import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from bmfp.demos import example_a, example_b

TABLE_A = [[0, 3, 1, 4], [3, 0, 1, 4], [1, 1, 0, 4], [4, 4, 4, 0]]
TABLE_B = [[0, 3, 1, 15], [3, 0, 1, 4], [1, 1, 0, 4], [15, 4, 4, 0]]
LABELS = ["1", "2", "3", "4"]
MAP_TABLE = {"1": "3", "2": "3", "3": "3", "4": "1"}
SQRT3 = math.sqrt(3)


def oracle_min_coefficient(table):
    """Exact brute force over permutations of 3 distinct indices."""
    best = Fraction(1)
    for x, y, z in permutations(range(len(table)), 3):
        best = max(best, Fraction(table[x][z]) / (Fraction(table[x][y]) + Fraction(table[y][z])))
    return best


def random_table(rng: random.Random, n: int, lo: int = 1, hi: int = 20):
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = rng.randint(lo, hi)
    return d


@st.composite
def int_tables(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = draw(st.integers(1, 20))
    return d


@pytest.fixture
def ex_a():
    return example_a()


@pytest.fixture
def ex_b():
    return example_b()
