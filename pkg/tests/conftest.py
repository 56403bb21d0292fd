import random

import pytest

from algact.matrices import Matrix


def random_int_matrix(rng: random.Random, n: int, bound: int) -> Matrix:
    return Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def random_nonsingular(rng: random.Random, n: int, bound: int) -> Matrix:
    while True:
        m = random_int_matrix(rng, n, bound)
        if m.det() != 0:
            return m


def random_unimodular(rng: random.Random, n: int, ops: int = 12) -> Matrix:
    """Product of elementary shears and swaps: determinant ±1 by construction."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        if rng.random() < 0.25:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            c = rng.choice((-2, -1, 1, 2))
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return Matrix(rows)


@pytest.fixture
def rng():
    return random.Random(20240831)
