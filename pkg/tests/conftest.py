import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from rowreduce import GF, QQ, matrix, textio

FIXTURES = Path(__file__).parent / "fixtures"

FIELDS = [QQ, GF(7)]
FIELD_IDS = ["QQ", "GF7"]


def load_matrix(name):
    return textio.parse_matrix((FIXTURES / name).read_text())


def load_vector(name):
    return textio.parse_vector((FIXTURES / name).read_text())


def random_matrix(rng, field, m, n):
    """Random m x n matrix, skewed toward rank deficiency.

    Rational entries lie in [-9, 9]; GF(p) entries are uniform residues.
    Sparsity, duplicated or negated rows and zeroed columns keep all ranks
    represented without leaving the entry range.
    """
    def draw():
        if field.is_rational:
            return rng.randint(-9, 9)
        return rng.randrange(field.modulus)

    density = rng.choice((1.0, 0.75, 0.5, 0.25))
    rows = [[draw() if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]
    if m > 1 and rng.random() < 0.3:
        i, j = rng.sample(range(m), 2)
        rows[j] = [-v for v in rows[i]] if rng.random() < 0.5 else list(rows[i])
    if rng.random() < 0.15:
        c = rng.randrange(n)
        for r in rows:
            r[c] = 0
    return matrix(field, rows)


def random_invertible(rng, field, n):
    from rowreduce import is_invertible
    while True:
        a = random_matrix(rng, field, n, n)
        if is_invertible(a):
            return a


def random_vector(rng, field, n):
    if field.is_rational:
        return tuple(field(rng.randint(-9, 9)) for _ in range(n))
    return tuple(field(rng.randrange(field.modulus)) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def a0():
    return load_matrix("a0.mat")


# hypothesis strategies

fields = st.sampled_from([QQ, GF(2), GF(3), GF(7), GF(13)])


@st.composite
def elements(draw, field):
    if field.is_rational:
        num = draw(st.integers(-50, 50))
        den = draw(st.integers(1, 12))
        return field(num) / field(den)
    return field(draw(st.integers(0, field.modulus - 1)))


@st.composite
def matrices(draw, field, m=None, n=None, max_dim=4):
    m = m if m is not None else draw(st.integers(1, max_dim))
    n = n if n is not None else draw(st.integers(1, max_dim))
    if field.is_rational:
        entry = st.integers(-9, 9)
    else:
        entry = st.integers(0, field.modulus - 1)
    zero_bias = st.one_of(st.just(0), entry)
    return matrix(field, [[draw(zero_bias) for _ in range(n)] for _ in range(m)])
