import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from symplectic_rigidity.exact_linalg import Matrix
from symplectic_rigidity.generators import HomologyClass
from symplectic_rigidity.words import TwistWord

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def matrices(draw, rows=None, cols=None, max_size=4, elements=rationals):
    rows = rows or draw(st.integers(1, max_size))
    cols = cols or draw(st.integers(1, max_size))
    grid = draw(st.lists(st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return Matrix.of(grid)


@st.composite
def square_matrices(draw, max_size=4, elements=rationals):
    n = draw(st.integers(1, max_size))
    return draw(matrices(n, n, elements=elements))


@st.composite
def invertible_matrices(draw, n, elements=rationals):
    m = draw(matrices(n, n, elements=elements))
    if not m.is_invertible():
        # unitriangular correction keeps the draw shrinkable
        m = Matrix.of([[m[i, j] if i < j else (1 if i == j else 0) for j in range(n)] for i in range(n)])
    return m


@st.composite
def homology_classes(draw, g):
    return HomologyClass(g, tuple(draw(st.lists(st.integers(-3, 3), min_size=2 * g, max_size=2 * g))))


@st.composite
def twist_words(draw, max_genus=4, max_length=20):
    g = draw(st.integers(1, max_genus))
    factors = draw(st.lists(
        st.tuples(homology_classes(g), st.integers(-3, 3).filter(bool)),
        min_size=1,
        max_size=max_length,
    ))
    return TwistWord(g, tuple(factors))


@pytest.fixture
def rng():
    return random.Random(20240611)
