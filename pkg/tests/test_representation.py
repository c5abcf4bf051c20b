import pytest

from symplectic_rigidity.errors import DimensionMismatch, DomainError
from symplectic_rigidity.exact_linalg import Matrix, identity
from symplectic_rigidity.generators import twist_matrix
from symplectic_rigidity.representation import RepresentationTuple, random_conjugate, random_invertible


def test_standard_tuple_order():
    t = RepresentationTuple.standard(2, 5)
    assert t.L(1) == twist_matrix(2, 1, "a", 5)
    assert t.L(4) == twist_matrix(2, 2, "b", 5)


def test_validation():
    with pytest.raises(DomainError):
        RepresentationTuple(2, 3, (identity(3),) * 4)
    with pytest.raises(DimensionMismatch):
        RepresentationTuple(1, 2, (identity(2),))
    with pytest.raises(DimensionMismatch):
        RepresentationTuple(1, 2, (identity(2), identity(3)))
    with pytest.raises(DomainError):
        RepresentationTuple(1, 2, (identity(2), Matrix.of([[1, 1], [1, 1]])))


def test_conjugation(rng):
    t = RepresentationTuple.standard(1)
    conjugated, m = random_conjugate(t, rng)
    assert conjugated.L(1) == m @ t.L(1) @ m.inverse()
    assert conjugated.conjugated(m.inverse()) == t


def test_random_invertible(rng):
    for _ in range(10):
        assert random_invertible(3, rng, bound=1).is_invertible()
