import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import homology_classes
from symplectic_rigidity.errors import DimensionMismatch, DomainError
from symplectic_rigidity.exact_linalg import Matrix, identity
from symplectic_rigidity.generators import (
    HomologyClass,
    generator_set,
    intersection_pairing,
    is_symplectic,
    standard_blocks,
    standard_tuple,
    symplectic_form,
    transvection,
    transvection_power,
    twist_matrix,
)
from symplectic_rigidity.relations import check_braid, check_commute


def test_standard_blocks():
    u, u_hat = standard_blocks()
    assert u == Matrix.of([[1, 1], [0, 1]])
    assert u_hat == Matrix.of([[1, 0], [-1, 1]])


def test_twist_matrix_genus_two():
    assert twist_matrix(2, 2, "b") == Matrix.of([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, -1, 1],
    ])


def test_extended_twist_matrix():
    assert twist_matrix(1, 1, "a", 3) == Matrix.of([[1, 1, 0], [0, 1, 0], [0, 0, 1]])


@pytest.mark.parametrize("g", range(1, 7))
def test_twist_matrices_are_block_diagonal(g):
    u, u_hat = standard_blocks()
    for i in range(1, g + 1):
        for kind, block in (("a", u), ("b", u_hat)):
            m = twist_matrix(g, i, kind)
            lo = 2 * (i - 1)
            assert m.submatrix(range(lo, lo + 2), range(lo, lo + 2)) == block
            rest = [r for r in range(2 * g) if r not in (lo, lo + 1)]
            assert m.submatrix(rest, rest) == identity(2 * g - 2)
            assert m.submatrix(range(lo, lo + 2), rest).is_zero()


@pytest.mark.parametrize("g", range(1, 7))
def test_transvection_agrees_with_twist_matrix(g):
    for i in range(1, g + 1):
        for kind in ("a", "b"):
            assert transvection(HomologyClass.basis(g, i, kind)) == twist_matrix(g, i, kind)


@pytest.mark.parametrize("args", [(2, 3, "a"), (2, 0, "b"), (0, 1, "a")])
def test_index_out_of_range(args):
    with pytest.raises(DomainError):
        twist_matrix(*args)


def test_ambient_below_2g():
    with pytest.raises(DomainError):
        twist_matrix(2, 1, "a", 3)


def test_generator_set_ordering():
    gens = generator_set(2, 5)
    assert gens.as_tuple() == [gens.A[0], gens.B[0], gens.A[1], gens.B[1]]
    assert standard_tuple(2, 5) == gens.as_tuple()
    assert all(m.shape == (5, 5) for m in gens.as_tuple())


def test_symplectic_form():
    assert symplectic_form(1) == Matrix.of([[0, 1], [-1, 0]])
    a1, b1 = HomologyClass.basis(2, 1, "a"), HomologyClass.basis(2, 1, "b")
    assert intersection_pairing(a1, b1) == 1
    assert intersection_pairing(b1, a1) == -1


def test_is_symplectic():
    assert is_symplectic(twist_matrix(3, 2, "a"), 3)
    assert not is_symplectic(Matrix.of([[2, 0], [0, 1]]), 1)
    with pytest.raises(DimensionMismatch):
        is_symplectic(identity(3), 1)


@given(st.integers(1, 4).flatmap(homology_classes), st.integers(-4, 4))
@settings(max_examples=100, deadline=None)
def test_transvection_power_is_repeated_product(c, e):
    assert transvection_power(c, e) == transvection(c).power(e)
    assert is_symplectic(transvection_power(c, e), c.g)


@given(st.integers(1, 3).flatmap(lambda g: st.tuples(homology_classes(g), homology_classes(g))))
@settings(max_examples=100, deadline=None)
def test_transvection_formula(pair):
    c, x = pair
    image = transvection(c).apply(x.coords)
    pairing = intersection_pairing(c, x)
    assert image == tuple(xi + pairing * ci for xi, ci in zip(x.coords, c.coords))


@st.composite
def symplectic_images(draw, g):
    """A product of random transvections, so it preserves the intersection pairing"""
    classes = draw(st.lists(homology_classes(g), min_size=1, max_size=4))
    product = identity(2 * g)
    for c in classes:
        product = product @ transvection(c)
    return product


def _image(matrix: Matrix, c: HomologyClass) -> HomologyClass:
    return HomologyClass(c.g, tuple(int(x) for x in matrix.apply(c.coords)))


@given(st.integers(1, 4).flatmap(homology_classes))
@settings(max_examples=100, deadline=None)
def test_transvection_ignores_orientation(c):
    assert transvection(-c) == transvection(c)


@given(st.integers(1, 4).flatmap(homology_classes))
@settings(max_examples=100, deadline=None)
def test_transvection_is_unipotent_of_rank_at_most_one(c):
    nilpotent = transvection(c) - identity(2 * c.g)
    assert (nilpotent @ nilpotent).is_zero()
    assert nilpotent.rank() == (0 if not any(c.coords) else 1)
    assert is_symplectic(transvection(c), c.g)


@given(st.integers(1, 3).flatmap(lambda g: st.tuples(homology_classes(g), homology_classes(g))))
@settings(max_examples=200, deadline=None)
def test_pairing_decides_the_relation(pair):
    c, d = pair
    pairing = intersection_pairing(c, d)
    if pairing == 0:
        assert check_commute(transvection(c), transvection(d))
    elif abs(pairing) == 1:
        assert check_braid(transvection(c), transvection(d))


@given(st.integers(2, 3).flatmap(symplectic_images))
@settings(max_examples=50, deadline=None)
def test_disjoint_classes_commute(s):
    g = s.rows // 2
    c = _image(s, HomologyClass.basis(g, 1, "a"))
    d = _image(s, HomologyClass.basis(g, 2, "b"))
    assert intersection_pairing(c, d) == 0
    assert check_commute(transvection(c), transvection(d))


@given(st.integers(1, 3).flatmap(symplectic_images), st.sampled_from([1, -1]))
@settings(max_examples=50, deadline=None)
def test_classes_meeting_once_braid(s, sign):
    g = s.rows // 2
    c = _image(s, HomologyClass.basis(g, 1, "a"))
    d = _image(s, HomologyClass.basis(g, 1, "b"))
    if sign < 0:
        c, d = d, c
    assert intersection_pairing(c, d) == sign
    assert check_braid(transvection(c), transvection(d))


class TestHomologyClass:
    def test_parse_basis(self):
        assert HomologyClass.parse("b3", 3) == HomologyClass(3, (0, 0, 0, 0, 0, 1))

    def test_parse_vector(self):
        assert HomologyClass.parse("[1, 0, -1, 2]", 2) == HomologyClass(2, (1, 0, -1, 2))

    def test_str_round_trip(self):
        for text in ("a1", "b2", "[1,1,0,0]", "[0,0,0,0]"):
            c = HomologyClass.parse(text, 2)
            assert HomologyClass.parse(str(c), 2) == c
        assert str(HomologyClass.parse("[0,1,0,0]", 2)) == "b1"

    def test_wrong_length(self):
        with pytest.raises(DimensionMismatch):
            HomologyClass.parse("[1,0,0]", 2)

    def test_unknown_text(self):
        with pytest.raises(ValueError):
            HomologyClass.parse("c1", 2)

    def test_mixed_genera(self):
        with pytest.raises(DimensionMismatch):
            HomologyClass.basis(1, 1, "a") + HomologyClass.basis(2, 1, "a")
