import pytest
from hypothesis import given, settings

from conftest import twist_words
from symplectic_rigidity.errors import WordSyntaxError
from symplectic_rigidity.exact_linalg import identity
from symplectic_rigidity.generators import HomologyClass, is_symplectic
from symplectic_rigidity.words import evaluate_word, format_word, parse_word


def test_single_factor():
    word = parse_word("t(a1)", 1)
    assert word.factors == ((HomologyClass.basis(1, 1, "a"), 1),)


def test_exponents_and_spacing():
    word = parse_word("  t(a1)   t(b1)^-1 ", 2)
    assert word.factors == (
        (HomologyClass.basis(2, 1, "a"), 1),
        (HomologyClass.basis(2, 1, "b"), -1),
    )


def test_vector_curve():
    word = parse_word("t([1, 1, 0, -1])^2", 2)
    assert word.factors == ((HomologyClass(2, (1, 1, 0, -1)), 2),)


@pytest.mark.parametrize("src, offset", [
    ("t(c9)", 2),
    ("t(a1) x", 6),
    ("t(a1", 0),
    ("t(a1)t(b1)", 5),
    ("", 0),
])
def test_syntax_errors_carry_offset(src, offset):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(src, 1)
    assert info.value.offset == offset


def test_offset_counts_bytes():
    with pytest.raises(WordSyntaxError) as info:
        parse_word("t(a1) é", 1)
    assert info.value.offset == 6


@pytest.mark.parametrize("src", ["t(a3)", "t(b0)", "t([1,0,0])", "t(a1)^0"])
def test_semantic_errors(src):
    with pytest.raises(WordSyntaxError):
        parse_word(src, 2)


def test_braid_relation():
    g = 1
    assert evaluate_word(parse_word("t(a1) t(b1) t(a1)", g)) == evaluate_word(parse_word("t(b1) t(a1) t(b1)", g))


def test_inverse_cancels():
    assert evaluate_word(parse_word("t(a1)^-1 t(a1)", 1)) == identity(2)


def test_chain_cubed():
    chain = "t(a1) t(b1) t(a2) t(b2) t(a3) t(b3)"
    assert evaluate_word(parse_word(" ".join([chain] * 3), 3)) == -identity(6)


def test_format_round_trip_example():
    src = "t(a1)  t([1,1])^-2"
    word = parse_word(src, 1)
    assert format_word(word) == "t(a1) t([1,1])^-2"


@given(twist_words())
@settings(max_examples=100, deadline=None)
def test_parse_format_fixpoint(word):
    text = format_word(word)
    reparsed = parse_word(text, word.g)
    assert reparsed == word
    assert format_word(reparsed) == text


@given(twist_words())
@settings(max_examples=100, deadline=None)
def test_words_evaluate_to_symplectic(word):
    assert is_symplectic(evaluate_word(word), word.g)
