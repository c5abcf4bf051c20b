"""
Twist Words: a small expression language for products of Dehn twists
word := factor+ ; factor := "t(" curve ")" ("^" integer)? ; curve := a<i> | b<i> | [c1,...,c2g]
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import reduce

from .config import get_settings
from .errors import DimensionMismatch, DomainError, WordSyntaxError
from .exact_linalg import Matrix, identity
from .generators import HomologyClass, transvection_power

logger = logging.getLogger(__name__)

_FACTOR = re.compile(r"t\(\s*(?P<curve>[^()]*?)\s*\)(?:\^(?P<exp>[+-]?\d+))?")
_BASIS = re.compile(r"(?P<kind>[ab])(?P<index>\d+)")
_VECTOR = re.compile(r"\[\s*-?\d+(?:\s*,\s*-?\d+)*\s*\]")


@dataclass(frozen=True, slots=True)
class TwistWord:
    g: int
    factors: tuple[tuple[HomologyClass, int], ...]

    def __post_init__(self):
        if any(c.g != self.g for c, _ in self.factors):
            raise DimensionMismatch(f"every factor of a genus-{self.g} word must have genus {self.g}")
        if any(e == 0 for _, e in self.factors):
            raise DomainError("exponents must be nonzero")

    def __str__(self) -> str:
        return format_word(self)


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode("utf-8"))


def _parse_curve(src: str, text: str, start: int, g: int) -> HomologyClass:
    offset = _byte_offset(src, start)
    if match := _BASIS.fullmatch(text):
        index = int(match.group("index"))
        if not 1 <= index <= g:
            raise WordSyntaxError(f"curve index {index} outside 1..{g}", offset)
        return HomologyClass.basis(g, index, match.group("kind"))
    if _VECTOR.fullmatch(text):
        coords = tuple(int(x) for x in text.strip("[] ").split(","))
        if len(coords) != 2 * g:
            raise WordSyntaxError(f"curve vector needs {2 * g} entries, got {len(coords)}", offset)
        return HomologyClass(g, coords)
    raise WordSyntaxError(f"unknown curve {text!r}", offset)


def parse_word(src: str, g: int) -> TwistWord:
    """Parse a whitespace-separated product of twists; errors carry the byte offset"""
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    if len(src) > get_settings().max_word_length:
        raise WordSyntaxError(f"word longer than {get_settings().max_word_length} characters", 0)
    factors: list[tuple[HomologyClass, int]] = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        match = _FACTOR.match(src, pos)
        if match is None:
            raise WordSyntaxError("expected a factor t(...)", _byte_offset(src, pos))
        curve = _parse_curve(src, match.group("curve"), match.start("curve"), g)
        exponent = int(match.group("exp")) if match.group("exp") is not None else 1
        if exponent == 0:
            raise WordSyntaxError("zero exponent", _byte_offset(src, match.start("exp")))
        factors.append((curve, exponent))
        pos = match.end()
        if pos < len(src) and not src[pos].isspace():
            raise WordSyntaxError("factors must be separated by whitespace", _byte_offset(src, pos))
    if not factors:
        raise WordSyntaxError("empty word", 0)
    return TwistWord(g, tuple(factors))


def format_word(word: TwistWord) -> str:
    return " ".join(f"t({c})" if e == 1 else f"t({c})^{e}" for c, e in word.factors)


def evaluate_word(word: TwistWord) -> Matrix:
    """Product of the factors' transvection powers in written order"""
    return reduce(
        lambda acc, factor: acc @ transvection_power(*factor),
        word.factors,
        identity(2 * word.g),
    )
