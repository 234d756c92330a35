"""Thompson's group F as reduced tree pairs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .forest import (
    CARET,
    LEAF,
    Forest,
    ParseError,
    format_tree,
    is_expansion_of,
    leaf_count,
    minimal_common_expansion,
    parse_tree,
    reduce_pair,
    replay,
)


@dataclass(frozen=True, order=True)
class GroupElement:
    """Reduced representative ``[minus, plus]`` of an element of F.

    Build instances through :func:`reduce` (or the helpers below); the
    constructor does not reduce.
    """

    minus: tuple
    plus: tuple

    def __str__(self) -> str:
        return f"[{format_tree(self.minus)},{format_tree(self.plus)}]"

    def __repr__(self) -> str:
        return f"GroupElement({str(self)!r})"

    @property
    def leaves(self) -> int:
        return leaf_count(self.minus)

    def is_identity(self) -> bool:
        return self.minus == LEAF and self.plus == LEAF

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __invert__(self) -> "GroupElement":
        return inverse(self)


IDENTITY = GroupElement(LEAF, LEAF)


def reduce(minus, plus) -> GroupElement:
    if leaf_count(minus) != leaf_count(plus):
        raise ValueError(
            f"tree pair needs equal leaf counts, got {leaf_count(minus)} and {leaf_count(plus)}"
        )
    a, b = reduce_pair(Forest.of_tree(minus), Forest.of_tree(plus))
    return GroupElement(a.trees[0], b.trees[0])


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """``[t-, t+][u-, u+] = [t-, u+]`` once ``t+ == u-`` after expansion."""
    gp, hm = Forest.of_tree(g.plus), Forest.of_tree(h.minus)
    middle = minimal_common_expansion(gp, hm)
    left = replay(Forest.of_tree(g.minus), is_expansion_of(middle, gp))
    right = replay(Forest.of_tree(h.plus), is_expansion_of(middle, hm))
    return reduce(left.trees[0], right.trees[0])


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(g.plus, g.minus)


def generator(i: int) -> GroupElement:
    """x_i: x_0 = [((00)0), (0(00))], and x_{i+1} hangs x_i off the right of a root caret."""
    if i < 0:
        raise ValueError(f"generator index must be >= 0, got {i}")
    minus, plus = (CARET, LEAF), (LEAF, CARET)
    for _ in range(i):
        minus, plus = (LEAF, minus), (LEAF, plus)
    return GroupElement(minus, plus)


def power(g: GroupElement, e: int) -> GroupElement:
    base = g if e >= 0 else inverse(g)
    out = IDENTITY
    for _ in range(abs(e)):
        out = multiply(out, base)
    return out


def verify_relation(i: int, j: int) -> bool:
    """Check ``x_j x_i == x_i x_{j+1}``."""
    if not 0 <= i < j:
        raise ValueError(f"relation needs 0 <= i < j, got i={i}, j={j}")
    return multiply(generator(j), generator(i)) == multiply(generator(i), generator(j + 1))


def evaluate_word(word: Iterable[tuple[int, int]]) -> GroupElement:
    out = IDENTITY
    for idx, exp in word:
        if exp not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {exp}")
        x = generator(idx)
        out = multiply(out, x if exp == 1 else inverse(x))
    return out


_WORD_TOKEN = re.compile(r"x(\d+)(\^-1|\^\+?1)?")


def parse_word(text: str) -> list[tuple[int, int]]:
    """Parse ``"x1 x0^-1 x2"`` style words (whitespace or '*' separated)."""
    word = []
    for tok in re.split(r"[\s*]+", text.strip()):
        if not tok:
            continue
        m = _WORD_TOKEN.fullmatch(tok)
        if m is None:
            raise ParseError(f"bad word token {tok!r}")
        word.append((int(m.group(1)), -1 if m.group(2) == "^-1" else 1))
    return word


def parse_element(text: str) -> GroupElement:
    """Parse ``[Tree,Tree]``; the result is reduced."""
    s = text.strip()
    if len(s) < 2 or s[0] != "[" or s[-1] != "]":
        raise ParseError(f"element literal must look like [Tree,Tree], got {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise ParseError(f"element literal needs exactly two trees, got {text!r}")
    minus, plus = parse_tree(parts[0]), parse_tree(parts[1])
    if leaf_count(minus) != leaf_count(plus):
        raise ParseError(f"trees in {text!r} have different leaf counts")
    return reduce(minus, plus)
