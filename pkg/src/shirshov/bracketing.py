"""Nonassociative words and Lyndon-Shirshov bracketings.

Trees are immutable: a :class:`Leaf` holds a letter rank, a :class:`Node`
holds two subtrees.  :class:`Slot` is a placeholder leaf used by special
bracketings, standing for a bracketed subword that is substituted later.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Union

from .words import (
    EMPTY,
    Alphabet,
    Word,
    compare_shirshov_lex,
    is_alsw,
    longest_alsw_proper_suffix,
    lyndon_factorize,
    shirshov_key,
)


@dataclass(frozen=True)
class Leaf:
    letter: int

    @property
    def word(self) -> Word:
        return (self.letter,)

    def __len__(self):
        return 1


@dataclass(frozen=True)
class Slot:
    """Marked leaf standing for the bracketed subword ``word``."""

    word: Word

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class Node:
    left: Tree
    right: Tree
    word: Word = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "word", self.left.word + self.right.word)

    def __len__(self):
        return len(self.word)


Tree = Union[Leaf, Node, Slot]


def left_normed(first: Tree, *rest: Tree) -> Tree:
    """``[[[first rest0] rest1] ...]``."""
    t = first
    for r in rest:
        t = Node(t, r)
    return t


# ---------------------------------------------------------------------------
# standard bracketing


@functools.lru_cache(maxsize=None)
def bracket_std(u: Word) -> Tree:
    """The NLSW on the ALSW ``u``: split off the longest proper ALSW suffix, recurse."""
    u = tuple(u)
    if not u or not is_alsw(u):
        raise ValueError(f"{u!r} is not an ALSW")
    if len(u) == 1:
        return Leaf(u[0])
    v, w = longest_alsw_proper_suffix(u)
    return Node(bracket_std(v), bracket_std(w))


def bracket_down_up(u: Word, trace: list | None = None) -> Tree:
    """Bracket an ALSW by repeatedly joining the minimal letter to its predecessor.

    The current row is a sequence of trees ordered by their underlying
    words.  Every occurrence of the minimal tree that follows a
    non-minimal one is joined to it; this repeats until one tree is left.
    When ``trace`` is a list, the row after each round is appended to it.
    """
    u = tuple(u)
    if not u or not is_alsw(u):
        raise ValueError(f"{u!r} is not an ALSW")
    row: list[Tree] = [Leaf(x) for x in u]
    while len(row) > 1:
        low = min((t.word for t in row), key=shirshov_key)
        new: list[Tree] = []
        prev_low = True
        for t in row:
            # join only when the predecessor in the old row is not minimal
            is_low = t.word == low
            if is_low and not prev_low:
                new[-1] = Node(new[-1], t)
            else:
                new.append(t)
            prev_low = is_low
        row = new
        if trace is not None:
            trace.append(tuple(row))
    return row[0]


def is_nlsw(t: Tree) -> bool:
    """Check the three defining conditions of a nonassociative Lyndon-Shirshov word."""
    if isinstance(t, Leaf):
        return True
    if not isinstance(t, Node):
        return False
    if not is_alsw(t.word):
        return False
    if not (is_nlsw(t.left) and is_nlsw(t.right)):
        return False
    if isinstance(t.left, Node) and compare_shirshov_lex(t.left.right.word, t.right.word) > 0:
        return False
    return True


def leaves(t: Tree) -> list[Tree]:
    if isinstance(t, Node):
        return leaves(t.left) + leaves(t.right)
    return [t]


# ---------------------------------------------------------------------------
# special bracketing


@dataclass(frozen=True)
class SpecialBracketing:
    """Bracketing of ``u = a v b`` adapted to the ALSW occurrence ``v``.

    ``tree`` contains exactly one :class:`Slot` for ``[v]``; the subtree
    ``[v c]`` of the standard bracketing has been replaced by the
    left-normed ``[[[v][c1]]...[ck]]`` where ``c = c1...ck`` is the
    nondecreasing ALSW factorization and ``b = c d``.
    """

    word: Word
    a: Word
    v: Word
    c_factors: tuple[Word, ...]
    d: Word
    tree: Tree

    @property
    def c(self) -> Word:
        return sum(self.c_factors, EMPTY)

    def fill(self, sub: Tree | None = None) -> Tree:
        """Replace the slot by ``sub`` (default: the standard bracketing of ``v``)."""
        if sub is None:
            sub = bracket_std(self.v)
        return substitute_slot(self.tree, sub)


def substitute_slot(t: Tree, sub: Tree) -> Tree:
    if isinstance(t, Slot):
        return sub
    if isinstance(t, Node):
        return Node(substitute_slot(t.left, sub), substitute_slot(t.right, sub))
    return t


@functools.lru_cache(maxsize=4096)
def special_bracket(u: Word, a: Word, v: Word, b: Word) -> SpecialBracketing:
    u, a, v, b = tuple(u), tuple(a), tuple(v), tuple(b)
    if a + v + b != u:
        raise ValueError("u must equal a + v + b")
    if not v or not is_alsw(v):
        raise ValueError(f"{v!r} is not an ALSW")
    if not is_alsw(u):
        raise ValueError(f"{u!r} is not an ALSW")
    start, stop = len(a), len(a) + len(v)

    def walk(t: Tree, lo: int) -> Tree:
        # t spans u[lo:lo+len(t)] and covers [start, stop)
        if isinstance(t, Node):
            mid = lo + len(t.left)
            if stop <= mid:
                return Node(walk(t.left, lo), t.right)
            if start >= mid:
                return Node(t.left, walk(t.right, mid))
        if lo != start:
            raise AssertionError("no sub-bracket begins at the occurrence")
        c = u[stop:lo + len(t)]
        factors = tuple(lyndon_factorize(c)) if c else ()
        found.append(factors)
        return left_normed(Slot(v), *(bracket_std(f) for f in factors))

    found: list = []
    tree = walk(bracket_std(u), 0)
    factors = found[0]
    c_len = sum(len(f) for f in factors)
    return SpecialBracketing(u, a, v, factors, b[c_len:], tree)


# ---------------------------------------------------------------------------
# text format


def format_tree(t: Tree, alphabet: Alphabet) -> str:
    """Fully bracketed notation, e.g. ``[[x2 x1] x1]``."""
    if isinstance(t, Leaf):
        return alphabet.letters[t.letter]
    if isinstance(t, Slot):
        return "{" + alphabet.format_word(t.word) + "}"
    return f"[{format_tree(t.left, alphabet)} {format_tree(t.right, alphabet)}]"


_TOKEN = re.compile(r"\s*(?:(\[)|(\])|([A-Za-z][A-Za-z0-9_]*))")


def parse_tree(text: str, alphabet: Alphabet) -> Tree:
    """Inverse of :func:`format_tree`.

    Inside brackets, a run of letters written without spaces is read as
    consecutive leaves, so ``[x2x1]`` is accepted as ``[x2 x1]``.
    """
    tree, pos = _parse_tree_at(text, 0, alphabet)
    if text[pos:].strip():
        raise ValueError(f"trailing input at column {pos + 1}: {text[pos:]!r}")
    return tree


def _parse_tree_at(text: str, pos: int, alphabet: Alphabet) -> tuple[Tree, int]:
    items, pos = _parse_items(text, pos, alphabet, top=True)
    if len(items) != 1:
        raise ValueError(f"expected a single letter or bracket at column {pos + 1}")
    return items[0], pos


def _parse_items(text, pos, alphabet, top=False):
    items: list[Tree] = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            if top:
                return items, pos
            raise ValueError(f"unclosed bracket at column {pos + 1}")
        if m.group(1):
            inner, pos = _parse_items(text, m.end(), alphabet)
            if len(inner) != 2:
                raise ValueError(f"a bracket needs exactly two entries (column {m.start(1) + 1})")
            items.append(Node(*inner))
            if top:
                return items, pos
        elif m.group(2):
            if top:
                return items, pos
            return items, m.end()
        else:
            items.extend(Leaf(r) for r in alphabet.parse_word(m.group(3)))
            pos = m.end()
            if top:
                return items, pos
