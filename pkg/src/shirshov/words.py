"""Words over a finite ordered alphabet and Lyndon-Shirshov combinatorics.

A word is a plain tuple of letter ranks; rank ``i`` stands for the
``i``-th letter of an :class:`Alphabet` and higher rank means greater
letter.  Two orders live here and must not be confused:

* :func:`compare_shirshov_lex` -- letterwise, with a proper prefix
  *greater* than its extensions.  All ALSW/NLSW combinatorics use it.
* :func:`compare_deglex` -- shorter words first, then letterwise.  This
  is the monomial order used for leading terms of polynomials.

The generic functions (comparison, ALSW test, elimination) accept
tuples of any mutually comparable letters, so they also work on words
over the derived alphabets produced by :func:`eliminate`.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

Word = tuple
EMPTY: Word = ()

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class AlphabetError(ValueError):
    """Bad alphabet declaration, unknown letter or ambiguous word text."""


class Alphabet:
    """A finite totally ordered set of named letters.

    ``Alphabet(["x1", "x2"])`` declares ``x1 < x2``.
    """

    def __init__(self, letters: Sequence[str]):
        letters = tuple(letters)
        if not letters:
            raise AlphabetError("alphabet must be nonempty")
        for name in letters:
            if not _NAME.fullmatch(name):
                raise AlphabetError(f"invalid letter name {name!r}")
        if len(set(letters)) != len(letters):
            raise AlphabetError("letter names must be distinct")
        self.letters = letters
        self._rank = {name: i for i, name in enumerate(letters)}

    @classmethod
    def standard(cls, n: int) -> Alphabet:
        """The alphabet ``x1 < x2 < ... < xn``."""
        return cls([f"x{i}" for i in range(1, n + 1)])

    @classmethod
    def parse(cls, text: str) -> Alphabet:
        """Parse ``"x1 < x2 < x3"`` (an optional ``alphabet:`` prefix is allowed)."""
        text = text.strip()
        if text.startswith("alphabet:"):
            text = text[len("alphabet:"):]
        names = [part.strip() for part in text.split("<")]
        if any(not name for name in names):
            raise AlphabetError(f"malformed alphabet declaration {text!r}")
        return cls(names)

    @classmethod
    def infer(cls, *texts: str) -> Alphabet:
        """Guess an alphabet from word texts such as ``x2x1x1``.

        Letters are maximal runs of the form ``<alpha><digits>``; they are
        ordered by their alphabetic stem, then numerically.
        """
        found = set()
        for text in texts:
            found.update(re.findall(r"[A-Za-z]+[0-9]*", text))
        if not found:
            raise AlphabetError("cannot infer an alphabet from empty input")

        def key(name):
            m = re.fullmatch(r"([A-Za-z]+)([0-9]*)", name)
            return m.group(1), int(m.group(2) or -1)

        return cls(sorted(found, key=key))

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({' < '.join(self.letters)})"

    def declaration(self) -> str:
        return "alphabet: " + " < ".join(self.letters)

    def rank(self, name: str) -> int:
        try:
            return self._rank[name]
        except KeyError:
            raise AlphabetError(f"unknown letter {name!r}") from None

    def validate(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        for r in word:
            if not isinstance(r, int) or not 0 <= r < len(self.letters):
                raise AlphabetError(f"letter rank {r!r} outside alphabet of size {len(self)}")
        return word

    def parse_word(self, text: str) -> Word:
        """Parse a whitespace-free letter sequence, e.g. ``x2x1x1``.

        Tokenization is greedy longest match; text admitting more than one
        tokenization is rejected.
        """
        text = text.strip()
        if text in ("", "1", "ε"):
            return EMPTY
        names = sorted(self.letters, key=len, reverse=True)
        # count[i] = number of tokenizations of text[i:], capped at 2
        count = [0] * (len(text) + 1)
        count[len(text)] = 1
        for i in range(len(text) - 1, -1, -1):
            count[i] = min(2, sum(count[i + len(n)] for n in names if text.startswith(n, i)))
        if count[0] == 0:
            raise AlphabetError(f"cannot read {text!r} over {self!r}")
        if count[0] > 1:
            raise AlphabetError(f"ambiguous word {text!r} over {self!r}")
        word, i = [], 0
        while i < len(text):
            name = next(n for n in names if text.startswith(n, i) and count[i + len(n)])
            word.append(self._rank[name])
            i += len(name)
        return tuple(word)

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        return "".join(self.letters[r] for r in word)

    def format_letter(self, letter: Any) -> str:
        """Names for plain ranks and (nested) elimination letters."""
        if isinstance(letter, EliminationLetter):
            base = self.format_letter(letter.base)
            if isinstance(letter.base, EliminationLetter):
                base = f"({base})"
            return f"{base}^{letter.tail}"
        return self.letters[letter]


# ---------------------------------------------------------------------------
# orders


def compare_shirshov_lex(u: Sequence, v: Sequence) -> int:
    """Three-way comparison in the prefix-greater lexicographic order.

    Returns -1, 0 or 1.  At the first difference the greater letter wins;
    a proper prefix is greater than any of its extensions.
    """
    for x, y in zip(u, v):
        if x != y:
            return 1 if x > y else -1
    if len(u) == len(v):
        return 0
    return 1 if len(u) < len(v) else -1


def compare_deglex(u: Sequence, v: Sequence) -> int:
    """Three-way comparison in the degree-lexicographic order."""
    if len(u) != len(v):
        return -1 if len(u) < len(v) else 1
    return compare_shirshov_lex(u, v)


shirshov_key = functools.cmp_to_key(compare_shirshov_lex)


def deglex_key(u: Word) -> tuple:
    return len(u), u


def shirshov_greater(u: Sequence, v: Sequence) -> bool:
    return compare_shirshov_lex(u, v) > 0


# ---------------------------------------------------------------------------
# associative Lyndon-Shirshov words


def _require_nonempty(u: Sequence) -> None:
    if len(u) == 0:
        raise ValueError("the empty word is not a Lyndon-Shirshov word")


def is_alsw(u: Sequence) -> bool:
    """True iff ``u`` is strictly greater than each of its proper suffixes."""
    _require_nonempty(u)
    u = tuple(u)
    return all(compare_shirshov_lex(u, u[i:]) > 0 for i in range(1, len(u)))


def is_alsw_by_elimination(u: Sequence) -> bool:
    """ALSW test through iterated elimination down to a single letter."""
    _require_nonempty(u)
    u = tuple(u)
    while len(u) > 1:
        if u[0] == min(u):
            return False
        u = eliminate(u)
    return True


def lyndon_factorize(u: Sequence) -> list[Word]:
    """Unique factorization ``u = u1 u2 ... uk`` into ALSWs with ``u1 <= ... <= uk``.

    >>> lyndon_factorize((0, 0, 1, 0, 1, 0, 0))
    [(0,), (0,), (1, 0, 1, 0, 0)]
    """
    _require_nonempty(u)
    u = tuple(u)
    factors = []
    end = len(u)
    while end > 0:
        # the last factor is the longest ALSW suffix of what remains
        start = next(i for i in range(end) if is_alsw(u[i:end]))
        factors.append(u[start:end])
        end = start
    factors.reverse()
    return factors


def longest_alsw_proper_suffix(u: Sequence) -> tuple[Word, Word]:
    """Split an ALSW ``u = vw`` where ``w`` is its longest proper ALSW suffix.

    Both parts are ALSWs.
    """
    u = tuple(u)
    if len(u) < 2:
        raise ValueError("need an ALSW of length at least 2")
    if not is_alsw(u):
        raise ValueError(f"{u!r} is not an ALSW")
    for i in range(1, len(u)):
        if is_alsw(u[i:]):
            return u[:i], u[i:]
    raise AssertionError("unreachable: the last letter is always an ALSW")


# ---------------------------------------------------------------------------
# Shirshov elimination


@functools.total_ordering
@dataclass(frozen=True)
class EliminationLetter:
    """The derived letter ``base`` followed by ``tail`` copies of the minimal letter.

    Ordered by base first; for equal bases a shorter tail is greater.
    """

    base: Any
    tail: int

    def _key(self):
        return self.base, -self.tail

    def __lt__(self, other):
        if not isinstance(other, EliminationLetter):
            return NotImplemented
        return self._key() < other._key()


def is_weak_alsw(u: Sequence) -> bool:
    return len(u) == 1 or (len(u) > 0 and u[0] > min(u))


def eliminate(u: Sequence, context: Sequence | None = None) -> tuple[EliminationLetter, ...]:
    """Rewrite ``u`` over the derived alphabet of ``context`` (default ``u``).

    With ``m`` the minimal letter of the context, each block
    ``x m m ... m`` (``x > m``, ``j`` trailing ``m``) becomes the single
    letter ``EliminationLetter(x, j)``.
    """
    u = tuple(u)
    ctx = u if context is None else tuple(context)
    if not u or not ctx:
        raise ValueError("cannot eliminate in the empty word")
    beta = min(ctx)
    if min(u) < beta:
        raise ValueError("word has letters below the context minimum")
    if u[0] == beta:
        raise ValueError("word starts with the minimal letter; not a Weak-ALSW")
    out = []
    for x in u:
        if x == beta:
            last = out[-1]
            out[-1] = EliminationLetter(last.base, last.tail + 1)
        else:
            out.append(EliminationLetter(x, 0))
    return tuple(out)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_alsw(alphabet: Alphabet | int, max_len: int) -> list[Word]:
    """All ALSWs of length ``<= max_len``, sorted by deg-lex.

    Generated with the Fredricksen-Kessler-Maiorana successor rule on the
    letter-reversed alphabet: reversing letters maps ALSWs onto classic
    (minimal-rotation) Lyndon words.
    """
    q = alphabet if isinstance(alphabet, int) else len(alphabet)
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(q - 1 - x for x in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == q - 1:
            w.pop()
    out.sort(key=deglex_key)
    return out


def all_words(q: int, length: int) -> Iterable[Word]:
    return itertools.product(range(q), repeat=length)
