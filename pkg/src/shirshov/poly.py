"""Free associative polynomials with exact rational coefficients, and Lie elements.

:class:`Poly` is an element of the free associative algebra: a finite map
from words (tuples of letter ranks) to :class:`fractions.Fraction`.  The
leading word is the deg-lex maximum of the support.

:class:`LiePoly` is a :class:`Poly` certified to lie in the free Lie
algebra; it carries its expansion in the basis of nonassociative
Lyndon-Shirshov words (NLSWs).
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .bracketing import (
    Leaf,
    Node,
    Slot,
    Tree,
    _parse_items,
    bracket_std,
    format_tree,
    special_bracket,
)
from .words import EMPTY, Alphabet, Word, compare_shirshov_lex, deglex_key, is_alsw


class NotLieError(ValueError):
    """Raised when an associative polynomial is not a Lie element."""


class PolyParseError(ValueError):
    def __init__(self, message: str, column: int, line: int | None = None):
        self.column = column
        self.line = line
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        super().__init__(f"{where}: {message}")


def _coeff(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("coefficients must be exact rationals, not floats")
    if not isinstance(c, Rational):
        raise TypeError(f"bad coefficient {c!r}")
    return Fraction(c)


class Poly:
    """Immutable element of k<X> over the rationals."""

    __slots__ = ("_terms", "_hash", "_order")

    def __init__(self, terms: Mapping[Word, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + _coeff(c)
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None
        self._order = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly:
        # terms already clean: tuple keys, nonzero Fraction values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        p._order = None
        return p

    @classmethod
    def monomial(cls, word: Word, coeff=1) -> Poly:
        return cls({tuple(word): coeff})

    @classmethod
    def zero(cls) -> Poly:
        return cls._raw({})

    # -- container protocol --------------------------------------------------

    def words(self) -> list[Word]:
        """Support words in decreasing deg-lex order."""
        if self._order is None:
            self._order = sorted(self._terms, key=deglex_key, reverse=True)
        return self._order

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        for w in self.words():
            yield w, self._terms[w]

    def coeff(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def as_dict(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LiePoly):
            other = other.poly
        if isinstance(other, Poly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "Poly(0)"
        return f"Poly({format_poly(self, _default_alphabet(self))!r})"

    # -- arithmetic ------------------------------------------------------------

    def __neg__(self):
        return Poly._raw({w: -c for w, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, LiePoly):
            other = other.poly
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        _axpy(out, 1, other)
        return Poly._raw(out)

    def __sub__(self, other):
        if isinstance(other, LiePoly):
            other = other.poly
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        _axpy(out, -1, other)
        return Poly._raw(out)

    def __mul__(self, other):
        if isinstance(other, LiePoly):
            other = other.poly
        if isinstance(other, Poly):
            out: dict[Word, Fraction] = {}
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    w = u + v
                    c = out.get(w, 0) + a * b
                    if c:
                        out[w] = c
                    else:
                        out.pop(w, None)
            return Poly._raw(out)
        if isinstance(other, Rational):
            c = _coeff(other)
            if not c:
                return Poly.zero()
            return Poly._raw({w: c * v for w, v in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def sandwich(self, a: Word = EMPTY, b: Word = EMPTY) -> Poly:
        """The product ``a * self * b`` for words ``a``, ``b``."""
        a, b = tuple(a), tuple(b)
        return Poly._raw({a + w + b: c for w, c in self._terms.items()})

    # -- leading term ----------------------------------------------------------

    def leading(self) -> tuple[Word, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading word")
        w = max(self._terms, key=deglex_key)
        return w, self._terms[w]

    @property
    def lm(self) -> Word:
        return self.leading()[0]

    @property
    def lc(self) -> Fraction:
        return self.leading()[1]

    @property
    def degree(self) -> int:
        return len(self.lm)

    def is_monic(self) -> bool:
        return bool(self._terms) and self.lc == 1

    def monic(self) -> Poly:
        return self * (1 / self.lc)


def _axpy(acc: dict, c, p: Poly, a: Word = EMPTY, b: Word = EMPTY) -> None:
    """In place: ``acc += c * a * p * b``."""
    for w, v in p._terms.items():
        key = a + w + b
        x = acc.get(key, 0) + c * v
        if x:
            acc[key] = x
        else:
            acc.pop(key, None)


def leading(f: Poly) -> tuple[Word, Fraction]:
    return f.leading()


def _default_alphabet(p: Poly) -> Alphabet:
    top = max((max(w) for w in p._terms if w), default=0)
    return Alphabet.standard(top + 1)


# ---------------------------------------------------------------------------
# commutator expansion


def expand(t: Tree, slot: Poly | None = None) -> Poly:
    """Expand a nonassociative word with ``[p q] = pq - qp``.

    A :class:`Slot` leaf expands to ``slot`` when given, otherwise to the
    standard bracketing of its word.
    """
    if slot is None:
        return _expand_cached(t)
    return _expand(t, slot)


@functools.lru_cache(maxsize=65536)
def _expand_cached(t: Tree) -> Poly:
    return _expand(t, None)


def _expand(t: Tree, slot: Poly | None) -> Poly:
    if isinstance(t, Leaf):
        return Poly._raw({(t.letter,): Fraction(1)})
    if isinstance(t, Slot):
        return slot if slot is not None else _expand_cached(bracket_std(t.word))
    p = expand(t.left, slot)
    q = expand(t.right, slot)
    return p * q - q * p


@functools.lru_cache(maxsize=65536)
def expand_std(u: Word) -> Poly:
    """Expansion of the standard bracketing of the ALSW ``u``."""
    return _expand_cached(bracket_std(tuple(u)))


# ---------------------------------------------------------------------------
# NLSW basis


def rewrite_to_nlsw(t: Tree) -> list[tuple[Fraction, Tree]]:
    """Express a nonassociative word as a combination of NLSWs.

    Uses antisymmetry and the Jacobi rearrangement
    ``[[v1 v2] w] = [[v1 w] v2] + [v1 [v2 w]]`` whenever ``v2 > w``.
    Terms come out in decreasing deg-lex order of their words.
    """
    combo = _rewrite(t)
    return sorted(((c, s) for s, c in combo.items()), key=lambda cs: deglex_key(cs[1].word), reverse=True)


def _rewrite(t: Tree) -> dict[Tree, Fraction]:
    if isinstance(t, Leaf):
        return {t: Fraction(1)}
    if isinstance(t, Slot):
        raise ValueError("cannot rewrite a tree with an unfilled slot")
    out: dict[Tree, Fraction] = {}
    for p, a in _rewrite(t.left).items():
        for q, b in _rewrite(t.right).items():
            _acc_combo(out, a * b, _bracket_nlsw(p, q))
    return out


def _acc_combo(out: dict, c, combo: Mapping) -> None:
    for s, v in combo.items():
        x = out.get(s, 0) + c * v
        if x:
            out[s] = x
        else:
            out.pop(s, None)


@functools.lru_cache(maxsize=65536)
def _bracket_nlsw_cached(p: Tree, q: Tree) -> tuple:
    return tuple(_bracket_nlsw_impl(p, q).items())


def _bracket_nlsw(p: Tree, q: Tree) -> dict[Tree, Fraction]:
    return dict(_bracket_nlsw_cached(p, q))


def _bracket_nlsw_impl(p: Tree, q: Tree) -> dict[Tree, Fraction]:
    # p, q are NLSWs; returns [p q] in the NLSW basis
    order = compare_shirshov_lex(p.word, q.word)
    if order == 0:
        return {}
    if order < 0:
        return {s: -c for s, c in _bracket_nlsw(q, p).items()}
    if isinstance(p, Leaf) or compare_shirshov_lex(p.right.word, q.word) <= 0:
        return {Node(p, q): Fraction(1)}
    v1, v2 = p.left, p.right
    out: dict[Tree, Fraction] = {}
    for t, c in _bracket_nlsw(v1, q).items():
        _acc_combo(out, c, _bracket_nlsw(t, v2))
    for t, c in _bracket_nlsw(v2, q).items():
        _acc_combo(out, c, _bracket_nlsw(v1, t))
    return out


def lie_decompose(f: Poly) -> list[tuple[Fraction, Tree]] | None:
    """NLSW-basis coordinates of ``f``, or ``None`` when ``f`` is not a Lie element.

    Peels off ``lc * [lm]`` while the leading word is an ALSW.
    """
    acc = dict(f._terms)
    out = []
    while acc:
        w = max(acc, key=deglex_key)
        if not is_alsw(w):
            return None
        c = acc[w]
        out.append((c, bracket_std(w)))
        _axpy(acc, -c, expand_std(w))
    return out


class LiePoly:
    """A Lie element of k<X> together with its NLSW-basis coordinates."""

    __slots__ = ("poly", "basis")

    def __init__(self, poly: Poly, basis: list | None = None):
        if isinstance(poly, LiePoly):
            poly, basis = poly.poly, poly.basis
        if basis is None:
            basis = lie_decompose(poly)
            if basis is None:
                raise NotLieError(f"{poly!r} is not a Lie polynomial")
        self.poly = poly
        self.basis = tuple(basis)

    @classmethod
    def from_tree(cls, t: Tree, coeff=1) -> LiePoly:
        return cls(expand(t) * coeff)

    @classmethod
    def from_basis(cls, terms: Iterable[tuple[object, Tree]]) -> LiePoly:
        acc: dict = {}
        for c, t in terms:
            _axpy(acc, _coeff(c), expand(t))
        return cls(Poly._raw(acc))

    @classmethod
    def letter(cls, r: int) -> LiePoly:
        return cls(Poly.monomial((r,)), [(Fraction(1), Leaf(r))])

    @classmethod
    def zero(cls) -> LiePoly:
        return cls(Poly.zero(), [])

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if isinstance(other, LiePoly):
            return self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"LiePoly({format_lie(self, _default_alphabet(self.poly))!r})"

    def __neg__(self):
        return LiePoly(-self.poly, [(-c, t) for c, t in self.basis])

    def __add__(self, other):
        if not isinstance(other, LiePoly):
            return NotImplemented
        return LiePoly(self.poly + other.poly)

    def __sub__(self, other):
        if not isinstance(other, LiePoly):
            return NotImplemented
        return LiePoly(self.poly - other.poly)

    def __mul__(self, c):
        if not isinstance(c, Rational):
            return NotImplemented
        c = _coeff(c)
        if not c:
            return LiePoly.zero()
        return LiePoly(self.poly * c, [(c * a, t) for a, t in self.basis])

    __rmul__ = __mul__

    def leading(self):
        return self.poly.leading()

    @property
    def lm(self) -> Word:
        return self.poly.lm

    @property
    def lc(self) -> Fraction:
        return self.poly.lc

    def is_monic(self) -> bool:
        return self.poly.is_monic()

    def monic(self) -> LiePoly:
        return self * (1 / self.lc)


def lie_bracket(f: LiePoly, g: LiePoly) -> LiePoly:
    return LiePoly(f.poly * g.poly - g.poly * f.poly)


def normal_s_word(s: LiePoly, a: Word = EMPTY, b: Word = EMPTY) -> LiePoly:
    """Substitute ``s`` into the special bracketing of ``a lm(s) b``.

    The result has leading word ``a lm(s) b`` and equals ``a s b`` plus
    terms ``a_i s b_i`` with strictly smaller ``a_i lm(s) b_i``.
    """
    if not isinstance(s, LiePoly):
        s = LiePoly(s)
    return LiePoly(normal_s_poly(s.poly, a, b))


@functools.lru_cache(maxsize=65536)
def normal_s_poly(s: Poly, a: Word = EMPTY, b: Word = EMPTY) -> Poly:
    """Associative expansion of a normal s-word; ``s`` must be a monic Lie element."""
    if not s.is_monic():
        raise ValueError("normal s-words need a monic polynomial")
    a, b = tuple(a), tuple(b)
    v = s.lm
    u = a + v + b
    if not is_alsw(u):
        raise ValueError("context word a lm(s) b is not an ALSW")
    if not a and not b:
        return s
    return expand(special_bracket(u, a, v, b).tree, slot=s)


# ---------------------------------------------------------------------------
# text format


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for i, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono is None:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)} * {mono}"
        if i == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def format_poly(f: Poly, alphabet: Alphabet) -> str:
    """Canonical text, terms in decreasing deg-lex order, e.g. ``x2x1 - x1x2``."""
    if isinstance(f, LiePoly):
        f = f.poly
    return _join_terms([(c, alphabet.format_word(w) if w else None) for w, c in f.items()])


def format_lie(f: LiePoly, alphabet: Alphabet) -> str:
    """Canonical text in the NLSW basis, e.g. ``[x2 [x2 x1]] - 1/2 * x1``."""
    return _join_terms([(c, format_tree(t, alphabet)) for c, t in f.basis])


_NUM = re.compile(r"\d+(?:/\d+)?")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def parse_poly(text: str, alphabet: Alphabet, line: int | None = None) -> Poly:
    """Parse a sum of terms ``c * m`` where ``m`` is a word or a bracket.

    Brackets are expanded as commutators.  A term may be a product of
    several words and brackets; a lone number is a constant.
    """
    pos = 0
    n = len(text)
    acc: dict[Word, Fraction] = {}

    def skip(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    def fail(msg, p):
        raise PolyParseError(msg, p + 1, line)

    pos = skip(pos)
    if pos == n:
        fail("empty polynomial", pos)
    first = True
    while True:
        pos = skip(pos)
        sign = 1
        if pos < n and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            fail(f"expected '+' or '-', found {text[pos]!r}", pos)
        first = False
        coeff = Fraction(sign)
        m = _NUM.match(text, pos)
        has_num = False
        if m:
            num = Fraction(m.group())
            coeff *= num
            pos = skip(m.end())
            has_num = True
            if pos < n and text[pos] == "*":
                pos = skip(pos + 1)
                if pos >= n or not (text[pos] == "[" or _NAME.match(text, pos)):
                    fail("expected a word or bracket after '*'", pos)
        factors: list[Poly] = []
        while pos < n:
            if text[pos] == "[":
                try:
                    items, end = _parse_items(text, pos + 1, alphabet)
                except ValueError as exc:
                    fail(str(exc), pos)
                if len(items) != 2:
                    fail("a bracket needs exactly two entries", pos)
                factors.append(expand(Node(*items)))
                pos = skip(end)
            elif _NAME.match(text, pos):
                m = _NAME.match(text, pos)
                try:
                    word = alphabet.parse_word(m.group())
                except ValueError as exc:
                    fail(str(exc), pos)
                factors.append(Poly.monomial(word))
                pos = skip(m.end())
            else:
                break
        if not factors and not has_num:
            fail("expected a term", pos)
        term = Poly.monomial(EMPTY, coeff)
        for fac in factors:
            term = term * fac
        _axpy(acc, 1, term)
        if pos >= n:
            break
        if text[pos] not in "+-":
            fail(f"unexpected character {text[pos]!r}", pos)
    return Poly._raw(acc)


def parse_lie(text: str, alphabet: Alphabet, line: int | None = None) -> LiePoly:
    return LiePoly(parse_poly(text, alphabet, line))
