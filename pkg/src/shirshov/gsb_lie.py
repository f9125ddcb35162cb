"""Lie relations handled inside the free associative algebra.

Relations are :class:`~shirshov.poly.LiePoly` values.  Reduction subtracts
normal s-words, so every intermediate polynomial stays a Lie element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ._completion import GsbState, Overlap, find_sub, overlaps, run_completion
from .bracketing import Tree, bracket_std
from .gsb_assoc import Composition, is_gsb_assoc
from .poly import LiePoly, NotLieError, Poly, _axpy, expand_std, normal_s_poly
from .words import EMPTY, Alphabet, Word, deglex_key, enumerate_alsw, is_alsw

GsbStateLie = GsbState


def _lie(p) -> LiePoly:
    return p if isinstance(p, LiePoly) else LiePoly(p)


def _check_monic(*polys) -> None:
    for p in polys:
        if not p.is_monic():
            raise ValueError(f"relation {p!r} is not monic")


def composition_lie_poly(f: LiePoly, g: LiePoly, ov: Overlap) -> Poly:
    if ov.kind == "inclusion":
        return f.poly - normal_s_poly(g.poly, ov.a, ov.b)
    return normal_s_poly(f.poly, EMPTY, ov.b) - normal_s_poly(g.poly, ov.a, EMPTY)


def compositions_lie(f: LiePoly, g: LiePoly, same: bool | None = None) -> list[Composition]:
    """Lie compositions of inclusion and intersection of ``f`` with ``g``.

    Inclusion ``w = lm(f) = a lm(g) b`` gives ``f - [a g b]``; intersection
    ``w = lm(f) b = a lm(g)`` gives ``[f b] - [a g]``, both with normal
    s-words.  Every overlap word ``w`` is an ALSW.
    """
    f, g = _lie(f), _lie(g)
    _check_monic(f, g)
    if same is None:
        same = f == g
    return [
        Composition(ov.word, LiePoly(composition_lie_poly(f, g, ov)), ov.kind, ov.a, ov.b)
        for ov in overlaps(f.lm, g.lm, same)
    ]


@dataclass
class LieReduction:
    """Record of :func:`lie_reduce`.

    ``h == sum(c * expand(t) for c, t in irreducible)
          + sum(c * normal_s_word(s, a, b) for c, s, a, b in used)``.
    """

    irreducible: list[tuple[Fraction, Tree]]
    used: list[tuple[Fraction, LiePoly, Word, Word]]
    trace: list[Word] = field(default_factory=list)  # leading word at each step

    @property
    def normal_form(self) -> LiePoly:
        acc: dict = {}
        for c, t in self.irreducible:
            _axpy(acc, c, expand_std(t.word))
        return LiePoly(Poly._raw(acc), list(self.irreducible))

    @property
    def is_zero(self) -> bool:
        return not self.irreducible


def lie_reduce(h, relations: Sequence[LiePoly]) -> LieReduction:
    """Split ``h`` into Red(S) NLSW terms plus normal s-words of the relations.

    While ``h`` is nonzero: if its leading word contains the leading word
    of a relation ``s`` as ``a lm(s) b``, subtract ``lc * [a s b]``;
    otherwise record and subtract ``lc * [lm]``.
    """
    rels = [_lie(s) for s in relations]
    _check_monic(*rels)
    acc = getattr(h, "poly", h).as_dict()
    irreducible, used, trace = [], [], []
    while acc:
        w = max(acc, key=deglex_key)
        c = acc[w]
        trace.append(w)
        for s in rels:
            p = find_sub(w, s.lm)
            if p >= 0:
                a, b = w[:p], w[p + len(s.lm):]
                _axpy(acc, -c, normal_s_poly(s.poly, a, b))
                used.append((c, s, a, b))
                break
        else:
            if not is_alsw(w):
                raise NotLieError(f"leading word {w!r} is not an ALSW; input is not a Lie element")
            _axpy(acc, -c, expand_std(w))
            irreducible.append((c, bracket_std(w)))
    return LieReduction(irreducible, used, trace)


def _normal_form(h, basis):
    return lie_reduce(h, basis).normal_form


def _composition(f, g, ov):
    return composition_lie_poly(f, g, ov)


def complete_lie(relations: Sequence[LiePoly], degree_bound: int, jobs: int = 1) -> GsbStateLie:
    """Shirshov completion of a set of Lie relations up to overlap length ``degree_bound``."""
    rels = [_lie(r) for r in relations]
    if any(not r for r in rels):
        raise ValueError("relations must be nonzero")
    return run_completion([r.monic() for r in rels], degree_bound, _composition, _normal_form, jobs)


def is_gsb_lie(relations: Sequence[LiePoly]) -> bool:
    """True iff every Lie composition lie-reduces to zero modulo the relations."""
    rels = [_lie(r) for r in relations]
    _check_monic(*rels)
    for i, f in enumerate(rels):
        for j, g in enumerate(rels):
            for ov in overlaps(f.lm, g.lm, same=i == j):
                if not lie_reduce(composition_lie_poly(f, g, ov), rels).is_zero:
                    return False
    return True


def red_nlsw(relations: Sequence[LiePoly], alphabet: Alphabet | int, max_deg: int) -> list[Tree]:
    """Standard bracketings of the ALSWs up to ``max_deg`` avoiding every leading word."""
    leads = [_lie(s).lm for s in relations]
    return [
        bracket_std(u)
        for u in enumerate_alsw(alphabet, max_deg)
        if not any(find_sub(u, lm) >= 0 for lm in leads)
    ]


def red_counts(relations: Sequence[LiePoly], alphabet: Alphabet | int, max_deg: int) -> dict[int, int]:
    """Number of Red(S) NLSWs in each degree ``1..max_deg``."""
    counts = {d: 0 for d in range(1, max_deg + 1)}
    for t in red_nlsw(relations, alphabet, max_deg):
        counts[len(t.word)] += 1
    return counts


def crosscheck_gsb(relations: Sequence[LiePoly]) -> tuple[bool, bool]:
    """Run the Lie and the associative GSB tests on the same relations.

    A set of Lie polynomials is a Gröbner-Shirshov basis in the free Lie
    algebra iff it is one in the free associative algebra, so the two
    answers must agree.
    """
    rels = [_lie(r) for r in relations]
    return is_gsb_lie(rels), is_gsb_assoc([r.poly for r in rels])
