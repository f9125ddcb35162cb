"""Gröbner-Shirshov bases in the free associative algebra (deg-lex order)."""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence

from ._completion import GsbState, Overlap, find_sub, occurrences, overlaps, run_completion
from .poly import Poly, _axpy
from .words import EMPTY, Word, deglex_key

GsbStateAssoc = GsbState


class Composition(NamedTuple):
    word: Word
    poly: object
    kind: str
    a: Word
    b: Word


def _check_monic(*polys) -> None:
    for p in polys:
        if not p.is_monic():
            raise ValueError(f"relation {p!r} is not monic")


def _as_poly(p) -> Poly:
    return getattr(p, "poly", p)


def composition_assoc(f: Poly, g: Poly, ov: Overlap) -> Poly:
    f, g = _as_poly(f), _as_poly(g)
    if ov.kind == "inclusion":
        return f - g.sandwich(ov.a, ov.b)
    return f.sandwich(EMPTY, ov.b) - g.sandwich(ov.a, EMPTY)


def compositions_assoc(f: Poly, g: Poly, same: bool | None = None) -> list[Composition]:
    """Every inclusion and proper intersection composition of ``f`` with ``g``.

    ``same`` defaults to ``f == g``; the composition of a relation with
    itself at its own leading word is trivially zero and is left out.
    """
    f, g = _as_poly(f), _as_poly(g)
    _check_monic(f, g)
    if same is None:
        same = f == g
    return [
        Composition(ov.word, composition_assoc(f, g, ov), ov.kind, ov.a, ov.b)
        for ov in overlaps(f.lm, g.lm, same)
    ]


def reduce_assoc(h: Poly, relations: Sequence[Poly], rng: random.Random | None = None) -> Poly:
    """Normal form of ``h``: rewrite until no support word contains a leading word.

    By default the deg-lex largest reducible word is rewritten with the
    first relation that applies, at its leftmost occurrence.  Passing
    ``rng`` picks word, relation and occurrence at random instead, which
    gives the same answer exactly when ``relations`` is a Gröbner-Shirshov
    basis.
    """
    h = _as_poly(h)
    rels = [_as_poly(s) for s in relations]
    _check_monic(*rels)
    leads = [(s.lm, s) for s in rels]
    acc = h.as_dict()
    out: dict[Word, object] = {}
    while acc:
        w = max(acc, key=deglex_key) if rng is None else rng.choice(sorted(acc))
        c = acc.pop(w)
        if rng is None:
            hit = next(((s, find_sub(w, lm)) for lm, s in leads if find_sub(w, lm) >= 0), None)
        else:
            options = [(s, p) for lm, s in leads for p in occurrences(w, lm)]
            hit = rng.choice(options) if options else None
        if hit is None:
            x = out.get(w, 0) + c
            if x:
                out[w] = x
            else:
                out.pop(w, None)
            continue
        s, p = hit
        rest = Poly._raw({u: v for u, v in s.as_dict().items() if u != s.lm})
        # w -> w - a*s*b, i.e. replace by -a*(s - lm)*b
        _axpy(acc, -c, rest, w[:p], w[p + len(s.lm):])
    return Poly._raw(out)


def _normal_form(h, basis):
    return reduce_assoc(h, basis)


def complete_assoc(relations: Sequence[Poly], degree_bound: int, jobs: int = 1) -> GsbStateAssoc:
    """Shirshov completion with interreduction, up to overlap length ``degree_bound``."""
    rels = [_as_poly(r) for r in relations]
    if any(not r for r in rels):
        raise ValueError("relations must be nonzero")
    return run_completion([r.monic() for r in rels], degree_bound, composition_assoc, _normal_form, jobs)


def is_gsb_assoc(relations: Sequence[Poly]) -> bool:
    """True iff every composition of the relations reduces to zero modulo them."""
    rels = [_as_poly(r) for r in relations]
    _check_monic(*rels)
    for i, f in enumerate(rels):
        for j, g in enumerate(rels):
            for comp in compositions_assoc(f, g, same=i == j):
                if reduce_assoc(comp.poly, rels):
                    return False
    return True


def red_words(relations: Sequence[Poly], alphabet_size: int, max_len: int) -> list[Word]:
    """Words of length ``<= max_len`` containing no leading word, in deg-lex order."""
    leads = [_as_poly(s).lm for s in relations]
    if any(lm == EMPTY for lm in leads):
        return []
    layer = [EMPTY]
    out = [EMPTY]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in range(alphabet_size):
                u = w + (x,)
                # only suffixes can be new occurrences
                if not any(u[len(u) - len(lm):] == lm for lm in leads if len(lm) <= len(u)):
                    nxt.append(u)
        out.extend(nxt)
        layer = nxt
    out.sort(key=deglex_key)
    return out
