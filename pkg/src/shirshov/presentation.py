"""Presentation files: an alphabet, an engine mode and a list of relations.

::

    # Serre relations of type A2
    alphabet: x1 < x2
    mode: lie
    degree_bound: 8
    [x2 [x2 x1]]
    [[x2 x1] x1]

Header lines are ``key: value``; every other non-blank, non-comment line
is one relation in the polynomial text format.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import LiePoly, NotLieError, Poly, format_lie, format_poly, parse_poly
from .words import Alphabet, AlphabetError

MODES = ("lie", "assoc")


class PresentationError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class Presentation:
    alphabet: Alphabet
    mode: str = "lie"
    relations: list = field(default_factory=list)
    degree_bound: int | None = None

    def format(self) -> str:
        lines = [self.alphabet.declaration(), f"mode: {self.mode}"]
        if self.degree_bound is not None:
            lines.append(f"degree_bound: {self.degree_bound}")
        fmt = format_lie if self.mode == "lie" else format_poly
        lines.extend(fmt(r, self.alphabet) for r in self.relations)
        return "\n".join(lines) + "\n"

    def monic_relations(self) -> list:
        return [r.monic() for r in self.relations]

    def with_mode(self, mode: str) -> Presentation:
        if mode == self.mode:
            return self
        if mode == "assoc":
            rels = [r.poly for r in self.relations]
        else:
            rels = [_to_lie(r, None) for r in self.relations]
        return Presentation(self.alphabet, mode, rels, self.degree_bound)


def _to_lie(p: Poly, line: int | None) -> LiePoly:
    try:
        return LiePoly(p)
    except NotLieError:
        raise PresentationError("relation is not a Lie polynomial", line) from None


def parse_presentation(text: str, mode: str | None = None) -> Presentation:
    """Parse presentation text; ``mode`` overrides the file's ``mode:`` line."""
    alphabet = None
    file_mode = None
    bound = None
    raw: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower().replace("-", "_")
        if sep and key in ("alphabet", "mode", "degree_bound"):
            value = value.strip()
            if key == "alphabet":
                try:
                    alphabet = Alphabet.parse(value)
                except AlphabetError as exc:
                    raise PresentationError(str(exc), lineno) from None
            elif key == "mode":
                if value not in MODES:
                    raise PresentationError(f"mode must be one of {MODES}, got {value!r}", lineno)
                file_mode = value
            else:
                try:
                    bound = int(value)
                except ValueError:
                    raise PresentationError(f"bad degree bound {value!r}", lineno) from None
            continue
        raw.append((lineno, line))
    if alphabet is None:
        raise PresentationError("missing 'alphabet:' declaration")
    mode = mode or file_mode or "lie"
    if mode not in MODES:
        raise PresentationError(f"mode must be one of {MODES}, got {mode!r}")
    relations = []
    for lineno, line in raw:
        p = parse_poly(line, alphabet, line=lineno)
        if not p:
            raise PresentationError("relation is zero", lineno)
        relations.append(_to_lie(p, lineno) if mode == "lie" else p)
    return Presentation(alphabet, mode, relations, bound)


def load_presentation(path: str, mode: str | None = None) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), mode)
