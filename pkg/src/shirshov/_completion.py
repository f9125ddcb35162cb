"""Degree-bounded completion loop shared by the associative and Lie engines."""

from __future__ import annotations

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .words import Word, deglex_key

log = logging.getLogger(__name__)

COMPLETE = "complete"
TRUNCATED = "truncated"


class Overlap(NamedTuple):
    """Where two leading words meet.

    ``kind`` is ``"inclusion"`` (``w = lm(f) = a lm(g) b``) or
    ``"intersection"`` (``w = lm(f) b = a lm(g)``, a proper overlap).
    """

    kind: str
    word: Word
    a: Word
    b: Word


def find_sub(word: Word, sub: Word, start: int = 0) -> int:
    n = len(sub)
    for i in range(start, len(word) - n + 1):
        if word[i:i + n] == sub:
            return i
    return -1


def occurrences(word: Word, sub: Word) -> list[int]:
    n = len(sub)
    return [i for i in range(len(word) - n + 1) if word[i:i + n] == sub]


def overlaps(f_lm: Word, g_lm: Word, same: bool = False) -> list[Overlap]:
    """All inclusion and proper intersection overlaps of ``f_lm`` with ``g_lm``.

    Intersections with an empty context coincide with inclusions and are
    listed once, as inclusions.  ``same`` marks a pair of one relation with
    itself, whose trivial inclusion ``f - f`` is omitted.
    """
    out = []
    if not (same and f_lm == g_lm):
        for p in occurrences(f_lm, g_lm):
            out.append(Overlap("inclusion", f_lm, f_lm[:p], f_lm[p + len(g_lm):]))
    for k in range(1, min(len(f_lm), len(g_lm))):
        if f_lm[-k:] == g_lm[:k]:
            out.append(Overlap("intersection", f_lm + g_lm[k:], f_lm[:-k], g_lm[k:]))
    return out


@dataclass
class GsbState:
    """Outcome of a completion run.

    ``pending`` lists the compositions (as ``(word, i, j, overlap)`` with
    indices into ``relations``) that were skipped because their overlap
    word exceeds ``degree_bound``; ``status`` is ``"complete"`` exactly
    when that list is empty.
    """

    relations: list
    degree_bound: int
    status: str
    pending: list = field(default_factory=list)
    discarded: int = 0

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def status_line(self) -> str:
        if self.complete:
            return COMPLETE
        return f"{TRUNCATED} degree={self.degree_bound}"


def _evaluate(args):
    composition, normal_form, f, g, ov, basis = args
    return normal_form(composition(f, g, ov), basis)


def run_completion(
    relations: list,
    degree_bound: int,
    composition: Callable,
    normal_form: Callable,
    jobs: int = 1,
) -> GsbState:
    """Shirshov completion up to overlap words of length ``degree_bound``.

    ``composition(f, g, overlap)`` builds the composition polynomial and
    ``normal_form(h, basis)`` fully reduces ``h`` against a list of monic
    relations.  Both must be picklable (module level) for ``jobs > 1``.

    Compositions are handled in rounds of equal overlap length.  Within a
    round each candidate is first reduced against a frozen snapshot of the
    basis (in parallel when ``jobs > 1``), then re-reduced against the
    live basis and added in increasing deg-lex order of its overlap word.
    The result does not depend on ``jobs``.
    """
    relations = [r for r in relations if r]
    if relations:
        top = max(len(r.lm) for r in relations)
        if degree_bound < top:
            raise ValueError(f"degree bound {degree_bound} below relation degree {top}")

    basis: dict[int, object] = {}
    next_id = 0
    seq = 0
    queue: list = []
    skipped: list = []
    discarded = 0

    def push_pairs(new_id):
        nonlocal seq
        for other_id in list(basis):
            pairs = {(new_id, other_id), (other_id, new_id)}
            for i, j in sorted(pairs):
                for ov in overlaps(basis[i].lm, basis[j].lm, same=i == j):
                    heapq.heappush(queue, (deglex_key(ov.word), seq, i, j, ov))
                    seq += 1

    def add(h):
        nonlocal next_id, discarded
        work = [h]
        while work:
            g = normal_form(work.pop(0), list(basis.values()))
            if not g:
                discarded += 1
                log.debug("relation reduced to zero; dropped")
                continue
            g = g.monic()
            for rid in list(basis):
                # relations whose leading word g divides are re-reduced later
                if find_sub(basis[rid].lm, g.lm) >= 0:
                    work.append(basis.pop(rid))
            gid = next_id
            next_id += 1
            basis[gid] = g
            for rid in list(basis):
                if rid != gid:
                    others = [basis[k] for k in basis if k != rid]
                    basis[rid] = normal_form(basis[rid], others)
            push_pairs(gid)

    for r in relations:
        add(r)

    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while queue:
            length = queue[0][0][0]
            batch = []
            while queue and queue[0][0][0] == length:
                batch.append(heapq.heappop(queue))
            if length > degree_bound:
                skipped.extend(batch)
                continue
            live = [e for e in batch if e[2] in basis and e[3] in basis]
            snapshot = list(basis.values())
            tasks = [(composition, normal_form, basis[i], basis[j], ov, snapshot) for _, _, i, j, ov in live]
            results = list(pool.map(_evaluate, tasks)) if pool else [_evaluate(t) for t in tasks]
            for entry, h in zip(live, results):
                if not h:
                    continue
                log.debug("nonzero composition at overlap %s", entry[4].word)
                add(h)
    finally:
        if pool:
            pool.shutdown()

    order = sorted(basis, key=lambda k: deglex_key(basis[k].lm))
    index = {k: n for n, k in enumerate(order)}
    pending = [
        (ov.word, index[i], index[j], ov)
        for _, _, i, j, ov in skipped
        if i in basis and j in basis
    ]
    return GsbState(
        relations=[basis[k] for k in order],
        degree_bound=degree_bound,
        status=TRUNCATED if pending else COMPLETE,
        pending=pending,
        discarded=discarded,
    )

