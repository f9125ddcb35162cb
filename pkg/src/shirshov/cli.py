"""Command line front end.

Exit status: 0 on success, 1 when the answer is mathematically negative
(a check fails, the two GSB tests disagree), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter

from .bracketing import bracket_down_up, bracket_std, format_tree
from .gsb_assoc import complete_assoc, is_gsb_assoc, reduce_assoc, red_words
from .gsb_lie import complete_lie, crosscheck_gsb, is_gsb_lie, lie_reduce, red_nlsw
from .poly import LiePoly, format_lie, format_poly, parse_poly
from .presentation import Presentation, load_presentation
from .words import Alphabet, eliminate, enumerate_alsw, is_alsw, lyndon_factorize

DEFAULT_BOUND = 10


class InputError(Exception):
    pass


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _alphabet(args, *words) -> Alphabet:
    if args.alphabet:
        return Alphabet.parse(args.alphabet)
    return Alphabet.infer(*words)


def _load(args) -> Presentation:
    return load_presentation(args.file, args.mode)


def _bound(args, pres: Presentation) -> int:
    if args.max_deg is not None:
        return args.max_deg
    if pres.degree_bound is not None:
        return pres.degree_bound
    return DEFAULT_BOUND


def _fmt_rel(pres: Presentation, r) -> str:
    if pres.mode == "lie":
        return format_lie(r, pres.alphabet)
    return format_poly(r, pres.alphabet)


def _complete(pres: Presentation, bound: int, jobs: int):
    engine = complete_lie if pres.mode == "lie" else complete_assoc
    return engine(pres.relations, bound, jobs=jobs)


# ---------------------------------------------------------------------------
# commands


def cmd_lsw(args) -> int:
    alphabet = Alphabet.parse(args.alphabet)
    words = enumerate_alsw(alphabet, args.max_len)
    counts = Counter(len(w) for w in words)
    per_degree = [counts.get(d, 0) for d in range(1, args.max_len + 1)]
    if args.count_only:
        lines = [f"{d}: {c}" for d, c in enumerate(per_degree, start=1)]
    else:
        lines = []
        for w in words:
            line = alphabet.format_word(w)
            if args.bracket:
                line += "\t" + format_tree(bracket_std(w), alphabet)
            lines.append(line)
    payload = {"counts": per_degree}
    if not args.count_only:
        payload["words"] = [alphabet.format_word(w) for w in words]
        if args.bracket:
            payload["brackets"] = [format_tree(bracket_std(w), alphabet) for w in words]
    _emit(args, lines, payload)
    return 0


def cmd_factor(args) -> int:
    alphabet = _alphabet(args, args.word)
    factors = [alphabet.format_word(f) for f in lyndon_factorize(alphabet.parse_word(args.word))]
    _emit(args, [" | ".join(factors)], {"factors": factors})
    return 0


def cmd_bracket(args) -> int:
    alphabet = _alphabet(args, args.word)
    u = alphabet.parse_word(args.word)
    if not is_alsw(u):
        raise InputError(f"{args.word} is not a Lyndon-Shirshov word")
    tree = bracket_down_up(u) if args.down_up else bracket_std(u)
    text = format_tree(tree, alphabet)
    _emit(args, [text], {"bracket": text})
    return 0


def cmd_eliminate(args) -> int:
    alphabet = _alphabet(args, args.word)
    derived = eliminate(alphabet.parse_word(args.word))
    text = " ".join(alphabet.format_letter(x) for x in derived)
    _emit(args, [text], {"eliminated": text})
    return 0


def cmd_nf(args) -> int:
    pres = _load(args)
    rels = pres.monic_relations()
    if args.complete:
        rels = _complete(pres, _bound(args, pres), args.jobs).relations
    h = parse_poly(args.poly, pres.alphabet)
    if pres.mode == "lie":
        red = lie_reduce(LiePoly(h), rels)
        text = format_lie(red.normal_form, pres.alphabet)
    else:
        text = format_poly(reduce_assoc(h, rels), pres.alphabet)
    _emit(args, [text], {"normal_form": text})
    return 0


def cmd_complete(args) -> int:
    pres = _load(args)
    state = _complete(pres, _bound(args, pres), args.jobs)
    rels = [_fmt_rel(pres, r) for r in state.relations]
    _emit(
        args,
        rels + [state.status_line()],
        {"relations": rels, "status": state.status, "degree_bound": state.degree_bound,
         "pending": len(state.pending)},
    )
    return 0


def cmd_check(args) -> int:
    pres = _load(args)
    rels = pres.monic_relations()
    ok = is_gsb_lie(rels) if pres.mode == "lie" else is_gsb_assoc(rels)
    _emit(args, ["true" if ok else "false"], {"gsb": ok})
    return 0 if ok else 1


def cmd_basis(args) -> int:
    pres = _load(args)
    deg = args.max_deg if args.max_deg is not None else 6
    rels = pres.monic_relations()
    if pres.mode == "lie":
        items = red_nlsw(rels, pres.alphabet, deg)
        shown = [format_tree(t, pres.alphabet) for t in items]
        lengths = [len(t.word) for t in items]
        start = 1
    else:
        items = red_words(rels, len(pres.alphabet), deg)
        shown = [pres.alphabet.format_word(w) for w in items]
        lengths = [len(w) for w in items]
        start = 0
    counts = Counter(lengths)
    per_degree = {d: counts.get(d, 0) for d in range(start, deg + 1)}
    lines = shown + ["counts: " + " ".join(f"{d}:{c}" for d, c in per_degree.items())]
    _emit(args, lines, {"basis": shown, "counts": {str(d): c for d, c in per_degree.items()}})
    return 0


def cmd_crosscheck(args) -> int:
    pres = _load(args).with_mode("lie")
    lie, assoc = crosscheck_gsb(pres.monic_relations())
    _emit(args, [f"lie={str(lie).lower()} assoc={str(assoc).lower()}"],
          {"lie": lie, "assoc": assoc, "agree": lie == assoc})
    return 0 if lie == assoc else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="store_true", help="log completion steps")

    pres = argparse.ArgumentParser(add_help=False)
    pres.add_argument("file", help="presentation file")
    pres.add_argument("--mode", choices=("lie", "assoc"), help="override the file's mode")
    pres.add_argument("--jobs", type=int, default=1, help="worker processes for completion")

    word = argparse.ArgumentParser(add_help=False)
    word.add_argument("word")
    word.add_argument("--alphabet", help='e.g. "x1 < x2 < x3"; inferred when omitted')

    parser = argparse.ArgumentParser(prog="shirshov", description="Lyndon-Shirshov words and Gröbner-Shirshov bases")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lsw", parents=[common], help="list Lyndon-Shirshov words")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--bracket", action="store_true", help="show standard bracketings")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_lsw)

    p = sub.add_parser("factor", parents=[common, word], help="Lyndon-Shirshov factorization")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("bracket", parents=[common, word], help="standard bracketing of an ALSW")
    p.add_argument("--down-up", action="store_true", help="use the down-to-up procedure")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("eliminate", parents=[common, word], help="one Shirshov elimination step")
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("nf", parents=[common, pres], help="normal form of a polynomial")
    p.add_argument("poly")
    p.add_argument("--complete", action="store_true", help="complete the relations first")
    p.add_argument("--max-deg", type=int, help="degree bound for --complete")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("complete", parents=[common, pres], help="run Shirshov completion")
    p.add_argument("--max-deg", type=int, help="degree bound (default: file, else 10)")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("check", parents=[common, pres], help="is the relation set a GSB?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis", parents=[common, pres], help="Red(S) up to a degree")
    p.add_argument("--max-deg", type=int, help="largest degree listed (default 6)")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("crosscheck", parents=[common, pres], help="compare Lie and associative GSB tests")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
