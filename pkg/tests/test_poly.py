import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import L, P, W, paren_tree
from oracles import commutator_expand, gt, necklace_count
from shirshov import Alphabet
from shirshov.bracketing import Leaf, Node, Slot, bracket_std, format_tree, is_nlsw, parse_tree, special_bracket
from shirshov.poly import (
    LiePoly,
    NotLieError,
    Poly,
    PolyParseError,
    expand,
    format_lie,
    format_poly,
    leading,
    lie_bracket,
    lie_decompose,
    normal_s_word,
    parse_lie,
    parse_poly,
    rewrite_to_nlsw,
)
from shirshov.words import compare_deglex, enumerate_alsw

A3 = Alphabet.standard(3)
A5 = Alphabet.standard(5)


def trees(max_leaves, letters=3):
    leaf = st.integers(0, letters - 1).map(Leaf)
    return st.recursive(leaf, lambda sub: st.tuples(sub, sub).map(lambda p: Node(*p)), max_leaves=max_leaves)


def as_poly(d):
    return Poly(d)


def combo_poly(terms):
    out = Poly.zero()
    for c, t in terms:
        out = out + expand(t) * c
    return out


# ---------------------------------------------------------------------------
# polynomial basics


def test_poly_drops_zero_terms():
    p = Poly({W("x1"): 1, W("x2"): 0})
    assert p.as_dict() == {W("x1"): 1}
    assert p - p == Poly.zero()
    assert not Poly.zero()


def test_poly_rejects_floats():
    with pytest.raises(TypeError):
        Poly({W("x1"): 0.5})


def test_poly_words_in_decreasing_deglex():
    p = P("x1 + x1x2 + x2x1 + 3 * x2 + 1")
    assert p.words() == [W("x2x1"), W("x1x2"), W("x2"), W("x1"), ()]


def test_poly_arithmetic():
    x1, x2 = P("x1"), P("x2")
    assert (x1 + x2) * (x1 - x2) == P("x1x1 - x1x2 + x2x1 - x2x2")
    assert x1 * Fraction(1, 2) == P("1/2 * x1")
    assert 2 * x1 == P("2 * x1")
    assert P("x1").sandwich(W("x2"), W("x3")) == P("x2x1x3")


@pytest.mark.parametrize(
    "text,word,coeff",
    [("x2x1 - x1x2", "x2x1", 1), ("3 * x1 + 2 * x2x1x1", "x2x1x1", 2), ("-x1 + 5", "x1", -1)],
)
def test_leading_examples(text, word, coeff):
    assert leading(P(text)) == (W(word), coeff)


def test_leading_of_zero_fails():
    with pytest.raises(ValueError):
        leading(Poly.zero())


def test_monic():
    p = P("2 * x2x1 - x1")
    assert p.monic() == P("x2x1 - 1/2 * x1")
    assert p.monic().is_monic() and not p.is_monic()


# ---------------------------------------------------------------------------
# expansion


@pytest.mark.parametrize(
    "text,expected",
    [
        ("[x2 x1]", "x2x1 - x1x2"),
        ("[[x2 x1] x1]", "x2x1x1 - 2 * x1x2x1 + x1x1x2"),
        ("x1", "x1"),
    ],
)
def test_expand_examples(text, expected):
    assert expand(parse_tree(text, A3)) == P(expected)


def test_expand_slot():
    t = Node(Slot(W("x2x1")), Leaf(0))
    assert expand(t) == expand(Node(bracket_std(W("x2x1")), Leaf(0)))
    assert expand(t, slot=P("x3")) == P("x3x1 - x1x3")


@settings(max_examples=150, deadline=None)
@given(trees(8))
def test_expand_matches_naive(t):
    assert expand(t) == as_poly(commutator_expand(t))


@settings(max_examples=150, deadline=None)
@given(trees(8))
def test_expand_is_homogeneous(t):
    for w in expand(t).words():
        assert len(w) == len(t.word)
        assert sorted(w) == sorted(t.word)


@pytest.mark.parametrize("q,n", [(2, 8), (3, 6)])
def test_standard_bracketing_leads_with_its_word(q, n):
    for u in enumerate_alsw(q, n):
        assert leading(expand(bracket_std(u))) == (u, 1)


# ---------------------------------------------------------------------------
# rewriting into the NLSW basis


def test_rewrite_worked_example():
    t = paren_tree("(((x3x2)(x2x1))(x2x1x1))")
    expected = {
        paren_tree(s)
        for s in [
            "(((x3(x2x1x1))(x2x1))x2)",
            "((x3((x2x1)(x2x1x1)))x2)",
            "((x3(x2x1))(x2(x2x1x1)))",
            "((x3(x2x1x1))(x2(x2x1)))",
            "(x3((x2(x2x1x1))(x2x1)))",
            "(x3(x2((x2x1)(x2x1x1))))",
        ]
    }
    got = rewrite_to_nlsw(t)
    assert {s for _, s in got} == expected
    assert all(c == 1 for c, _ in got)
    assert all(is_nlsw(s) for s in expected)
    assert combo_poly(got) == expand(t)


def test_rewrite_nlsw_is_identity():
    t = bracket_std(W("x2x2x1x1x2x1"))
    assert rewrite_to_nlsw(t) == [(1, t)]


def test_rewrite_antisymmetry():
    assert rewrite_to_nlsw(Node(Leaf(0), Leaf(1))) == [(-1, bracket_std(W("x2x1")))]
    assert rewrite_to_nlsw(Node(Leaf(1), Leaf(1))) == []


@settings(max_examples=200, deadline=None)
@given(trees(8))
def test_rewrite_is_sound(t):
    got = rewrite_to_nlsw(t)
    assert combo_poly(got) == expand(t)
    trees_out = [s for _, s in got]
    assert len(set(trees_out)) == len(trees_out)
    for c, s in got:
        assert c != 0
        assert is_nlsw(s)
        assert len(s.word) == len(t.word)
        if isinstance(t, Node):
            low = min(t.left.word, t.right.word, key=lambda w: tuple(w) + (10**9,))
            assert gt(s.word, low)


@settings(max_examples=150, deadline=None)
@given(trees(8))
def test_decompose_agrees_with_rewrite(t):
    dec = lie_decompose(expand(t))
    assert dec is not None
    assert sorted(dec, key=repr) == sorted(rewrite_to_nlsw(t), key=repr)


# ---------------------------------------------------------------------------
# Lie membership


def test_decompose_examples():
    assert lie_decompose(P("x2x1 - x1x2")) == [(1, bracket_std(W("x2x1")))]
    assert lie_decompose(P("x1x2")) is None
    assert lie_decompose(P("x2x1")) is None
    assert lie_decompose(Poly.zero()) == []


def test_decompose_recovers_random_combinations():
    rng = random.Random(3)
    pool = [bracket_std(u) for u in enumerate_alsw(3, 6)]
    for _ in range(60):
        chosen = rng.sample(pool, rng.randint(1, 6))
        terms = [(Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4)), t) for t in chosen]
        got = lie_decompose(combo_poly(terms))
        assert got is not None
        assert sorted(got, key=repr) == sorted(terms, key=repr)


def test_nlsw_count_matches_necklaces():
    for n in range(1, 8):
        nlsws = [bracket_std(u) for u in enumerate_alsw(2, n) if len(u) == n]
        assert len(set(nlsws)) == necklace_count(2, n)


def test_liepoly_rejects_non_lie():
    with pytest.raises(NotLieError):
        LiePoly(P("x1x2"))
    with pytest.raises(NotLieError):
        L("x2x1")


def test_liepoly_carries_basis():
    f = L("[x2 [x2 x1]] - 1/2 * x1")
    assert list(f.basis) == [(1, bracket_std(W("x2x2x1"))), (Fraction(-1, 2), Leaf(0))]
    assert f.lm == W("x2x2x1")
    assert combo_poly(f.basis) == f.poly


def test_lie_bracket_examples():
    f, g = L("[x2 x1] + x3"), L("x1 - [x3 x2]")
    assert not lie_bracket(f, f)
    assert lie_bracket(f, g) == -lie_bracket(g, f)
    assert lie_bracket(LiePoly.letter(1), LiePoly.letter(0)).poly == P("x2x1 - x1x2")


def test_lie_bracket_jacobi():
    f, g, h = L("[x2 x1]"), L("x3 + x1"), L("[x3 [x3 x2]]")
    total = lie_bracket(lie_bracket(f, g), h) + lie_bracket(lie_bracket(g, h), f) + lie_bracket(lie_bracket(h, f), g)
    assert not total


# ---------------------------------------------------------------------------
# normal s-words

SLOT = 50


def symbolic_contexts(s, a, b):
    """Expand the special bracketing with a fresh letter in place of s."""
    u = a + s.lm + b
    tree = special_bracket(u, a, s.lm, b).tree
    out = {}
    for w, c in expand(tree, slot=Poly.monomial((SLOT,))).items():
        i = w.index(SLOT)
        out[(w[:i], w[i + 1:])] = c
    return out


def test_normal_s_word_examples():
    s = L("[x2 x1]")
    assert normal_s_word(s) == s
    assert normal_s_word(s, (), W("x1")).poly == P("x2x1x1 - 2 * x1x2x1 + x1x1x2")
    got = normal_s_word(s, W("x2"), ())
    assert got.poly == expand(bracket_std(W("x2x2x1")))
    assert got.lm == W("x2x2x1")


def test_normal_s_word_errors():
    with pytest.raises(ValueError):
        normal_s_word(L("2 * [x2 x1]"), (), W("x1"))
    with pytest.raises(ValueError):
        normal_s_word(L("[x2 x1]"), W("x1"), ())


RELATIONS = ["[x2 x1]", "[x2 [x2 x1]] - x1", "[[x2 x1] x1] + 1/3 * [x3 x1]", "[x3 [x3 x2]] + [x2 x1] - x2"]


@pytest.mark.parametrize("rel", RELATIONS)
def test_normal_s_word_structure(rel):
    s = L(rel)
    seen = 0
    for u in enumerate_alsw(3, len(s.lm) + 3):
        for i in range(len(u) - len(s.lm) + 1):
            if u[i:i + len(s.lm)] != s.lm:
                continue
            a, b = u[:i], u[i + len(s.lm):]
            ctx = symbolic_contexts(s, a, b)
            assert ctx.pop((a, b)) == 1
            for (ai, bi), _ in ctx.items():
                assert compare_deglex(ai + s.lm + bi, u) < 0
            # substituting s gives the normal s-word, which leads with u
            nsw = normal_s_word(s, a, b)
            total = Poly.zero()
            for (ai, bi), c in symbolic_contexts(s, a, b).items():
                total = total + s.poly.sandwich(ai, bi) * c
            assert nsw.poly == total
            assert leading(nsw.poly) == (u, 1)
            seen += 1
    assert seen > 0


# ---------------------------------------------------------------------------
# text format


@pytest.mark.parametrize(
    "text,canonical",
    [
        ("x2x1 - x1x2", "x2x1 - x1x2"),
        ("-x1x2+x2x1", "x2x1 - x1x2"),
        ("[x2 x1] - 1/2 * x1", "x2x1 - x1x2 - 1/2 * x1"),
        ("2/4 x1 x2 + 0 * x3", "1/2 * x1x2"),
        ("x1 - x1", "0"),
        ("3 - x1", "-x1 + 3"),
    ],
)
def test_format_poly(text, canonical):
    assert format_poly(P(text), A3) == canonical
    assert P(canonical) == P(text)


def test_format_lie_round_trip():
    for text in RELATIONS + ["[x2 x1] - [x1 x2]", "0 * x1"]:
        f = L(text)
        out = format_lie(f, A3)
        assert parse_lie(out, A3) == f
        assert format_lie(parse_lie(out, A3), A3) == out


def test_format_lie_example():
    assert format_lie(L("x2x1 - x1x2 + 2 * x3"), A3) == "[x2 x1] + 2 * x3"


@pytest.mark.parametrize("bad,col", [("x1 +", 5), ("x1 x9", 4), ("[x1 x2", 1), ("2 *", 4), ("", 1), ("x1 ? x2", 4)])
def test_parse_errors_report_column(bad, col):
    with pytest.raises(PolyParseError) as info:
        P(bad)
    assert info.value.column == col


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.lists(st.integers(0, 2), max_size=4).map(tuple),
                       st.fractions(max_denominator=6), max_size=6))
def test_poly_text_round_trip(terms):
    p = Poly(terms)
    assert P(format_poly(p, A3)) == p


def test_format_tree_via_basis():
    f = L("[[x2 x1] x1]")
    assert [format_tree(t, A3) for _, t in f.basis] == ["[[x2 x1] x1]"]
