"""Text shorthands for building test inputs."""

from fractions import Fraction

from shirshov import (
    Alphabet,
    Leaf,
    LiePoly,
    Node,
    Poly,
    bracket_std,
    enumerate_alsw,
    lie_bracket,
    parse_lie,
    parse_poly,
)

# criterion number -> (PASS/FAIL, title), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def W(text, n=5):
    """Word from text like ``x2x1`` over the standard alphabet."""
    return Alphabet.standard(n).parse_word(text)


def P(text, n=3):
    return parse_poly(text, Alphabet.standard(n))


def L(text, n=3):
    return parse_lie(text, Alphabet.standard(n))


def paren_tree(text, n=5):
    """Read the shorthand ``(((x3x2)(x2x1))(x2x1x1))``.

    Parenthesized groups of two items are nodes; a run of letters inside
    one group with more than one letter stands for its standard bracketing.
    """
    alphabet = Alphabet.standard(n)
    pos = 0

    def parse():
        nonlocal pos
        if text[pos] == "(":
            pos += 1
            items = []
            while text[pos] != ")":
                items.append(parse())
            pos += 1
            if len(items) == 1:
                return items[0]
            if len(items) == 2:
                return Node(*items)
            raise ValueError(text)
        start = pos
        while pos < len(text) and text[pos] not in "()":
            pos += 1
        w = alphabet.parse_word(text[start:pos])
        return Leaf(w[0]) if len(w) == 1 else bracket_std(w)

    return parse()


# ---------------------------------------------------------------------------
# random inputs


def random_coeff(rng):
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.randint(1, 3))


def random_word(rng, letters, max_len):
    return tuple(rng.randrange(letters) for _ in range(rng.randint(0, max_len)))


def random_assoc_ideal_element(rng, relations, letters, terms=4, ctx_len=2):
    """Sum of c * a s b over the given relations."""
    h = Poly.zero()
    for _ in range(terms):
        s = rng.choice(relations)
        a, b = random_word(rng, letters, ctx_len), random_word(rng, letters, ctx_len)
        h = h + getattr(s, "poly", s).sandwich(a, b) * random_coeff(rng)
    return h


def random_lie_poly(rng, letters, max_deg, terms=4):
    pool = enumerate_alsw(letters, max_deg)
    return LiePoly.from_basis((random_coeff(rng), bracket_std(rng.choice(pool))) for _ in range(terms))


def random_lie_ideal_element(rng, relations, letters, terms=3, depth=3):
    """Sum of iterated brackets of relations with letters and short NLSWs."""
    pool = [LiePoly.from_tree(bracket_std(u)) for u in enumerate_alsw(letters, 2)]
    h = LiePoly.zero()
    for _ in range(terms):
        x = rng.choice(relations)
        for _ in range(rng.randint(0, depth)):
            y = rng.choice(pool)
            x = lie_bracket(x, y) if rng.random() < 0.5 else lie_bracket(y, x)
        h = h + x * random_coeff(rng)
    return h
