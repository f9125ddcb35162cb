"""Lyndon-Shirshov words, free Lie algebras and Gröbner-Shirshov bases.

Words are tuples of letter ranks over an :class:`Alphabet`; polynomials
have exact rational coefficients.
"""

from .bracketing import (
    Leaf,
    Node,
    Slot,
    SpecialBracketing,
    bracket_down_up,
    bracket_std,
    format_tree,
    is_nlsw,
    parse_tree,
    special_bracket,
)
from .gsb_assoc import complete_assoc, compositions_assoc, is_gsb_assoc, red_words, reduce_assoc
from .gsb_lie import (
    LieReduction,
    complete_lie,
    compositions_lie,
    crosscheck_gsb,
    is_gsb_lie,
    lie_reduce,
    red_counts,
    red_nlsw,
)
from .poly import (
    LiePoly,
    NotLieError,
    Poly,
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
from .presentation import Presentation, load_presentation, parse_presentation
from .words import (
    Alphabet,
    AlphabetError,
    EliminationLetter,
    compare_deglex,
    compare_shirshov_lex,
    eliminate,
    enumerate_alsw,
    is_alsw,
    is_alsw_by_elimination,
    longest_alsw_proper_suffix,
    lyndon_factorize,
)

__version__ = "0.1.0"
