"""Built-in presentations of monoids, groups and rings.

The commuting diagrams of the categorical presentations become equations in
which the diagonal ``Δ`` repeats a variable and ``switch`` reorders them.
"""

from __future__ import annotations

from ..errors import UnknownTheory
from .dsl import parse_theory
from .terms import TheoryPresentation

MONOID_TEXT = """\
theory Monoid
ops: e/0, mul/2
eq: mul(e, x) = x  # left_unit
eq: mul(x, e) = x  # right_unit
eq: mul(mul(x, y), z) = mul(x, mul(y, z))  # associativity
"""

GROUP_TEXT = """\
theory Group
ops: e/0, inv/1, mul/2
eq: mul(e, x) = x  # left_unit
eq: mul(x, e) = x  # right_unit
eq: mul(mul(x, y), z) = mul(x, mul(y, z))  # associativity
eq: mul(inv(x), x) = e  # left_inverse
eq: mul(x, inv(x)) = e  # right_inverse
"""

# Only the diagrams drawn for rings: no commutativity of addition.
PAPER_RING_TEXT = """\
theory PaperRing
ops: zero/0, one/0, neg/1, add/2, mul/2
eq: mul(one, x) = x  # mul_left_unit
eq: mul(x, one) = x  # mul_right_unit
eq: mul(mul(x, y), z) = mul(x, mul(y, z))  # mul_associativity
eq: add(zero, x) = x  # add_left_unit
eq: add(x, zero) = x  # add_right_unit
eq: add(add(x, y), z) = add(x, add(y, z))  # add_associativity
eq: add(neg(x), x) = zero  # add_left_inverse
eq: add(x, neg(x)) = zero  # add_right_inverse
eq: mul(x, add(y, z)) = add(mul(x, y), mul(x, z))  # left_distributivity
eq: mul(add(x, y), z) = add(mul(x, z), mul(y, z))  # right_distributivity
"""

RING_TEXT = PAPER_RING_TEXT.replace("theory PaperRing", "theory Ring").replace(
    "  # add_right_inverse\n",
    "  # add_right_inverse\neq: add(x, y) = add(y, x)  # add_commutativity\n",
)

_TEXTS = {
    "Monoid": MONOID_TEXT,
    "Group": GROUP_TEXT,
    "Ring": RING_TEXT,
    "PaperRing": PAPER_RING_TEXT,
}

BUILTIN_NAMES = tuple(_TEXTS)


def builtin(name: str) -> TheoryPresentation:
    try:
        text = _TEXTS[name]
    except KeyError:
        raise UnknownTheory(name) from None
    return parse_theory(text)
