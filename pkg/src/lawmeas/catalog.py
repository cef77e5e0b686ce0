"""Small named algebras used by the sweeps, the CLI and the tests."""

from __future__ import annotations

from .setcore import Carrier
from .theory.model import Algebra


def cyclic_group(n: int) -> Algebra:
    """Integers mod ``n`` under addition, with ops ``e``, ``inv``, ``mul``."""
    c = Carrier.range(n)
    return Algebra.from_functions(
        c,
        {
            "e": (0, lambda: 0),
            "inv": (1, lambda x: (-x) % n),
            "mul": (2, lambda x, y: (x + y) % n),
        },
    )


def klein_four() -> Algebra:
    """``Z2 × Z2`` with points labelled ``e, a, b, c``; componentwise xor."""
    c = Carrier(("e", "a", "b", "c"))
    return Algebra.from_functions(
        c,
        {
            "e": (0, lambda: 0),
            "inv": (1, lambda x: x),
            "mul": (2, lambda x, y: x ^ y),
        },
    )


def cyclic_ring(n: int) -> Algebra:
    """Integers mod ``n`` with ``zero, one, neg, add, mul``."""
    c = Carrier.range(n)
    return Algebra.from_functions(
        c,
        {
            "zero": (0, lambda: 0),
            "one": (0, lambda: 1 % n),
            "neg": (1, lambda x: (-x) % n),
            "add": (2, lambda x, y: (x + y) % n),
            "mul": (2, lambda x, y: (x * y) % n),
        },
    )


def subtraction_mod(n: int) -> Algebra:
    """``x - y`` mod ``n`` posing as a group law (not associative for ``n > 2``)."""
    c = Carrier.range(n)
    return Algebra.from_functions(
        c,
        {
            "e": (0, lambda: 0),
            "inv": (1, lambda x: x),
            "mul": (2, lambda x, y: (x - y) % n),
        },
    )


def cyclic_monoid(n: int) -> Algebra:
    g = cyclic_group(n)
    return Algebra(g.carrier, {k: g.tables[k] for k in ("e", "mul")}, {"e": 0, "mul": 2})


CURATED_GROUPS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "V4": klein_four,
}

CURATED_RINGS = {
    "Z2": lambda: cyclic_ring(2),
    "Z3": lambda: cyclic_ring(3),
    "Z4": lambda: cyclic_ring(4),
}
