"""Finite topological spaces, finite products and Borel algebras.

A finite topology is determined by the minimal open neighbourhood of each
point: a set is open iff it contains the neighbourhood of each of its points.
:class:`Topology` keeps those neighbourhoods and builds the sorted list of
opens lazily, since products of even small spaces have very many opens.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import CapExceeded, CarrierMismatch
from .setcore import Carrier, FiniteFunction, SubsetMask, bit_indices
from .sigma import Check, SigmaAlgebra, generate_sigma

DEFAULT_PRODUCT_CAP = 4096


class Topology:
    """A topology on a finite carrier."""

    def __init__(self, carrier: Carrier, neighborhoods: Sequence[int]):
        if len(neighborhoods) != carrier.size:
            raise ValueError("need one neighbourhood per point")
        self.carrier = carrier
        self.neighborhoods = tuple(neighborhoods)

    @classmethod
    def from_opens(cls, carrier: Carrier, family: Iterable) -> "Topology":
        """Adopt an explicit family, raising ``ValueError`` unless it is a topology."""
        bits = carrier.family_bits(family)
        check = _check_topology_bits(carrier, bits)
        if not check:
            raise ValueError(f"not a topology on {carrier}: {check.describe()}")
        t = cls(carrier, _neighborhoods_of(carrier, bits))
        t.__dict__["opens_bits"] = tuple(sorted(bits))
        return t

    @classmethod
    def discrete(cls, carrier: Carrier) -> "Topology":
        return cls(carrier, tuple(1 << i for i in range(carrier.size)))

    @classmethod
    def indiscrete(cls, carrier: Carrier) -> "Topology":
        return cls(carrier, (carrier.full_bits,) * carrier.size)

    @classmethod
    def sierpinski(cls, labels=("0", "1")) -> "Topology":
        """Two points with opens ∅, {second}, both."""
        carrier = Carrier(tuple(labels))
        return cls(carrier, (0b11, 0b10))

    @cached_property
    def opens_bits(self) -> tuple[int, ...]:
        return tuple(sorted(_union_closure(set(self.neighborhoods))))

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens_bits)

    @property
    def opens(self) -> tuple[SubsetMask, ...]:
        return tuple(SubsetMask(self.carrier, b) for b in self.opens_bits)

    def is_open_bits(self, bits: int) -> bool:
        nbhd = self.neighborhoods
        for x in bit_indices(bits):
            if nbhd[x] & ~bits:
                return False
        return True

    def __contains__(self, item) -> bool:
        return self.is_open_bits(self.carrier.bits_of(item))

    def __len__(self) -> int:
        return len(self.opens_bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return self.carrier == other.carrier and self.neighborhoods == other.neighborhoods

    def __hash__(self) -> int:
        return hash((self.carrier.labels, self.neighborhoods))

    def is_discrete(self) -> bool:
        return all(u == 1 << i for i, u in enumerate(self.neighborhoods))

    def __repr__(self) -> str:
        if len(self.carrier) <= 4:
            opens = ", ".join(self.carrier.format_bits(b) for b in self.opens_bits)
            return f"Topology([{opens}])"
        return f"Topology(<{self.carrier.size} points>)"


def _neighborhoods_of(carrier: Carrier, family) -> tuple[int, ...]:
    out = []
    for x in range(carrier.size):
        u = carrier.full_bits
        for m in family:
            if m >> x & 1:
                u &= m
        out.append(u)
    return tuple(out)


def _union_closure(generators) -> set[int]:
    closed = {0}
    for g in sorted(generators):
        closed |= {m | g for m in closed}
    return closed


def _check_topology_bits(carrier: Carrier, family: frozenset[int]) -> Check:
    ordered = sorted(family)

    def mask(b):
        return SubsetMask(carrier, b)

    if 0 not in family:
        return Check(False, "contains-empty", (mask(0),))
    if carrier.full_bits not in family:
        return Check(False, "contains-carrier", (mask(carrier.full_bits),))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in family:
                return Check(False, "union", (mask(a), mask(b)))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & b not in family:
                return Check(False, "intersection", (mask(a), mask(b)))
    return Check(True)


def is_topology(carrier: Carrier, family: Iterable) -> Check:
    """Validate the open-set axioms on a finite carrier.

    Binary unions and intersections suffice here: any union of members of a
    finite family is a finite union.  The intersection axiom is the usual
    one, which is the complement form ``⋂ Uᵢᶜ = Uᶜ`` read through De Morgan.
    """
    return _check_topology_bits(carrier, carrier.family_bits(family))


def generate_topology(carrier: Carrier, subbasis: Iterable) -> Topology:
    """Smallest topology containing ``subbasis``.

    The minimal neighbourhood of ``x`` is the intersection of the subbasic
    sets containing it (the empty intersection being the whole carrier).
    """
    bits = carrier.family_bits(subbasis)
    return Topology(carrier, _neighborhoods_of(carrier, bits))


def all_topologies(carrier: Carrier, cap: int = 4) -> list[Topology]:
    """Every topology on a small carrier, sorted by their open families.

    Topologies on a finite set correspond to preorders; this walks all
    reflexive relations and keeps the transitive ones.
    """
    n = carrier.size
    if n > cap:
        raise CapExceeded("topology enumeration", n, cap)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    found = []
    for choice in product((0, 1), repeat=len(pairs)):
        nbhd = [1 << x for x in range(n)]
        for (x, y), on in zip(pairs, choice):
            if on:
                nbhd[x] |= 1 << y
        # transitive iff y ∈ U_x implies U_y ⊆ U_x
        if all(nbhd[y] & ~nbhd[x] == 0 for x in range(n) for y in bit_indices(nbhd[x])):
            found.append(Topology(carrier, tuple(nbhd)))
    found.sort(key=lambda t: t.opens_bits)
    return found


@dataclass(frozen=True, eq=False)
class ProductSpace:
    """A finite product of finite spaces with row-major point indexing."""

    factors: tuple[Topology, ...]
    carrier: Carrier
    topology: Topology

    @property
    def arity(self) -> int:
        return len(self.factors)

    @cached_property
    def _radices(self) -> tuple[int, ...]:
        return tuple(f.carrier.size for f in self.factors)

    def point_index(self, coords: Sequence[int]) -> int:
        idx = 0
        for c, k in zip(coords, self._radices):
            idx = idx * k + c
        return idx

    def point_coords(self, index: int) -> tuple[int, ...]:
        coords = []
        for k in reversed(self._radices):
            index, c = divmod(index, k)
            coords.append(c)
        return tuple(reversed(coords))

    def box_bits(self, sides: Sequence[int]) -> int:
        """The product of one subset per coordinate, as a subset of the product."""
        bits = 0
        axes = [list(bit_indices(s)) for s in sides]
        for coords in product(*axes):
            bits |= 1 << self.point_index(coords)
        return bits

    @cached_property
    def basis_bits(self) -> tuple[int, ...]:
        """All boxes of opens.

        Over a finite index set the requirement that all but finitely many
        sides be the whole factor is vacuous.
        """
        boxes = {self.box_bits(sides) for sides in product(*(f.opens_bits for f in self.factors))}
        return tuple(sorted(boxes))

    @property
    def basis(self) -> tuple[SubsetMask, ...]:
        return tuple(SubsetMask(self.carrier, b) for b in self.basis_bits)

    def projection(self, i: int) -> FiniteFunction:
        factor = self.factors[i]
        table = tuple(self.point_coords(p)[i] for p in range(self.carrier.size))
        return FiniteFunction(self.carrier, factor.carrier, table)


def product_space(factors: Sequence[Topology], cap: int = DEFAULT_PRODUCT_CAP) -> ProductSpace:
    factors = tuple(factors)
    size = 1
    for f in factors:
        size *= f.carrier.size
    if size > cap:
        raise CapExceeded("product carrier", size, cap)
    labels = [
        "(" + ",".join(f.carrier.labels[c] for f, c in zip(factors, coords)) + ")"
        for coords in product(*(range(f.carrier.size) for f in factors))
    ]
    carrier = Carrier(tuple(labels))
    shell = ProductSpace(factors, carrier, Topology.indiscrete(carrier))
    nbhds = tuple(
        shell.box_bits([f.neighborhoods[c] for f, c in zip(factors, shell.point_coords(p))])
        for p in range(carrier.size)
    )
    return ProductSpace(factors, carrier, Topology(carrier, nbhds))


def product_topology(factor: Topology, arity: int, cap: int = DEFAULT_PRODUCT_CAP) -> ProductSpace:
    """``factor`` to the power ``arity``; arity 0 is the one-point space."""
    if arity < 0:
        raise ValueError("arity must be non-negative")
    return product_space((factor,) * arity, cap)


def borel(t: Topology) -> SigmaAlgebra:
    """The σ-algebra generated by the opens of ``t``.

    Every open is a finite union of minimal neighbourhoods, so those generate
    the same σ-algebra as the full list of opens.
    """
    return generate_sigma(t.carrier, t.neighborhoods)


def check_same_carrier(a: Carrier, b: Carrier, what: str) -> None:
    if a != b:
        raise CarrierMismatch(f"{what}: {a} vs {b}")
