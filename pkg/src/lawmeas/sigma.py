"""σ-algebras on finite carriers.

On a finite carrier every countable union is a finite union, so closure under
binary union is the whole third axiom.  A finite σ-algebra is exactly the
family of unions of blocks of a partition (its atoms); :class:`SigmaAlgebra`
keeps that partition and materializes the member list on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import CarrierMismatch
from .setcore import (
    Carrier,
    Partition,
    SubsetMask,
    all_partitions,
    bit_indices,
)


@dataclass(frozen=True)
class Check:
    """Outcome of an axiom check; ``witness`` names the offending sets."""

    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        sets = ", ".join(repr(w) for w in self.witness)
        return f"violates {self.axiom}: {sets}"


class SigmaAlgebra:
    """A σ-algebra stored by its atoms, with the extensional member list."""

    def __init__(self, carrier: Carrier, partition: Partition):
        if partition.carrier != carrier:
            raise CarrierMismatch("partition lives on another carrier")
        self.carrier = carrier
        self.partition = partition

    @classmethod
    def trivial(cls, carrier: Carrier) -> "SigmaAlgebra":
        return cls(carrier, Partition.indiscrete(carrier))

    @classmethod
    def power_set(cls, carrier: Carrier) -> "SigmaAlgebra":
        return cls(carrier, Partition.discrete(carrier))

    @classmethod
    def from_family(cls, carrier: Carrier, family: Iterable) -> "SigmaAlgebra":
        """Adopt an explicit family, raising ``ValueError`` unless it is a σ-algebra."""
        bits = carrier.family_bits(family)
        check = _check_sigma_bits(carrier, bits)
        if not check:
            raise ValueError(f"not a σ-algebra on {carrier}: {check.describe()}")
        return cls(carrier, _atoms_of(carrier, bits))

    @property
    def atoms(self) -> tuple[int, ...]:
        return self.partition.blocks

    @cached_property
    def member_bits(self) -> tuple[int, ...]:
        return tuple(self.partition.unions())

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.member_bits)

    @property
    def members(self) -> tuple[SubsetMask, ...]:
        return tuple(SubsetMask(self.carrier, b) for b in self.member_bits)

    def contains_bits(self, bits: int) -> bool:
        for block in self.partition.blocks:
            part = bits & block
            if part and part != block:
                return False
        return True

    def __contains__(self, item) -> bool:
        return self.contains_bits(self.carrier.bits_of(item))

    def __len__(self) -> int:
        return 1 << len(self.partition.blocks)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SigmaAlgebra):
            return NotImplemented
        return self.carrier == other.carrier and self.partition == other.partition

    def __hash__(self) -> int:
        return hash((self.carrier.labels, self.partition.blocks))

    def issubset(self, other: "SigmaAlgebra") -> bool:
        """Every member of ``self`` belongs to ``other``."""
        return all(other.contains_bits(b) for b in self.atoms)

    def __repr__(self) -> str:
        atoms = ", ".join(self.carrier.format_bits(b) for b in self.atoms)
        return f"SigmaAlgebra(atoms=[{atoms}])"


@dataclass(frozen=True)
class MeasurableSpace:
    carrier: Carrier
    sigma: SigmaAlgebra

    def __post_init__(self):
        if self.sigma.carrier != self.carrier:
            raise CarrierMismatch("σ-algebra lives on another carrier")

    @classmethod
    def discrete(cls, carrier: Carrier) -> "MeasurableSpace":
        return cls(carrier, SigmaAlgebra.power_set(carrier))

    @classmethod
    def indiscrete(cls, carrier: Carrier) -> "MeasurableSpace":
        return cls(carrier, SigmaAlgebra.trivial(carrier))


def _atoms_of(carrier: Carrier, family: frozenset[int]) -> Partition:
    full = carrier.full_bits
    blocks = set()
    for x in range(carrier.size):
        atom = full
        for m in family:
            if m >> x & 1:
                atom &= m
        blocks.add(atom)
    return Partition(carrier, tuple(blocks))


def _check_sigma_bits(carrier: Carrier, family: frozenset[int]) -> Check:
    full = carrier.full_bits
    ordered = sorted(family)

    def mask(b):
        return SubsetMask(carrier, b)

    if full not in family:
        return Check(False, "contains-carrier", (mask(full),))
    for a in ordered:
        if full & ~a not in family:
            return Check(False, "complement", (mask(a),))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in family:
                return Check(False, "union", (mask(a), mask(b)))
    return Check(True)


def is_sigma_algebra(carrier: Carrier, family: Iterable) -> Check:
    """Validate the σ-algebra axioms, reporting the first violation.

    Axioms are tried in the order carrier membership, complements, pairwise
    unions; within an axiom, sets are scanned in canonical (numeric) order.
    """
    return _check_sigma_bits(carrier, carrier.family_bits(family))


def generate_sigma(carrier: Carrier, generators: Iterable) -> SigmaAlgebra:
    """Smallest σ-algebra containing ``generators``.

    Refines the one-block partition by every generator; the generated
    σ-algebra is the family of unions of the resulting cells.
    """
    partition = Partition.indiscrete(carrier)
    discrete = carrier.size
    for g in generators:
        partition = partition.refine(carrier.bits_of(g))
        if len(partition) == discrete:
            break
    return SigmaAlgebra(carrier, partition)


def all_sigma_algebras(carrier: Carrier, cap: int | None = None) -> list[SigmaAlgebra]:
    """One σ-algebra per set partition, in partition enumeration order."""
    return [SigmaAlgebra(carrier, p) for p in all_partitions(carrier, cap)]


def sigma_satisfies_topology(s: SigmaAlgebra) -> bool:
    """Check the open-set axioms against the members of a finite σ-algebra."""
    from .topology import is_topology

    return is_topology(s.carrier, s.member_bits).ok


def atom_labels(s: SigmaAlgebra) -> list[list[str]]:
    return [[s.carrier.labels[i] for i in bit_indices(b)] for b in s.atoms]
