"""Finite carriers, bit-vector subsets, finite functions and set partitions.

Every subset of a carrier with ``n`` points is an ``int`` whose bit ``i`` is
set iff the point with index ``i`` belongs to it.  :class:`SubsetMask` wraps
such an integer together with its carrier for the public surface; the hot
loops of the other modules work on the raw integers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, CarrierMismatch

DEFAULT_ENUMERATION_CAP = 6
CAP_ENV_VAR = "LAWMEAS_CAP"


def enumeration_cap() -> int:
    """Largest carrier size for exhaustive partition/σ-algebra sweeps."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_ENUMERATION_CAP
    return int(raw)


def full_bits(n: int) -> int:
    return (1 << n) - 1


def bit_indices(bits: int) -> Iterator[int]:
    i = 0
    while bits:
        if bits & 1:
            yield i
        bits >>= 1
        i += 1


@dataclass(frozen=True)
class Carrier:
    """An ordered finite set of distinct labelled points."""

    labels: tuple[str, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            seen = set()
            dup = next(label for label in labels if label in seen or seen.add(label))
            raise ValueError(f"duplicate carrier label {dup!r}")
        object.__setattr__(self, "_index", index)

    @classmethod
    def range(cls, n: int, prefix: str = "") -> "Carrier":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"{label!r} is not a point of {self}") from None

    @property
    def full_bits(self) -> int:
        return full_bits(self.size)

    def empty(self) -> "SubsetMask":
        return SubsetMask(self, 0)

    def full(self) -> "SubsetMask":
        return SubsetMask(self, self.full_bits)

    def subset(self, labels: Iterable[str]) -> "SubsetMask":
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return SubsetMask(self, bits)

    def bits_of(self, item) -> int:
        """Normalize a mask, an int, or an iterable of labels to raw bits."""
        if isinstance(item, SubsetMask):
            if item.carrier != self:
                raise CarrierMismatch(f"subset lives on {item.carrier}, expected {self}")
            return item.bits
        if isinstance(item, int):
            if item < 0 or item > self.full_bits:
                raise CarrierMismatch(f"bits {item:#b} out of range for {self.size} points")
            return item
        if isinstance(item, str):
            raise TypeError("a subset must be an iterable of labels, not a single string")
        return self.subset(item).bits

    def family_bits(self, family: Iterable) -> frozenset[int]:
        return frozenset(self.bits_of(item) for item in family)

    def format_bits(self, bits: int) -> str:
        return "{" + ",".join(self.labels[i] for i in bit_indices(bits)) + "}"

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True, order=False)
class SubsetMask:
    """A subset of a finite carrier stored as a bit-vector."""

    carrier: Carrier
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits > self.carrier.full_bits:
            raise CarrierMismatch(f"bits {self.bits:#b} out of range for {self.carrier.size} points")

    def _other(self, other: "SubsetMask") -> int:
        if not isinstance(other, SubsetMask):
            return NotImplemented
        if other.carrier != self.carrier:
            raise CarrierMismatch("subsets live on different carriers")
        return other.bits

    def __or__(self, other):
        return SubsetMask(self.carrier, self.bits | self._other(other))

    def __and__(self, other):
        return SubsetMask(self.carrier, self.bits & self._other(other))

    def __sub__(self, other):
        return SubsetMask(self.carrier, self.bits & ~self._other(other))

    def __invert__(self):
        return complement(self)

    def __lt__(self, other):
        return self.bits < self._other(other)

    def __le__(self, other):
        """Subset order (not the canonical sort order)."""
        return self.bits & ~self._other(other) == 0

    def __contains__(self, label) -> bool:
        return bool(self.bits >> self.carrier.index(label) & 1)

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def labels(self) -> tuple[str, ...]:
        return tuple(self.carrier.labels[i] for i in self)

    def __repr__(self) -> str:
        return f"SubsetMask({self.carrier.format_bits(self.bits)})"


def complement(s: SubsetMask) -> SubsetMask:
    return SubsetMask(s.carrier, s.carrier.full_bits & ~s.bits)


@dataclass(frozen=True)
class FiniteFunction:
    """A total function between finite carriers given by its value table."""

    domain: Carrier
    codomain: Carrier
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.domain.size:
            raise ValueError(f"table has {len(table)} entries for a domain of {self.domain.size} points")
        k = self.codomain.size
        for x, v in enumerate(table):
            if not 0 <= v < k:
                raise ValueError(f"table entry {v} at {self.domain.labels[x]!r} is not a codomain index")

    @classmethod
    def from_mapping(cls, domain: Carrier, codomain: Carrier, mapping) -> "FiniteFunction":
        return cls(domain, codomain, tuple(codomain.index(mapping[label]) for label in domain.labels))

    @classmethod
    def identity(cls, carrier: Carrier) -> "FiniteFunction":
        return cls(carrier, carrier, tuple(range(carrier.size)))

    @classmethod
    def constant(cls, domain: Carrier, codomain: Carrier, value: int) -> "FiniteFunction":
        return cls(domain, codomain, (value,) * domain.size)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def preimage_bits(self, bits: int) -> int:
        out = 0
        for x, y in enumerate(self.table):
            if bits >> y & 1:
                out |= 1 << x
        return out

    def after(self, inner: "FiniteFunction") -> "FiniteFunction":
        """``self ∘ inner``."""
        if inner.codomain != self.domain:
            raise CarrierMismatch("cannot compose: inner codomain differs from outer domain")
        table = self.table
        return FiniteFunction(inner.domain, self.codomain, tuple(table[y] for y in inner.table))

    def is_constant(self) -> bool:
        return len(set(self.table)) <= 1

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{a}->{self.codomain.labels[v]}" for a, v in zip(self.domain.labels, self.table)
        )
        return f"FiniteFunction({pairs})"


def preimage(f: FiniteFunction, b: SubsetMask) -> SubsetMask:
    if b.carrier != f.codomain:
        raise CarrierMismatch("subset does not live on the function's codomain")
    return SubsetMask(f.domain, f.preimage_bits(b.bits))


def all_functions(domain: Carrier, codomain: Carrier) -> Iterator[FiniteFunction]:
    """All functions in lexicographic table order."""
    from itertools import product

    for table in product(range(codomain.size), repeat=domain.size):
        yield FiniteFunction(domain, codomain, table)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering the carrier, ordered by least element."""

    carrier: Carrier
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=_lowest_bit))
        object.__setattr__(self, "blocks", blocks)
        seen = 0
        for b in blocks:
            if b == 0:
                raise ValueError("partition has an empty block")
            if b & seen:
                raise ValueError("partition blocks overlap")
            seen |= b
        if seen != self.carrier.full_bits:
            raise ValueError("partition blocks do not cover the carrier")

    @classmethod
    def discrete(cls, carrier: Carrier) -> "Partition":
        return cls(carrier, tuple(1 << i for i in range(carrier.size)))

    @classmethod
    def indiscrete(cls, carrier: Carrier) -> "Partition":
        return cls(carrier, (carrier.full_bits,) if carrier.size else ())

    def masks(self) -> tuple[SubsetMask, ...]:
        return tuple(SubsetMask(self.carrier, b) for b in self.blocks)

    def refine(self, bits: int) -> "Partition":
        """Split every block into its parts inside and outside ``bits``."""
        out = []
        for b in self.blocks:
            inside, outside = b & bits, b & ~bits
            if inside:
                out.append(inside)
            if outside:
                out.append(outside)
        return Partition(self.carrier, tuple(out))

    def unions(self) -> list[int]:
        """All unions of blocks, sorted by numeric bit value."""
        members = [0]
        for b in self.blocks:
            members.extend([m | b for m in members])
        members.sort()
        return members

    def __len__(self) -> int:
        return len(self.blocks)


def _lowest_bit(bits: int) -> int:
    return (bits & -bits).bit_length()


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    rgs = [0] * n
    maxima = [0] * n  # maxima[i] = max(rgs[:i]) (maxima[0] unused)
    while True:
        yield list(rgs)
        # bump the rightmost position that may still grow
        i = n - 1
        while i > 0 and rgs[i] == maxima[i] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, n):
            rgs[j] = 0
            maxima[j] = max(maxima[j - 1], rgs[j - 1])


def all_partitions(c: Carrier, cap: int | None = None) -> list[Partition]:
    """Every set partition of ``c`` in restricted-growth-string order."""
    cap = enumeration_cap() if cap is None else cap
    if c.size > cap:
        raise CapExceeded("partition enumeration", c.size, cap)
    out = []
    for rgs in _restricted_growth_strings(c.size):
        blocks = [0] * (max(rgs) + 1 if rgs else 0)
        for i, label in enumerate(rgs):
            blocks[label] |= 1 << i
        out.append(Partition(c, tuple(blocks)))
    return out


def format_family(carrier: Carrier, family: Sequence[int]) -> list[list[str]]:
    return [[carrier.labels[i] for i in bit_indices(b)] for b in family]
