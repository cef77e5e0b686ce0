"""Measurability and continuity of finite functions.

The default measurability check only looks at the preimages of a generating
family of the target σ-algebra (its atoms, unless told otherwise): the sets
whose preimage is measurable always form a σ-algebra, so it contains the
generated one as soon as it contains the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CarrierMismatch, PreconditionError
from .setcore import FiniteFunction, SubsetMask
from .sigma import Check, MeasurableSpace, SigmaAlgebra
from .topology import ProductSpace, Topology, borel


@dataclass(frozen=True)
class MeasurabilityVerdict:
    """``witness`` is ``(B, f⁻¹(B))`` for the smallest failing Borel set ``B``."""

    measurable: bool
    witness: tuple[SubsetMask, SubsetMask] | None = None

    def __post_init__(self):
        if self.measurable != (self.witness is None):
            raise ValueError("a witness is present exactly when measurability fails")

    def __bool__(self) -> bool:
        return self.measurable


def _require(f: FiniteFunction, source_carrier, target_carrier) -> None:
    if f.domain != source_carrier:
        raise CarrierMismatch(f"function domain {f.domain} is not the source carrier {source_carrier}")
    if f.codomain != target_carrier:
        raise CarrierMismatch(f"function codomain {f.codomain} is not the target carrier {target_carrier}")


def preimages_measurable(f: FiniteFunction, sets: Iterable[int], sigma: SigmaAlgebra) -> bool:
    return all(sigma.contains_bits(f.preimage_bits(b)) for b in sets)


def _smallest_failure(f: FiniteFunction, source: MeasurableSpace, target_borel: SigmaAlgebra):
    for b in target_borel.member_bits:
        pre = f.preimage_bits(b)
        if not source.sigma.contains_bits(pre):
            return SubsetMask(f.codomain, b), SubsetMask(f.domain, pre)
    return None


def is_measurable(
    f: FiniteFunction,
    source: MeasurableSpace,
    target_borel: SigmaAlgebra,
    *,
    generators: Iterable | None = None,
    full: bool = False,
) -> MeasurabilityVerdict:
    """Decide whether every preimage of a member of ``target_borel`` is measurable.

    ``generators`` must generate ``target_borel``; it defaults to the atoms.
    With ``full=True`` every member is checked instead.
    """
    _require(f, source.carrier, target_borel.carrier)
    if full:
        witness = _smallest_failure(f, source, target_borel)
        return MeasurabilityVerdict(witness is None, witness)
    if generators is None:
        gens = target_borel.atoms
    else:
        gens = [target_borel.carrier.bits_of(g) for g in generators]
    if preimages_measurable(f, gens, source.sigma):
        return MeasurabilityVerdict(True)
    return MeasurabilityVerdict(False, _smallest_failure(f, source, target_borel))


def is_continuous(f: FiniteFunction, source: Topology, target: Topology) -> Check:
    """Preimages of opens are open; the witness is ``(V, f⁻¹(V))`` for the least failing open."""
    _require(f, source.carrier, target.carrier)
    if all(source.is_open_bits(f.preimage_bits(u)) for u in target.neighborhoods):
        return Check(True)
    for v in target.opens_bits:
        pre = f.preimage_bits(v)
        if not source.is_open_bits(pre):
            return Check(False, "continuity", (SubsetMask(target.carrier, v), SubsetMask(f.domain, pre)))
    raise AssertionError("neighbourhood test failed but every open has an open preimage")


def continuous_implies_measurable_check(f: FiniteFunction, source: Topology, target: Topology) -> bool:
    """Measurability of a continuous map between Borel spaces; ``False`` means a kernel bug."""
    if not is_continuous(f, source, target):
        raise PreconditionError("function is not continuous")
    space = MeasurableSpace(source.carrier, borel(source))
    return is_measurable(f, space, borel(target)).measurable


def compose_measurable(
    f: FiniteFunction,
    g: FiniteFunction,
    source: MeasurableSpace,
    middle_borel: SigmaAlgebra,
    target_borel: SigmaAlgebra,
    *,
    check_preconditions: bool = True,
) -> MeasurabilityVerdict:
    """Verdict for ``g ∘ f`` where ``f: X → Y`` and ``g: Y → Z``."""
    _require(f, source.carrier, middle_borel.carrier)
    _require(g, middle_borel.carrier, target_borel.carrier)
    if check_preconditions:
        if not is_measurable(f, source, middle_borel):
            raise PreconditionError("inner function is not measurable")
        if not is_measurable(g, MeasurableSpace(middle_borel.carrier, middle_borel), target_borel):
            raise PreconditionError("outer function is not measurable")
    return is_measurable(g.after(f), source, target_borel)


def pairing(fs: Sequence[FiniteFunction], space: ProductSpace) -> FiniteFunction:
    """The tuple map ``x ↦ (f_0(x), …, f_{n-1}(x))`` into the product carrier."""
    fs = list(fs)
    if len(fs) != space.arity:
        raise ValueError(f"pairing {len(fs)} functions into a product of arity {space.arity}")
    if not fs:
        raise ValueError("pairing into the one-point space needs an explicit domain; use pairing_on")
    return pairing_on(fs[0].domain, fs, space)


def pairing_on(domain, fs: Sequence[FiniteFunction], space: ProductSpace) -> FiniteFunction:
    """:func:`pairing` with an explicit domain, so that the empty tuple works."""
    fs = list(fs)
    if len(fs) != space.arity:
        raise ValueError(f"pairing {len(fs)} functions into a product of arity {space.arity}")
    for i, (fi, factor) in enumerate(zip(fs, space.factors)):
        if fi.domain != domain:
            raise CarrierMismatch(f"component {i} has a different domain")
        if fi.codomain != factor.carrier:
            raise CarrierMismatch(f"component {i} does not land in factor {i}")
    table = tuple(space.point_index([fi.table[x] for fi in fs]) for x in range(domain.size))
    return FiniteFunction(domain, space.carrier, table)
