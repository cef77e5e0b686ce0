"""Topological models: algebras whose operations are continuous."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CarrierMismatch
from .measurable import is_continuous
from .setcore import FiniteFunction
from .theory.model import Algebra, ModelReport, check_model
from .theory.terms import TheoryPresentation
from .topology import ProductSpace, Topology, product_topology


@dataclass(frozen=True)
class TopologicalAlgebra:
    """An algebra together with a topology on the same carrier.

    Continuity is not enforced at construction, so that failing candidates can
    be represented and reported on; use :func:`check_topological_model`.
    """

    algebra: Algebra
    topology: Topology

    def __post_init__(self):
        if self.algebra.carrier != self.topology.carrier:
            raise CarrierMismatch("algebra and topology live on different carriers")

    @property
    def carrier(self):
        return self.algebra.carrier


@dataclass(frozen=True)
class ContinuityFailure:
    op: str
    open_set: tuple[str, ...]
    preimage: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"op": self.op, "open": list(self.open_set), "preimage": list(self.preimage)}


@dataclass
class TopModelReport:
    model: ModelReport
    continuity_failures: list[ContinuityFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.model.passed and not self.continuity_failures

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "equations": self.model.to_dict(),
            "continuity_failures": [f.to_dict() for f in self.continuity_failures],
        }


def op_as_function(alg: Algebra, name: str, domain: ProductSpace) -> FiniteFunction:
    return FiniteFunction(domain.carrier, alg.carrier, alg.tables[name])


def check_topological_model(alg: Algebra, top: Topology, th: TheoryPresentation) -> TopModelReport:
    """Equations as for a set model, plus continuity of each op from the product topology."""
    if alg.carrier != top.carrier:
        raise CarrierMismatch("algebra and topology live on different carriers")
    model = check_model(alg, th)
    failures = []
    powers: dict[int, ProductSpace] = {}
    for op in th.ops:
        if op.arity == 0:
            # a map out of the one-point space is always continuous
            continue
        if op.arity not in powers:
            powers[op.arity] = product_topology(top, op.arity)
        space = powers[op.arity]
        verdict = is_continuous(op_as_function(alg, op.name, space), space.topology, top)
        if not verdict:
            v, pre = verdict.witness
            failures.append(ContinuityFailure(op.name, v.labels(), pre.labels()))
    return TopModelReport(model, failures)
