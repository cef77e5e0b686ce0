"""Finite verification kernel for algebras of Borel-measurable functions.

Given a finite measurable space ``X`` and a finite topological model ``Y`` of
an equational theory, the measurable functions ``X → Y`` with pointwise
operations form a model of the same theory.  This package enumerates and
checks that construction together with its supporting lemmas.
"""

from .errors import (
    CapExceeded,
    CarrierMismatch,
    ClosureError,
    LawmeasError,
    MissingOpError,
    NoConstantsError,
    ParseError,
    PreconditionError,
)
from .measmodel import (
    MeasFunctionSpace,
    TheoremReport,
    build_meas_space,
    check_product_preservation,
    lift_operation,
    verify_theorem,
)
from .measurable import (
    MeasurabilityVerdict,
    compose_measurable,
    continuous_implies_measurable_check,
    is_continuous,
    is_measurable,
    pairing,
)
from .setcore import Carrier, FiniteFunction, Partition, SubsetMask, all_partitions, complement, preimage
from .sigma import (
    MeasurableSpace,
    SigmaAlgebra,
    all_sigma_algebras,
    generate_sigma,
    is_sigma_algebra,
    sigma_satisfies_topology,
)
from .topmodel import TopologicalAlgebra, check_topological_model
from .topology import ProductSpace, Topology, borel, generate_topology, is_topology, product_topology

__all__ = [
    "CapExceeded",
    "Carrier",
    "CarrierMismatch",
    "ClosureError",
    "FiniteFunction",
    "LawmeasError",
    "MeasFunctionSpace",
    "MeasurabilityVerdict",
    "MeasurableSpace",
    "MissingOpError",
    "NoConstantsError",
    "ParseError",
    "Partition",
    "PreconditionError",
    "ProductSpace",
    "SigmaAlgebra",
    "SubsetMask",
    "TheoremReport",
    "TopologicalAlgebra",
    "Topology",
    "all_partitions",
    "all_sigma_algebras",
    "borel",
    "build_meas_space",
    "check_product_preservation",
    "check_topological_model",
    "complement",
    "compose_measurable",
    "continuous_implies_measurable_check",
    "generate_sigma",
    "generate_topology",
    "is_continuous",
    "is_measurable",
    "is_sigma_algebra",
    "is_topology",
    "lift_operation",
    "pairing",
    "preimage",
    "product_topology",
    "sigma_satisfies_topology",
    "verify_theorem",
]

__version__ = "0.1.0"
