"""Algebras of Borel-measurable functions into a topological model.

For a finite measurable space ``X`` and a finite topological model ``Y`` the
set ``Meas(X, Y)`` of functions that are measurable for the Borel algebra of
``Y`` is enumerated in lexicographic table order.  Operations act pointwise,
``op(f_1, …, f_n)(x) = op(f_1(x), …, f_n(x))``, and :func:`verify_theorem`
checks that the result is again an algebra for the same presentation and that
``Meas(X, Yⁿ) ≅ Meas(X, Y)ⁿ`` through post-composition with projections.

A function ``X → Y`` is encoded by the integer ``Σ f(x)·kⁿ⁻¹⁻ˣ`` with
``k = |Y|``, so numeric order of codes is lexicographic order of tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import CapExceeded, ClosureError, NoConstantsError, PreconditionError
from .setcore import Carrier, FiniteFunction
from .sigma import MeasurableSpace, SigmaAlgebra
from .theory.model import Algebra, ModelReport, check_model
from .theory.terms import OpSymbol, TheoryPresentation
from .topmodel import TopologicalAlgebra, TopModelReport, check_topological_model
from .topology import ProductSpace, Topology, borel, product_topology

DEFAULT_FUNCTION_CAP = 10**6
DEFAULT_PRODUCT_ARITIES = (0, 1, 2)


@lru_cache(maxsize=64)
def _power(top: Topology, n: int) -> ProductSpace:
    return product_topology(top, n)


@lru_cache(maxsize=128)
def _borel(top: Topology) -> SigmaAlgebra:
    return borel(top)


def _weights(k: int, n: int) -> np.ndarray:
    return np.array([k ** (n - 1 - x) for x in range(n)], dtype=np.int64)


def measurable_tables(
    source: MeasurableSpace, target_borel: SigmaAlgebra, cap: int = DEFAULT_FUNCTION_CAP
) -> np.ndarray:
    """Value tables of all measurable functions, one row each, lexicographic."""
    n, k = source.carrier.size, target_borel.carrier.size
    total = k**n
    if total > cap:
        raise CapExceeded("function enumeration", total, cap)
    codes = np.arange(total, dtype=np.int64)
    tables = np.empty((total, n), dtype=np.int64)
    for x, w in enumerate(_weights(k, n)):
        tables[:, x] = codes // w % k
    keep = np.ones(total, dtype=bool)
    bit = np.array([1 << x for x in range(n)], dtype=np.int64)
    for atom in target_borel.atoms:
        inside = np.array([atom >> y & 1 for y in range(k)], dtype=np.int64)
        pre = (inside[tables] * bit).sum(axis=1) if n else np.zeros(total, dtype=np.int64)
        for block in source.sigma.atoms:
            part = pre & block
            keep &= (part == 0) | (part == block)
    return tables[keep]


class MeasFunctionSpace:
    """All measurable functions from ``source`` into a finite space, sorted."""

    def __init__(
        self,
        source: MeasurableSpace,
        target_topology: Topology,
        target: TopologicalAlgebra | None = None,
        cap: int = DEFAULT_FUNCTION_CAP,
    ):
        self.source = source
        self.target = target
        self.target_topology = target_topology
        self.target_borel = _borel(target_topology)
        self.tables = measurable_tables(source, self.target_borel, cap)
        k = target_topology.carrier.size
        self.codes = self.tables @ _weights(k, source.carrier.size)

    def __len__(self) -> int:
        return len(self.tables)

    @cached_property
    def functions(self) -> tuple[FiniteFunction, ...]:
        dom, cod = self.source.carrier, self.target_topology.carrier
        return tuple(FiniteFunction(dom, cod, tuple(row)) for row in self.tables.tolist())

    @cached_property
    def _positions(self) -> dict[tuple[int, ...], int]:
        return {tuple(row): i for i, row in enumerate(self.tables.tolist())}

    def index(self, f: FiniteFunction) -> int:
        """Position of ``f``; ``KeyError`` if it is not measurable."""
        return self._positions[f.table]

    def locate(self, codes: np.ndarray) -> np.ndarray:
        """Positions of encoded functions, ``-1`` where absent."""
        pos = np.searchsorted(self.codes, codes)
        pos = np.minimum(pos, max(len(self.codes) - 1, 0))
        if len(self.codes) == 0:
            return np.full(np.shape(codes), -1, dtype=np.int64)
        return np.where(self.codes[pos] == codes, pos, -1)

    def labels(self) -> tuple[str, ...]:
        ys = self.target_topology.carrier.labels
        return tuple("[" + ",".join(ys[v] for v in row) + "]" for row in self.tables.tolist())


def build_meas_space(
    X: MeasurableSpace,
    Y: TopologicalAlgebra,
    theory: TheoryPresentation | None = None,
    cap: int = DEFAULT_FUNCTION_CAP,
) -> MeasFunctionSpace:
    """``Meas(X, Y)`` for the Borel algebra of ``Y``'s topology."""
    if theory is not None and Y.carrier.size == 0 and theory.constants():
        names = ", ".join(str(c) for c in theory.constants())
        raise NoConstantsError(f"empty carrier cannot interpret constants {names}")
    return MeasFunctionSpace(X, Y.topology, Y, cap)


def lift_operation(ms: MeasFunctionSpace, op: OpSymbol, cap: int = 10**7) -> tuple[int, ...]:
    """Pointwise lift of ``op`` as a row-major table of positions in ``ms``.

    Raises :class:`ClosureError` if some lifted value is not measurable.
    """
    if ms.target is None:
        raise PreconditionError("function space has no algebra structure")
    alg = ms.target.algebra
    table = alg.array(op.name)
    k = alg.carrier.size
    n = ms.source.carrier.size
    m = len(ms)
    a = op.arity
    if m**a > cap:
        raise CapExceeded(f"lift of {op.name}", m**a, cap)
    grid = (m,) * a
    code = np.zeros(grid, dtype=np.int64)
    for x, w in enumerate(_weights(k, n)):
        idx = np.zeros(grid, dtype=np.int64)
        for j in range(a):
            shape = [1] * a
            shape[j] = m
            idx = idx * k + ms.tables[:, x].reshape(shape)
        code = code + table[idx] * w
    pos = ms.locate(code)
    if np.any(pos < 0):
        bad = np.unravel_index(int(np.flatnonzero(pos.ravel() < 0)[0]), grid) if a else ()
        raise ClosureError(
            f"lift of {op.name} at argument positions {tuple(int(i) for i in bad)} is not measurable"
        )
    return tuple(int(p) for p in pos.ravel())


def lifted_algebra(ms: MeasFunctionSpace, th: TheoryPresentation) -> Algebra:
    carrier = Carrier(ms.labels())
    tables = {op.name: lift_operation(ms, op) for op in th.ops}
    return Algebra(carrier, tables, {op.name: op.arity for op in th.ops})


@dataclass
class ProductReport:
    arity: int
    passed: bool
    power_count: int
    base_count: int
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.arity,
            "pass": self.passed,
            "power_count": self.power_count,
            "base_count": self.base_count,
            "failures": list(self.failures),
        }


def check_product_preservation(
    X: MeasurableSpace,
    Y: TopologicalAlgebra | Topology,
    n: int,
    cap: int = DEFAULT_FUNCTION_CAP,
) -> ProductReport:
    """Check that ``h ↦ (π_i ∘ h)_i`` is a bijection ``Meas(X, Yⁿ) → Meas(X, Y)ⁿ``.

    The inverse must be the pairing map, and ``π_i ∘ ⟨f_j⟩ = f_i``.
    """
    top = Y.topology if isinstance(Y, TopologicalAlgebra) else Y
    power = _power(top, n)
    base = MeasFunctionSpace(X, top, cap=cap)
    lifted = MeasFunctionSpace(X, power.topology, cap=cap)
    k, size = top.carrier.size, X.carrier.size
    m = len(base)
    w = _weights(k, size)
    failures = []

    # forward: coordinates of every h ∈ Meas(X, Yⁿ)
    forward = np.zeros((len(lifted), n), dtype=np.int64)
    for i in range(n):
        digit = lifted.tables // (k ** (n - 1 - i)) % k if k else lifted.tables
        pos = base.locate(digit @ w)
        if np.any(pos < 0):
            failures.append(f"projection {i} of some h is not measurable")
        forward[:, i] = pos
    tuple_codes = forward @ _weights(m, n) if n else np.zeros(len(lifted), dtype=np.int64)
    if len(np.unique(tuple_codes)) != len(lifted):
        failures.append("post-composition with projections is not injective")
    if len(lifted) != m**n:
        failures.append(f"|Meas(X, Y^{n})| = {len(lifted)} but |Meas(X, Y)|^{n} = {m**n}")

    # inverse: pairing of every tuple of measurable functions
    tuples = np.indices((m,) * n).reshape(n, -1).T if n else np.zeros((1, 0), dtype=np.int64)
    paired = np.zeros((len(tuples), size), dtype=np.int64)
    for i in range(n):
        paired = paired * k + base.tables[tuples[:, i]]
    pos = lifted.locate(paired @ _weights(power.carrier.size, size))
    if np.any(pos < 0):
        failures.append("pairing of measurable functions is not measurable")
    elif not np.array_equal(forward[pos], tuples):
        failures.append("projections do not recover the paired functions")
    elif len(lifted) and not np.array_equal(np.sort(pos), np.arange(len(lifted))):
        failures.append("pairing is not onto Meas(X, Y^n)")

    return ProductReport(n, not failures, len(lifted), m, failures)


@dataclass
class TheoremReport:
    theory: str
    function_count: int
    closure_pass: bool
    equations_pass: bool
    product_preservation_pass: bool
    failures: list[dict] = field(default_factory=list)
    model: ModelReport | None = None
    products: list[ProductReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.closure_pass and self.equations_pass and self.product_preservation_pass

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "schema": "1",
            "theory": self.theory,
            "pass": self.passed,
            "closure": self.closure_pass,
            "equations": self.equations_pass,
            "product_preservation": self.product_preservation_pass,
            "function_count": self.function_count,
            "products": [p.to_dict() for p in self.products],
            "failures": list(self.failures),
        }


class NotATopologicalModel(PreconditionError):
    def __init__(self, report: TopModelReport):
        super().__init__("target is not a topological model of the theory")
        self.report = report


def verify_theorem(
    X: MeasurableSpace,
    Y: TopologicalAlgebra,
    th: TheoryPresentation,
    product_arities: Sequence[int] = DEFAULT_PRODUCT_ARITIES,
    cap: int = DEFAULT_FUNCTION_CAP,
) -> TheoremReport:
    """Check that ``Meas(X, Y)`` with pointwise operations is a model of ``th``."""
    ms = build_meas_space(X, Y, th, cap)
    pre = check_topological_model(Y.algebra, Y.topology, th)
    if not pre:
        raise NotATopologicalModel(pre)

    failures: list[dict] = []
    tables = {}
    for op in th.ops:
        try:
            tables[op.name] = lift_operation(ms, op)
        except ClosureError as exc:
            failures.append({"kind": "closure", "op": op.name, "detail": str(exc)})
    closure = not failures

    model = None
    if closure:
        alg = Algebra(Carrier(ms.labels()), tables, {op.name: op.arity for op in th.ops})
        model = check_model(alg, th)
        failures.extend({"kind": "equation", **f.to_dict()} for f in model.failures)
    equations = model is not None and model.passed

    products = [check_product_preservation(X, Y, n, cap) for n in product_arities]
    for p in products:
        failures.extend({"kind": "product", "n": p.arity, "detail": d} for d in p.failures)

    return TheoremReport(
        th.name,
        len(ms),
        closure,
        equations,
        all(p.passed for p in products),
        failures,
        model,
        products,
    )
