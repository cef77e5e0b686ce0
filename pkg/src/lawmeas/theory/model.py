"""Finite algebras, term evaluation and exhaustive equational model checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Mapping, Sequence

import numpy as np

from ..errors import CapExceeded, MissingOpError
from ..setcore import Carrier
from .terms import Equation, Term, TheoryPresentation, Var

DEFAULT_STATE_CAP = 10**7
_CHUNK = 1 << 18


@dataclass(frozen=True)
class Algebra:
    """Operation tables over a finite carrier.

    ``tables[name]`` is a row-major tuple of ``size ** arity`` carrier indices;
    ``arities[name]`` fixes how it is read (arity 0 is a constant).
    """

    carrier: Carrier
    tables: Mapping[str, tuple[int, ...]]
    arities: Mapping[str, int]
    _arrays: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        tables = {name: tuple(int(v) for v in t) for name, t in self.tables.items()}
        arities = dict(self.arities)
        if tables.keys() != arities.keys():
            raise ValueError("tables and arities name different operations")
        k = self.carrier.size
        for name, t in tables.items():
            if len(t) != k ** arities[name]:
                raise ValueError(f"{name}: table has {len(t)} entries, expected {k}^{arities[name]}")
            bad = [v for v in t if not 0 <= v < k]
            if bad:
                raise ValueError(f"{name}: {bad[0]} is not a carrier index")
        object.__setattr__(self, "tables", tables)
        object.__setattr__(self, "arities", arities)
        object.__setattr__(self, "_arrays", {})

    @classmethod
    def from_functions(cls, carrier: Carrier, ops: Mapping[str, tuple[int, Callable]]) -> "Algebra":
        """Tabulate Python callables on carrier indices, ``{name: (arity, fn)}``."""
        k = carrier.size
        tables, arities = {}, {}
        for name, (arity, fn) in ops.items():
            tables[name] = tuple(fn(*args) for args in product(range(k), repeat=arity))
            arities[name] = arity
        return cls(carrier, tables, arities)

    def array(self, name: str) -> np.ndarray:
        arr = self._arrays.get(name)
        if arr is None:
            arr = np.asarray(self.tables[name], dtype=np.int64)
            self._arrays[name] = arr
        return arr

    def apply(self, name: str, args: Sequence[int]) -> int:
        idx = 0
        k = self.carrier.size
        for a in args:
            idx = idx * k + a
        return self.tables[name][idx]

    def restrict(self, th: TheoryPresentation) -> None:
        """Raise unless every operation of ``th`` has a table of the right arity."""
        for op in th.ops:
            if op.name not in self.tables:
                raise MissingOpError(f"algebra has no table for {op}")
            if self.arities[op.name] != op.arity:
                raise MissingOpError(
                    f"table for {op.name} has arity {self.arities[op.name]}, theory says {op.arity}"
                )


def eval_term(t: Term, alg: Algebra, env: Sequence[int]) -> int:
    if isinstance(t, Var):
        return env[t.index]
    return alg.apply(t.op.name, [eval_term(a, alg, env) for a in t.args])


def _eval_vectorized(t: Term, alg: Algebra, columns: Sequence[np.ndarray], length: int) -> np.ndarray:
    if isinstance(t, Var):
        return columns[t.index]
    table = alg.array(t.op.name)
    if not t.args:
        return np.full(length, table[0], dtype=np.int64)
    k = alg.carrier.size
    idx = None
    for a in t.args:
        v = _eval_vectorized(a, alg, columns, length)
        idx = v if idx is None else idx * k + v
    return table[idx]


@dataclass(frozen=True)
class EquationFailure:
    label: str
    env: tuple[int, ...]
    env_labels: tuple[str, ...]
    lhs_value: str
    rhs_value: str

    def to_dict(self) -> dict:
        return {
            "equation": self.label,
            "env": list(self.env_labels),
            "lhs": self.lhs_value,
            "rhs": self.rhs_value,
        }


@dataclass
class ModelReport:
    theory: str
    passed: bool
    failures: list[EquationFailure]
    instances_checked: int

    def __bool__(self) -> bool:
        return self.passed

    def failure(self, label: str) -> EquationFailure | None:
        return next((f for f in self.failures if f.label == label), None)

    def to_dict(self) -> dict:
        return {
            "theory": self.theory,
            "pass": self.passed,
            "instances_checked": self.instances_checked,
            "failures": [f.to_dict() for f in self.failures],
        }


def first_violation(eq: Equation, alg: Algebra, cap: int = DEFAULT_STATE_CAP) -> tuple[int, ...] | None:
    """Lexicographically least environment falsifying ``eq``, if any."""
    k = alg.carrier.size
    total = k ** eq.var_count
    if total > cap:
        raise CapExceeded(f"environments for {eq.label}", total, cap)
    weights = [k ** (eq.var_count - 1 - i) for i in range(eq.var_count)]
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        codes = np.arange(start, stop, dtype=np.int64)
        columns = [(codes // w) % k for w in weights]
        lhs = _eval_vectorized(eq.lhs, alg, columns, stop - start)
        rhs = _eval_vectorized(eq.rhs, alg, columns, stop - start)
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            code = int(codes[bad[0]])
            return tuple(int(code // w % k) for w in weights)
    return None


def check_model(alg: Algebra, th: TheoryPresentation, cap: int = DEFAULT_STATE_CAP) -> ModelReport:
    """Check every equation of ``th`` on every environment, in lexicographic order."""
    alg.restrict(th)
    labels = alg.carrier.labels
    failures = []
    checked = 0
    for eq in th.equations:
        env = first_violation(eq, alg, cap)
        checked += alg.carrier.size ** eq.var_count
        if env is not None:
            failures.append(
                EquationFailure(
                    eq.label,
                    env,
                    tuple(labels[i] for i in env),
                    labels[eval_term(eq.lhs, alg, env)],
                    labels[eval_term(eq.rhs, alg, env)],
                )
            )
    return ModelReport(th.name, not failures, failures, checked)
