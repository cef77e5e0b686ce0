"""Operation symbols, terms, equations and finitary presentations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

DEFAULT_VAR_NAMES = ("x", "y", "z", "u", "v", "w")


@dataclass(frozen=True)
class OpSymbol:
    name: str
    arity: int

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"{self.name}: arity must be non-negative")

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("variable index must be non-negative")


@dataclass(frozen=True)
class App:
    op: OpSymbol
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != self.op.arity:
            raise ValueError(
                f"{self.op.name} takes {self.op.arity} argument(s), got {len(self.args)}"
            )


Term = Union[Var, App]


def variables(t: Term) -> Iterator[int]:
    """Variable indices in left-to-right order of appearance, with repeats."""
    if isinstance(t, Var):
        yield t.index
    else:
        for a in t.args:
            yield from variables(a)


def ops_in(t: Term) -> Iterator[OpSymbol]:
    if isinstance(t, App):
        yield t.op
        for a in t.args:
            yield from ops_in(a)


def rename(t: Term, mapping) -> Term:
    """Substitute ``Var(i) ↦ Var(mapping[i])``."""
    if isinstance(t, Var):
        return Var(mapping[t.index])
    return App(t.op, tuple(rename(a, mapping) for a in t.args))


def term_size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + sum(term_size(a) for a in t.args)


def format_term(t: Term, names: Sequence[str]) -> str:
    if isinstance(t, Var):
        return names[t.index]
    if not t.args:
        return t.op.name
    return f"{t.op.name}(" + ", ".join(format_term(a, names) for a in t.args) + ")"


def default_label(position: int) -> str:
    """Label of the ``position``-th equation (1-based) when none is given."""
    return f"eq{position}"


def default_var_names(n: int) -> tuple[str, ...]:
    if n <= len(DEFAULT_VAR_NAMES):
        return DEFAULT_VAR_NAMES[:n]
    return tuple(f"x{i}" for i in range(n))


@dataclass(frozen=True)
class Equation:
    """``lhs = rhs`` over ``var_count`` variables named by ``var_names``."""

    var_count: int
    lhs: Term
    rhs: Term
    label: str = ""
    var_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.var_names:
            object.__setattr__(self, "var_names", default_var_names(self.var_count))
        else:
            object.__setattr__(self, "var_names", tuple(self.var_names))
        if len(self.var_names) != self.var_count:
            raise ValueError(f"{self.label}: {self.var_count} variables but {len(self.var_names)} names")
        if len(set(self.var_names)) != self.var_count:
            raise ValueError(f"{self.label}: variable names are not distinct")
        for side in (self.lhs, self.rhs):
            for i in variables(side):
                if i >= self.var_count:
                    raise ValueError(f"{self.label}: Var({i}) out of range for {self.var_count} variables")

    def ops(self) -> set[OpSymbol]:
        return set(ops_in(self.lhs)) | set(ops_in(self.rhs))

    def __str__(self) -> str:
        return f"{format_term(self.lhs, self.var_names)} = {format_term(self.rhs, self.var_names)}"


@dataclass(frozen=True)
class TheoryPresentation:
    name: str
    ops: tuple[OpSymbol, ...]
    equations: tuple[Equation, ...] = ()
    _by_name: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        equations = []
        for k, eq in enumerate(self.equations, start=1):
            label = eq.label.strip() or default_label(k)
            if label != eq.label:
                eq = Equation(eq.var_count, eq.lhs, eq.rhs, label, eq.var_names)
            equations.append(eq)
        object.__setattr__(self, "equations", tuple(equations))
        by_name = {}
        for op in self.ops:
            if op.name in by_name:
                raise ValueError(f"duplicate operation {op.name!r}")
            by_name[op.name] = op
        object.__setattr__(self, "_by_name", by_name)
        declared = set(self.ops)
        for eq in self.equations:
            stray = eq.ops() - declared
            if stray:
                names = ", ".join(sorted(str(o) for o in stray))
                raise ValueError(f"equation {eq.label!r} uses undeclared operation(s) {names}")
            clash = set(eq.var_names) & by_name.keys()
            if clash:
                raise ValueError(f"equation {eq.label!r} names a variable like an operation: {sorted(clash)}")

    def op(self, name: str) -> OpSymbol:
        return self._by_name[name]

    def has_op(self, name: str) -> bool:
        return name in self._by_name

    def constants(self) -> tuple[OpSymbol, ...]:
        return tuple(o for o in self.ops if o.arity == 0)

    def equation(self, label: str) -> Equation:
        for eq in self.equations:
            if eq.label == label:
                return eq
        raise KeyError(label)
