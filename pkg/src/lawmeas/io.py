"""JSON/DSL file loaders for spaces, topologies, algebras and theories.

Schema problems raise :class:`InputError`; the CLI maps those to exit code 2.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import LawmeasError, ParseError, UnknownTheory
from .setcore import Carrier
from .sigma import MeasurableSpace, SigmaAlgebra, generate_sigma
from .theory.builtins import BUILTIN_NAMES, builtin
from .theory.dsl import parse_theory
from .theory.model import Algebra
from .theory.terms import TheoryPresentation
from .topmodel import TopologicalAlgebra
from .topology import Topology, generate_topology


class InputError(LawmeasError):
    """A file is missing, malformed, or does not follow its schema."""


def read_json(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _object(doc, path) -> dict:
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def _carrier(doc: dict, path) -> Carrier:
    labels = doc.get("carrier")
    if not isinstance(labels, list) or not all(isinstance(x, (str, int)) for x in labels):
        raise InputError(f"{path}: 'carrier' must be a list of labels")
    try:
        return Carrier(tuple(str(x) for x in labels))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _family(doc: dict, key: str, carrier: Carrier, path) -> list[int]:
    family = doc.get(key)
    if not isinstance(family, list) or not all(isinstance(s, list) for s in family):
        raise InputError(f"{path}: '{key}' must be a list of label lists")
    try:
        return [carrier.subset(str(x) for x in s).bits for s in family]
    except KeyError as exc:
        raise InputError(f"{path}: '{key}': {exc.args[0]}") from None


def space_from_dict(doc: dict, path="<space>") -> MeasurableSpace:
    doc = _object(doc, path)
    carrier = _carrier(doc, path)
    if "generators" in doc:
        return MeasurableSpace(carrier, generate_sigma(carrier, _family(doc, "generators", carrier, path)))
    if "sigma" in doc:
        try:
            return MeasurableSpace(carrier, SigmaAlgebra.from_family(carrier, _family(doc, "sigma", carrier, path)))
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from None
    raise InputError(f"{path}: space needs 'sigma' or 'generators'")


def load_space(path) -> MeasurableSpace:
    return space_from_dict(read_json(path), path)


def topology_from_dict(doc, carrier: Carrier, path) -> tuple[Topology | None, list[int]]:
    """Returns the topology, or ``None`` plus the raw family when the opens are invalid."""
    if doc == "discrete":
        return Topology.discrete(carrier), []
    if doc == "indiscrete":
        return Topology.indiscrete(carrier), []
    doc = _object(doc, path)
    if "subbasis" in doc:
        return generate_topology(carrier, _family(doc, "subbasis", carrier, path)), []
    if "opens" in doc:
        opens = _family(doc, "opens", carrier, path)
        try:
            return Topology.from_opens(carrier, opens), opens
        except ValueError:
            return None, opens
    raise InputError(f"{path}: topology needs 'opens' or 'subbasis'")


def load_topology(path) -> tuple[Carrier, Topology | None, list[int]]:
    doc = _object(read_json(path), path)
    carrier = _carrier(doc, path)
    top, raw = topology_from_dict(doc, carrier, path)
    return carrier, top, raw


def _flatten(value, depth: int):
    if depth == 0:
        return [value]
    if not isinstance(value, list):
        raise ValueError("table nesting is shallower than the arity")
    out = []
    for v in value:
        out.extend(_flatten(v, depth - 1))
    return out


def _depth(value) -> int:
    d = 0
    while isinstance(value, list) and value:
        value = value[0]
        d += 1
    return d


def algebra_from_dict(doc: dict, path="<algebra>", theory: TheoryPresentation | None = None) -> Algebra:
    """Parse ``{"carrier": [...], "ops": {name: table}}``.

    Tables are nested row-major label lists, ``arity`` levels deep; a constant
    is a one-element list.  Arities come from ``theory`` when it declares the op.
    """
    doc = _object(doc, path)
    carrier = _carrier(doc, path)
    ops = doc.get("ops")
    if not isinstance(ops, dict):
        raise InputError(f"{path}: 'ops' must be an object")
    tables, arities = {}, {}
    k = carrier.size
    for name, raw in ops.items():
        if theory is not None and theory.has_op(name):
            arity = theory.op(name).arity
        else:
            arity = _depth(raw)
            if arity == 1 and len(raw) == 1 and k != 1:
                arity = 0
        try:
            if isinstance(raw, list) and _depth(raw) == 1:
                flat = list(raw)  # flat row-major also accepted
            else:
                flat = _flatten(raw, max(arity, 1))
            if arity == 0 and len(flat) != 1:
                raise ValueError("a constant table holds exactly one label")
            tables[name] = tuple(carrier.index(str(v)) for v in flat)
        except (ValueError, KeyError) as exc:
            raise InputError(f"{path}: op {name!r}: {exc}") from None
        arities[name] = arity
    try:
        return Algebra(carrier, tables, arities)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_algebra(path, theory: TheoryPresentation | None = None) -> Algebra:
    return algebra_from_dict(read_json(path), path, theory)


def load_topalgebra(path, theory: TheoryPresentation | None = None) -> tuple[TopologicalAlgebra | None, Algebra]:
    doc = _object(read_json(path), path)
    alg = algebra_from_dict(doc, path, theory)
    if "topology" not in doc:
        raise InputError(f"{path}: topological algebra needs a 'topology' key")
    top, _ = topology_from_dict(doc["topology"], alg.carrier, path)
    if top is None:
        raise InputError(f"{path}: 'topology' opens do not form a topology")
    return TopologicalAlgebra(alg, top), alg


def load_theory(ref: str) -> TheoryPresentation:
    """A builtin name (``Group``, ``Ring``, ...) or a path to a DSL file."""
    path = Path(ref)
    if not path.exists():
        if ref in BUILTIN_NAMES:
            return builtin(ref)
        if path.suffix or "/" in ref:
            raise InputError(f"{ref}: no such file")
        raise InputError(str(UnknownTheory(ref)))
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{ref}: {exc}") from None
    try:
        return parse_theory(text)
    except ParseError as exc:
        raise InputError(f"{ref}: {exc}") from None
