"""Property sweeps backing the acceptance criteria.

Each criterion returns a :class:`CriterionResult`.  ``max_carrier=None`` runs
the full-size sweep; an integer clips every carrier-size range to it, which is
what ``lawmeas suite --max-carrier N`` does.

The brute-force oracles here work on frozensets of points and never touch the
bitmask kernel, so agreement between the two is evidence for both.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

from .catalog import CURATED_GROUPS, CURATED_RINGS, cyclic_group, subtraction_mod
from .cocountable import (
    CocoSet,
    Tag,
    coco_complement,
    coco_intersection,
    coco_non_topology_witness,
    coco_union,
)
from .errors import ParseError
from .measmodel import verify_theorem
from .measurable import (
    compose_measurable,
    continuous_implies_measurable_check,
    is_continuous,
    is_measurable,
    pairing,
)
from .setcore import Carrier, FiniteFunction, all_functions
from .sigma import MeasurableSpace, SigmaAlgebra, all_sigma_algebras, generate_sigma
from .theory.builtins import BUILTIN_NAMES, GROUP_TEXT, builtin
from .theory.dsl import parse_theory, print_theory
from .theory.model import check_model, eval_term
from .theory.terms import App, Equation, OpSymbol, TheoryPresentation, Var, rename, variables
from .topmodel import TopologicalAlgebra, check_topological_model
from .topology import Topology, all_topologies, borel, generate_topology, is_topology, product_topology

MAX_SUITE_CARRIER = 4

CANONICAL_GROUP_FILE = """\
theory Group
ops: e/0, inv/1, mul/2
eq: mul(e, x) = x
eq: mul(x, e) = x
eq: mul(mul(x, y), z) = mul(x, mul(y, z))
eq: mul(inv(x), x) = e
eq: mul(x, inv(x)) = e
"""


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    time_limit: float | None = None

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.time_limit:g}s)" if self.time_limit else ""
        return f"[{status}] {self.number}. {self.name}: {self.detail} [{self.seconds:.2f}s{limit}]"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "pass": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _sizes(top: int, max_carrier: int | None, low: int = 1) -> range:
    if max_carrier is not None:
        top = min(top, max_carrier)
    return range(low, top + 1)


def _timed(number, name, limit, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = body()
    seconds = time.perf_counter() - start
    if limit is not None and seconds >= limit:
        ok = False
        detail += f"; exceeded {limit:g}s"
    return CriterionResult(number, name, ok, detail, seconds, limit)


# -- oracles ---------------------------------------------------------------


def naive_sigma_closure(points: frozenset, generators) -> frozenset:
    """Saturate under complement and pairwise union."""
    family = {frozenset(), points} | {frozenset(g) for g in generators}
    while True:
        new = {points - a for a in family} | {a | b for a in family for b in family}
        if new <= family:
            return frozenset(family)
        family |= new


def _as_point_sets(carrier: Carrier, bits_family) -> frozenset:
    return frozenset(frozenset(i for i in range(carrier.size) if b >> i & 1) for b in bits_family)


# -- criteria --------------------------------------------------------------


def criterion_sigma_oracle(max_carrier=None, trials=200, seed=1) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        cases = discrepancies = 0
        for n in _sizes(6, max_carrier):
            c = Carrier.range(n)
            points = frozenset(range(n))
            for _ in range(trials):
                gens = [rng.getrandbits(n) for _ in range(rng.randint(0, n + 1))]
                fast = _as_point_sets(c, generate_sigma(c, gens).member_bits)
                slow = naive_sigma_closure(points, _as_point_sets(c, gens))
                cases += 1
                discrepancies += fast != slow
        return discrepancies == 0, f"{cases} generator families, {discrepancies} discrepancies"

    return _timed(1, "σ-generation oracle equivalence", 10.0, body)


def criterion_borel_infimum(max_carrier=None, trials=100, seed=2) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        cases = discrepancies = 0
        for n in _sizes(4, max_carrier):
            c = Carrier.range(n)
            sigmas = all_sigma_algebras(c)
            tops = [generate_topology(c, [rng.getrandbits(n) for _ in range(rng.randint(0, 4))]) for _ in range(trials)]
            for t in tops:
                containing = [s for s in sigmas if all(s.contains_bits(u) for u in t.opens_bits)]
                meet = set(containing[0].member_bits)
                for s in containing[1:]:
                    meet &= s.member_set
                b = borel(t)
                ok = set(b.member_bits) == meet and all(b.contains_bits(u) for u in t.opens_bits)
                cases += 1
                discrepancies += not ok
        return discrepancies == 0, f"{cases} random topologies, {discrepancies} discrepancies"

    return _timed(2, "Borel algebra is the meet of σ-algebras containing the opens", None, body)


def criterion_sigma_is_topology(max_carrier=None) -> CriterionResult:
    def body():
        cases = failures = 0
        for n in _sizes(5, max_carrier):
            for s in all_sigma_algebras(Carrier.range(n)):
                cases += 1
                failures += not is_topology(s.carrier, s.member_bits)
        return failures == 0, f"{cases} σ-algebras checked, {failures} failures"

    return _timed(3, "every finite σ-algebra is a topology", None, body)


def _spaces(n: int) -> list[MeasurableSpace]:
    c = Carrier.range(n, "x")
    return [MeasurableSpace(c, s) for s in all_sigma_algebras(c)]


def _measurable_list(source: MeasurableSpace, target: SigmaAlgebra) -> list[FiniteFunction]:
    return [f for f in all_functions(source.carrier, target.carrier) if is_measurable(f, source, target)]


def criterion_lemmas(max_carrier=None, random_cases=500, seed=4) -> CriterionResult:
    def body():
        counter = 0
        details = []

        # continuous ⇒ Borel measurable, over all topologies on ≤ 3 points
        spaces = [t for n in _sizes(3, max_carrier) for t in all_topologies(Carrier.range(n, "t"))]
        checked = 0
        for s, t in product(spaces, spaces):
            for f in all_functions(s.carrier, t.carrier):
                if is_continuous(f, s, t):
                    checked += 1
                    counter += not continuous_implies_measurable_check(f, s, t)
        details.append(f"{checked} continuous maps")

        # composition closure, exhaustive over all σ-algebras on ≤ 3 points.
        # Every finite σ-algebra is the Borel algebra of itself viewed as a topology.
        algebras = [s for n in _sizes(3, max_carrier) for s in all_sigma_algebras(Carrier.range(n, "y"))]
        spaces_x = [MeasurableSpace(s.carrier, s) for s in algebras]
        composites = 0
        for X in spaces_x:
            for B in algebras:
                fs = _measurable_list(X, B)
                YB = MeasurableSpace(B.carrier, B)
                for C in algebras:
                    gs = _measurable_list(YB, C)
                    for f in fs:
                        for g in gs:
                            composites += 1
                            counter += not compose_measurable(f, g, X, B, C, check_preconditions=False)
        details.append(f"{composites} exhaustive composites")

        if max_carrier is None or max_carrier >= 4:
            rng = random.Random(seed)
            four = all_sigma_algebras(Carrier.range(4, "z"))
            done = 0
            while done < random_cases:
                A, B, C = (rng.choice(four) for _ in range(3))
                X = MeasurableSpace(A.carrier, A)
                f = FiniteFunction(A.carrier, B.carrier, [rng.randrange(4) for _ in range(4)])
                g = FiniteFunction(B.carrier, C.carrier, [rng.randrange(4) for _ in range(4)])
                if not (is_measurable(f, X, B) and is_measurable(g, MeasurableSpace(B.carrier, B), C)):
                    continue
                done += 1
                counter += not compose_measurable(f, g, X, B, C)
            details.append(f"{done} random composites on 4 points")

        # pairing into Sierpiński², X over all σ-algebras on 3 points
        sier = Topology.sierpinski()
        sq = product_topology(sier, 2)
        b1, b2 = borel(sier), borel(sq.topology)
        pairs = 0
        for X in _spaces(min(3, max_carrier or 3)):
            fs = _measurable_list(X, b1)
            for f1, f2 in product(fs, fs):
                h = pairing([f1, f2], sq)
                pairs += 1
                counter += not is_measurable(h, X, b2, full=True)
                counter += sq.projection(0).after(h) != f1 or sq.projection(1).after(h) != f2
        details.append(f"{pairs} pairings")
        return counter == 0, ", ".join(details) + f", {counter} counterexamples"

    return _timed(4, "measurability lemmas", 60.0, body)


def criterion_main_theorem(max_carrier=None) -> CriterionResult:
    def body():
        cases = failures = 0
        group, ring, paper_ring = builtin("Group"), builtin("Ring"), builtin("PaperRing")
        models = [(f"{k} group", mk, [group]) for k, mk in CURATED_GROUPS.items()]
        models += [(f"{k} ring", mk, [ring, paper_ring]) for k, mk in CURATED_RINGS.items()]
        spaces = [X for n in _sizes(3, max_carrier) for X in _spaces(n)]
        bad = []
        for X in spaces:
            for label, mk, theories in models:
                alg = mk()
                for top in (Topology.discrete(alg.carrier), Topology.indiscrete(alg.carrier)):
                    Y = TopologicalAlgebra(alg, top)
                    for th in theories:
                        report = verify_theorem(X, Y, th)
                        cases += 1
                        if not report.passed:
                            failures += 1
                            bad.append(f"{label}/{th.name}")
        detail = f"{len(spaces)} measurable spaces, {cases} cases, {failures} failures"
        if bad:
            detail += f" ({', '.join(bad[:3])})"
        return failures == 0, detail

    return _timed(5, "main theorem sweep", 120.0, body)


def negative_controls() -> dict[str, bool]:
    """The three canonical failures and their exact witnesses."""
    out = {}
    sub = subtraction_mod(4)
    group = builtin("Group")
    report = check_model(sub, group)
    assoc = report.failure("associativity")
    eq = group.equation("associativity")
    out["z4_subtraction"] = (
        not report.passed
        and assoc is not None
        and assoc.env == (0, 0, 1)
        and eval_term(eq.lhs, sub, (1, 1, 1)) == 3
        and eval_term(eq.rhs, sub, (1, 1, 1)) == 1
    )

    z2 = cyclic_group(2)
    top = check_topological_model(z2, Topology.sierpinski(), group)
    out["z2_sierpinski"] = (
        top.model.passed
        and not top.passed
        and [(f.op, f.open_set, f.preimage) for f in top.continuity_failures]
        == [("mul", ("1",), ("(0,1)", "(1,0)"))]
    )

    ab = Carrier(("a", "b"))
    two = Carrier(("0", "1"))
    f = FiniteFunction.from_mapping(ab, two, {"a": "0", "b": "1"})
    v = is_measurable(f, MeasurableSpace.indiscrete(ab), SigmaAlgebra.power_set(two))
    out["indiscrete_source"] = (
        not v.measurable and v.witness[0].labels() == ("0",) and v.witness[1].labels() == ("a",)
    )
    return out


def criterion_negative_controls() -> CriterionResult:
    def body():
        results = negative_controls()
        ok = all(results.values())
        return ok, ", ".join(f"{k}={'ok' if v else 'WRONG'}" for k, v in results.items())

    return _timed(6, "negative controls", None, body)


def _coco_universe(s: CocoSet, alphabet) -> frozenset:
    # ω stands for every point that is not listed in the alphabet
    everything = frozenset(alphabet) | {"ω"}
    return frozenset(s.support) if s.tag is Tag.SMALL else everything - frozenset(s.support)


def _from_universe(points: frozenset, alphabet) -> CocoSet:
    if "ω" in points:
        return CocoSet(Tag.COSMALL, tuple(sorted(set(alphabet) - points)))
    return CocoSet(Tag.SMALL, tuple(sorted(points)))


def criterion_cocountable() -> CriterionResult:
    def body():
        alphabet = ("a", "b", "c", "d")
        sets = [
            CocoSet(tag, support)
            for tag in Tag
            for r in range(len(alphabet) + 1)
            for support in combinations(alphabet, r)
        ]
        everything = frozenset(alphabet) | {"ω"}
        families = violations = 0
        for size in range(4):
            for fam in product(sets, repeat=size):
                families += 1
                u = coco_union(fam)
                oracle = frozenset().union(*(_coco_universe(s, alphabet) for s in fam))
                violations += u != _from_universe(oracle, alphabet)
                dual = coco_intersection(coco_complement(s) for s in fam)
                violations += coco_complement(u) != dual
                violations += _coco_universe(dual, alphabet) != everything - oracle
                violations += coco_union(reversed(fam)) != u
                violations += coco_union(list(fam) + list(fam)) != u
                if size == 3:
                    a, b, c = fam
                    violations += coco_union([coco_union([a, b]), c]) != coco_union([a, coco_union([b, c])])
        report = coco_non_topology_witness()
        facts = report.fact_a and report.fact_b and report.fact_c and report.conclusion == "not a topology"
        detail = f"{families} families, {violations} law violations, facts (a)(b)(c) {'hold' if facts else 'FAIL'}"
        return violations == 0 and facts, detail

    return _timed(7, "cocountable tag algebra and non-topology witness", None, body)


def random_presentation(rng: random.Random, index: int) -> TheoryPresentation:
    ops = tuple(OpSymbol(f"op{i}", rng.randint(0, 3)) for i in range(rng.randint(0, 4)))
    pool = ["x", "y", "z", "w", "a1", "b_2"]

    def term(depth: int, nvars: int):
        choices = [o for o in ops if depth > 0 or o.arity == 0]
        if nvars and (not choices or rng.random() < 0.35):
            return Var(rng.randrange(nvars))
        if not choices:
            return None
        op = rng.choice(choices)
        args = []
        for _ in range(op.arity):
            a = term(depth - 1, nvars)
            if a is None:
                return None
            args.append(a)
        return App(op, tuple(args))

    equations = []
    for k in range(rng.randint(0, 4)):
        nvars = rng.randint(0, 3)
        lhs, rhs = term(3, nvars), term(3, nvars)
        if lhs is None or rhs is None:
            continue
        order = list(dict.fromkeys(variables(lhs)))
        if any(i not in order for i in variables(rhs)):
            continue
        mapping = {old: new for new, old in enumerate(order)}
        names = tuple(rng.sample(pool, len(order)))
        label = rng.choice(["", f"law_{k}", "comm"])
        equations.append(Equation(len(order), rename(lhs, mapping), rename(rhs, mapping), label, names))
    return TheoryPresentation(f"T{index}", ops, tuple(equations))


PARSER_ERROR_CASES = (
    ("lexical", GROUP_TEXT.replace("mul(e, x) = x", "mul(e, $) = x"), 3, 12),
    ("unknown-operation", CANONICAL_GROUP_FILE + "eq: div(x, x) = e\n", 8, 5),
    ("arity-mismatch", CANONICAL_GROUP_FILE + "eq: mul(x) = x\n", 8, 5),
    ("unbound-variable", CANONICAL_GROUP_FILE + "eq: mul(x, e) = y\n", 8, 17),
)


def criterion_parser(presentations=100, seed=8) -> CriterionResult:
    def body():
        problems = []
        for name in BUILTIN_NAMES:
            th = builtin(name)
            if parse_theory(print_theory(th)) != th:
                problems.append(f"round trip {name}")
        rng = random.Random(seed)
        for i in range(presentations):
            th = random_presentation(rng, i)
            text = print_theory(th)
            again = parse_theory(text)
            if again != th or print_theory(again) != text:
                problems.append(f"round trip T{i}")
        for kind, text, line, col in PARSER_ERROR_CASES:
            try:
                parse_theory(text)
                problems.append(f"{kind} not raised")
            except ParseError as exc:
                if (exc.kind, exc.line, exc.column) != (kind, line, col):
                    problems.append(f"{kind}: got {exc.kind} at {exc.line}:{exc.column}")
        canon = parse_theory(CANONICAL_GROUP_FILE)
        if print_theory(canon) != CANONICAL_GROUP_FILE or (len(canon.ops), len(canon.equations)) != (3, 5):
            problems.append("canonical Group file is not stable")
        detail = f"{len(BUILTIN_NAMES)} builtins + {presentations} random presentations, 4 error classes"
        if problems:
            detail += "; " + "; ".join(problems[:4])
        return not problems, detail

    return _timed(8, "parser round trip and diagnostics", None, body)


def run_criteria(max_carrier: int | None = None) -> list[CriterionResult]:
    return [
        criterion_sigma_oracle(max_carrier),
        criterion_borel_infimum(max_carrier),
        criterion_sigma_is_topology(max_carrier),
        criterion_lemmas(max_carrier),
        criterion_main_theorem(max_carrier),
        criterion_negative_controls(),
        criterion_cocountable(),
        criterion_parser(),
    ]


def run_suite(max_carrier: int = MAX_SUITE_CARRIER) -> list[CriterionResult]:
    if not 1 <= max_carrier <= MAX_SUITE_CARRIER:
        raise ValueError(f"max carrier must be between 1 and {MAX_SUITE_CARRIER}, got {max_carrier}")
    return run_criteria(max_carrier)
