import pytest
from hypothesis import given
from hypothesis import strategies as st

from lawmeas.errors import ParseError, UnknownTheory
from lawmeas.theory import (
    App,
    Equation,
    OpSymbol,
    TheoryPresentation,
    Var,
    builtin,
    parse_theory,
    print_theory,
)
from lawmeas.theory.builtins import BUILTIN_NAMES, GROUP_TEXT
from lawmeas.theory.terms import rename, variables

CANONICAL_GROUP = """theory Group
ops: e/0, inv/1, mul/2
eq: mul(e, x) = x
eq: mul(x, e) = x
eq: mul(mul(x, y), z) = mul(x, mul(y, z))
eq: mul(inv(x), x) = e
eq: mul(x, inv(x)) = e
"""


def _error(text):
    with pytest.raises(ParseError) as info:
        parse_theory(text)
    return info.value


def test_canonical_group_file():
    th = parse_theory(CANONICAL_GROUP)
    assert th.name == "Group"
    assert [(o.name, o.arity) for o in th.ops] == [("e", 0), ("inv", 1), ("mul", 2)]
    assert len(th.equations) == 5
    assert [eq.var_count for eq in th.equations] == [1, 1, 3, 1, 1]
    assert print_theory(th) == CANONICAL_GROUP


def test_variables_numbered_by_first_appearance():
    th = parse_theory("theory T\nops: f/2\neq: f(y, x) = f(x, y)\n")
    eq = th.equations[0]
    assert eq.var_names == ("y", "x")
    assert eq.lhs == App(OpSymbol("f", 2), (Var(0), Var(1)))


def test_comments_labels_and_blank_lines():
    text = "# leading comment\n\ntheory M  # name\nops: e/0, mul/2\n\neq: mul(e, x) = x   # left_unit\neq: mul(x, e) = x\n"
    th = parse_theory(text)
    assert [eq.label for eq in th.equations] == ["left_unit", "eq2"]
    assert parse_theory(print_theory(th)) == th


def test_trivial_theory():
    th = parse_theory("theory Trivial\nops:\n")
    assert th.ops == () and th.equations == ()
    assert print_theory(th) == "theory Trivial\nops: \n"
    assert parse_theory(print_theory(th)) == th


def test_arity_mismatch():
    err = _error(CANONICAL_GROUP + "eq: mul(x) = x\n")
    assert (err.kind, err.line, err.column) == ("arity-mismatch", 8, 5)
    assert str(err).startswith("line 8, column 5: arity-mismatch")


def test_constant_applied_to_arguments_is_an_arity_mismatch():
    err = _error(CANONICAL_GROUP + "eq: e(x) = x\n")
    assert err.kind == "arity-mismatch"


def test_lexical_error_position():
    err = _error(CANONICAL_GROUP.replace("mul(e, x) = x", "mul(e, $) = x"))
    assert (err.kind, err.line, err.column) == ("lexical", 3, 12)


def test_unknown_operation():
    err = _error(CANONICAL_GROUP + "eq: div(x, x) = e\n")
    assert (err.kind, err.line, err.column) == ("unknown-operation", 8, 5)


def test_unbound_variable():
    err = _error(CANONICAL_GROUP + "eq: mul(x, e) = y\n")
    assert (err.kind, err.line, err.column) == ("unbound-variable", 8, 17)


def test_duplicate_operation_and_syntax_errors():
    assert _error("theory T\nops: f/1, f/2\n").kind == "duplicate-operation"
    assert _error("ops: f/1\n").kind == "syntax"
    assert _error("theory T\n").kind == "syntax"
    assert _error("theory T\nops: f/1\neq: f(x) x\n").kind == "syntax"
    assert _error("theory T\nops: f/1\neq: f(x = x\n").kind == "syntax"


def test_group_builtin():
    th = builtin("Group")
    assert [(o.name, o.arity) for o in th.ops] == [("e", 0), ("inv", 1), ("mul", 2)]
    assert [eq.label for eq in th.equations] == [
        "left_unit",
        "right_unit",
        "associativity",
        "left_inverse",
        "right_inverse",
    ]
    assert parse_theory(GROUP_TEXT) == th


def test_ring_builtins():
    ring, paper = builtin("Ring"), builtin("PaperRing")
    names = {(o.name, o.arity) for o in ring.ops}
    assert names == {("zero", 0), ("one", 0), ("neg", 1), ("add", 2), ("mul", 2)}
    assert ring.ops == paper.ops
    assert len(ring.equations) == len(paper.equations) + 1 == 11
    assert {eq.label for eq in ring.equations} - {eq.label for eq in paper.equations} == {"add_commutativity"}
    assert {"left_distributivity", "right_distributivity"} <= {eq.label for eq in paper.equations}


def test_monoid_builtin():
    th = builtin("Monoid")
    assert [(o.name, o.arity) for o in th.ops] == [("e", 0), ("mul", 2)]
    assert len(th.equations) == 3


def test_unknown_builtin():
    with pytest.raises(UnknownTheory):
        builtin("Field")


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_round_trip(name):
    th = builtin(name)
    text = print_theory(th)
    assert parse_theory(text) == th
    assert print_theory(parse_theory(text)) == text


def test_presentation_rejects_undeclared_ops_and_clashes():
    f = OpSymbol("f", 1)
    eq = Equation(1, App(f, (Var(0),)), Var(0))
    with pytest.raises(ValueError):
        TheoryPresentation("T", (), (eq,))
    with pytest.raises(ValueError):
        TheoryPresentation("T", (f, OpSymbol("f", 2)))
    with pytest.raises(ValueError):
        TheoryPresentation("T", (f,), (Equation(1, App(f, (Var(0),)), Var(0), var_names=("f",)),))
    with pytest.raises(ValueError):
        App(f, (Var(0), Var(1)))
    with pytest.raises(ValueError):
        Equation(1, Var(1), Var(0))


NAMES = st.sampled_from(["x", "y", "z", "u", "v1", "w_2"])
LABELS = st.sampled_from(["", "law", "assoc_left", "unit2"])


@st.composite
def presentations(draw):
    ops = tuple(OpSymbol(f"g{i}", draw(st.integers(0, 3))) for i in range(draw(st.integers(0, 4))))

    def terms(nvars):
        leaves = [st.builds(Var, st.integers(0, nvars - 1))] if nvars else []
        leaves += [st.just(App(o, ())) for o in ops if o.arity == 0]
        if not leaves:
            return st.nothing()
        base = st.one_of(*leaves)
        compound = [o for o in ops if o.arity > 0]
        if not compound:
            return base
        return st.recursive(
            base,
            lambda inner: st.one_of(
                *(st.tuples(*([inner] * o.arity)).map(lambda args, o=o: App(o, args)) for o in compound)
            ),
            max_leaves=6,
        )

    equations = []
    for _ in range(draw(st.integers(0, 3))):
        nvars = draw(st.integers(0, 3))
        if not nvars and not any(o.arity == 0 for o in ops):
            continue
        lhs, rhs = draw(terms(nvars)), draw(terms(nvars))
        order = list(dict.fromkeys(variables(lhs)))
        if any(i not in order for i in variables(rhs)):
            continue
        mapping = {old: new for new, old in enumerate(order)}
        names = tuple(draw(st.permutations(["x", "y", "z", "u", "v1", "w_2"]))[: len(order)])
        equations.append(Equation(len(order), rename(lhs, mapping), rename(rhs, mapping), draw(LABELS), names))
    return TheoryPresentation("R", ops, tuple(equations))


@given(presentations())
def test_random_round_trip(th):
    text = print_theory(th)
    again = parse_theory(text)
    assert again == th
    assert print_theory(again) == text


@given(presentations(), st.integers(1, 3), st.integers(0, 3))
def test_whitespace_is_tolerated(th, pad, extra):
    text = print_theory(th)
    noisy = "\n" * extra + text.replace(", ", "," + " " * pad).replace(" = ", " " * pad + "=" + " " * pad)
    assert parse_theory(noisy) == th
