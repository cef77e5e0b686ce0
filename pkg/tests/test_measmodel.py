
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lawmeas.catalog import cyclic_group, cyclic_ring, klein_four
from lawmeas.errors import CapExceeded, ClosureError, NoConstantsError
from lawmeas.measmodel import (
    MeasFunctionSpace,
    NotATopologicalModel,
    build_meas_space,
    check_product_preservation,
    lift_operation,
    lifted_algebra,
    verify_theorem,
)
from lawmeas.setcore import Carrier, FiniteFunction, all_functions
from lawmeas.sigma import MeasurableSpace, all_sigma_algebras, generate_sigma
from lawmeas.theory import Algebra, OpSymbol, builtin, check_model, parse_theory
from lawmeas.topmodel import TopologicalAlgebra
from lawmeas.topology import Topology, all_topologies, borel, generate_topology

from oracles import measurable_direct, to_sets

AB = Carrier(("a", "b"))
GROUP, RING = builtin("Group"), builtin("Ring")


def discrete(alg):
    return TopologicalAlgebra(alg, Topology.discrete(alg.carrier))


def indiscrete(alg):
    return TopologicalAlgebra(alg, Topology.indiscrete(alg.carrier))


def brute_count(space, top):
    src, tgt = to_sets(space.sigma.members), to_sets(borel(top).members)
    return sum(measurable_direct(f.table, src, tgt) for f in all_functions(space.carrier, top.carrier))


def test_counts_for_two_point_sources():
    z2 = discrete(cyclic_ring(2))
    assert len(build_meas_space(MeasurableSpace.discrete(AB), z2)) == 4
    ms = build_meas_space(MeasurableSpace.indiscrete(AB), z2)
    assert len(ms) == 2
    assert all(f.is_constant() for f in ms.functions)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_indiscrete_target_gives_every_function(n):
    y = indiscrete(cyclic_group(3))
    for s in all_sigma_algebras(Carrier.range(n, "x")):
        ms = build_meas_space(MeasurableSpace(s.carrier, s), y)
        assert len(ms) == 3**n
        assert [f.table for f in ms.functions] == [f.table for f in all_functions(s.carrier, y.carrier)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_is_exactly_the_measurable_functions(n):
    for s in all_sigma_algebras(Carrier.range(n, "x")):
        space = MeasurableSpace(s.carrier, s)
        for top in all_topologies(Carrier.range(3)):
            ms = MeasFunctionSpace(space, top)
            assert len(ms) == brute_count(space, top)
            tables = [f.table for f in ms.functions]
            assert tables == sorted(tables)
            assert list(ms.codes) == sorted(ms.codes)
            for i, f in enumerate(ms.functions):
                assert ms.index(f) == i


def test_lifted_constant_is_a_constant_function():
    ring = discrete(cyclic_ring(3))
    ms = build_meas_space(MeasurableSpace.indiscrete(Carrier.range(2, "x")), ring)
    (pos,) = lift_operation(ms, OpSymbol("one", 0))
    assert ms.functions[pos].table == (1, 1)


def test_lifted_addition_on_constants_is_z2_addition():
    ms = build_meas_space(MeasurableSpace.indiscrete(AB), discrete(cyclic_ring(2)))
    assert [f.table for f in ms.functions] == [(0, 0), (1, 1)]
    assert lift_operation(ms, OpSymbol("add", 2)) == (0, 1, 1, 0)
    assert lift_operation(ms, OpSymbol("mul", 2)) == (0, 0, 0, 1)


def test_lifted_ops_are_pointwise():
    y = discrete(cyclic_ring(3))
    ms = build_meas_space(MeasurableSpace.discrete(Carrier.range(2, "x")), y)
    table = lift_operation(ms, OpSymbol("mul", 2))
    m = len(ms)
    for i, f in enumerate(ms.functions):
        for j, g in enumerate(ms.functions):
            h = ms.functions[table[i * m + j]]
            assert h.table == tuple(f(x) * g(x) % 3 for x in range(2))


def test_indiscrete_target_lift_is_the_full_power():
    y = indiscrete(cyclic_group(3))
    x = MeasurableSpace.indiscrete(Carrier.range(2, "x"))
    ms = build_meas_space(x, y)
    alg = lifted_algebra(ms, GROUP)
    assert alg.carrier.size == 9
    assert check_model(alg, GROUP)


def test_closure_failure_is_reported():
    # Borel atoms of the target are {0,1} and {2}; the op swaps 1 and 2
    c = Carrier.range(3)
    top = generate_topology(c, [["0", "1"]])
    alg = Algebra(c, {"s": (0, 2, 1)}, {"s": 1})
    x = Carrier(("a", "b", "c"))
    space = MeasurableSpace(x, generate_sigma(x, [["a", "b"]]))
    ms = build_meas_space(space, TopologicalAlgebra(alg, top))
    assert ms.index(FiniteFunction(x, c, (0, 1, 2))) >= 0
    with pytest.raises(ClosureError):
        lift_operation(ms, OpSymbol("s", 1))


def test_two_point_ring_theorem():
    report = verify_theorem(MeasurableSpace.indiscrete(AB), discrete(cyclic_ring(2)), RING)
    assert report.passed
    assert report.function_count == 2
    assert report.closure_pass and report.equations_pass and report.product_preservation_pass
    assert report.model.passed


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_z3_indiscrete_theorem_gives_the_full_power(n):
    for s in all_sigma_algebras(Carrier.range(n, "x")):
        report = verify_theorem(MeasurableSpace(s.carrier, s), indiscrete(cyclic_group(3)), GROUP)
        assert report.passed
        assert report.function_count == 3**n


@pytest.mark.parametrize("y", [discrete(cyclic_ring(3)), discrete(klein_four()), indiscrete(cyclic_group(4))])
def test_one_point_source_reproduces_the_target(y):
    th = RING if "one" in y.algebra.tables else GROUP
    pt = MeasurableSpace.discrete(Carrier(("pt",)))
    report = verify_theorem(pt, y, th)
    assert report.passed
    ms = build_meas_space(pt, y)
    lifted = lifted_algebra(ms, th)
    for op in th.ops:
        assert lifted.tables[op.name] == y.algebra.tables[op.name]


def test_empty_source_is_terminal():
    empty = MeasurableSpace.discrete(Carrier(()))
    for y, th in [(discrete(cyclic_group(3)), GROUP), (discrete(cyclic_ring(4)), RING)]:
        report = verify_theorem(empty, y, th)
        assert report.passed
        assert report.function_count == 1


def test_empty_target_with_constants_is_refused():
    y = TopologicalAlgebra(Algebra(Carrier(()), {"mul": ()}, {"mul": 2}), Topology.discrete(Carrier(())))
    with pytest.raises(NoConstantsError):
        build_meas_space(MeasurableSpace.discrete(AB), y, GROUP)
    semigroup = parse_theory("theory S\nops: mul/2\neq: mul(mul(x, y), z) = mul(x, mul(y, z))\n")
    assert len(build_meas_space(MeasurableSpace.discrete(AB), y, semigroup)) == 0
    assert verify_theorem(MeasurableSpace.discrete(Carrier(())), y, semigroup).function_count == 1


def test_function_cap():
    y = discrete(cyclic_group(4))
    with pytest.raises(CapExceeded):
        build_meas_space(MeasurableSpace.discrete(Carrier.range(6, "x")), y, cap=4000)


def test_non_topological_target_is_rejected():
    y = TopologicalAlgebra(cyclic_group(2), Topology.sierpinski())
    with pytest.raises(NotATopologicalModel) as info:
        verify_theorem(MeasurableSpace.discrete(AB), y, GROUP)
    assert info.value.report.continuity_failures[0].op == "mul"


def test_product_preservation_small_arities():
    y = Topology.sierpinski()
    x = MeasurableSpace.discrete(AB)
    r0 = check_product_preservation(x, y, 0)
    assert r0.passed and r0.power_count == 1
    r1 = check_product_preservation(x, y, 1)
    assert r1.passed and r1.power_count == r1.base_count == 4


def test_product_preservation_into_sierpinski_square():
    y = Topology.sierpinski()
    for s in all_sigma_algebras(Carrier.range(3, "x")):
        x = MeasurableSpace(s.carrier, s)
        report = check_product_preservation(x, y, 2)
        assert report.passed, report.failures
        assert report.power_count == report.base_count**2
        assert report.base_count == brute_count(x, y)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_product_counts_on_curated_spaces(n):
    for top in all_topologies(Carrier.range(2)) + [generate_topology(Carrier.range(3), [["0", "1"]])]:
        for s in all_sigma_algebras(Carrier.range(2, "x")):
            x = MeasurableSpace(s.carrier, s)
            report = check_product_preservation(x, top, n)
            assert report.passed
            assert report.power_count == report.base_count**n


@st.composite
def refinements(draw):
    n = draw(st.integers(1, 4))
    c = Carrier.range(n, "x")
    gens = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=2))
    extra = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=2))
    top = draw(st.sampled_from(all_topologies(Carrier.range(3))))
    return MeasurableSpace(c, generate_sigma(c, gens)), MeasurableSpace(c, generate_sigma(c, gens + extra)), top


@given(refinements())
def test_refining_the_source_never_shrinks_meas(case):
    coarse, fine, top = case
    small = {f.table for f in MeasFunctionSpace(coarse, top).functions}
    big = {f.table for f in MeasFunctionSpace(fine, top).functions}
    assert small <= big


def test_report_dict_schema():
    d = verify_theorem(MeasurableSpace.indiscrete(AB), discrete(cyclic_ring(2)), RING).to_dict()
    assert d["schema"] == "1"
    assert {"closure", "equations", "product_preservation", "function_count", "failures"} <= d.keys()
    assert [p["n"] for p in d["products"]] == [0, 1, 2]
