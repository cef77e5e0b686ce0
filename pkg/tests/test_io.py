import json

import pytest

from lawmeas.io import (
    InputError,
    algebra_from_dict,
    load_algebra,
    load_space,
    load_theory,
    load_topalgebra,
    load_topology,
    space_from_dict,
)
from lawmeas.theory import builtin


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
    return str(p)


def test_space_from_sigma_and_generators():
    s = space_from_dict({"carrier": ["a", "b", "c"], "sigma": [[], ["a"], ["b", "c"], ["a", "b", "c"]]})
    g = space_from_dict({"carrier": ["a", "b", "c"], "generators": [["a"]]})
    assert s.sigma == g.sigma
    assert len(g.sigma) == 4


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"carrier": "abc", "sigma": []},
        {"carrier": ["a", "a"], "sigma": []},
        {"carrier": ["a", "b"]},
        {"carrier": ["a", "b"], "sigma": [[], ["a"], ["a", "b"]]},
        {"carrier": ["a", "b"], "generators": [["z"]]},
        {"carrier": ["a", "b"], "generators": ["a"]},
    ],
)
def test_bad_spaces(doc):
    with pytest.raises(InputError):
        space_from_dict(doc)


def test_load_topology_variants(tmp_path):
    c, t, _ = load_topology(write(tmp_path, "t.json", {"carrier": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}))
    assert t is not None and len(t) == 3
    c, t, raw = load_topology(write(tmp_path, "u.json", {"carrier": ["0", "1", "2"], "opens": [[], ["0"], ["1"]]}))
    assert t is None and len(raw) == 3
    with pytest.raises(InputError):
        load_topology(write(tmp_path, "v.json", {"carrier": ["0"]}))


def test_algebra_tables_nested_and_flat():
    nested = algebra_from_dict(
        {"carrier": ["0", "1"], "ops": {"e": ["0"], "inv": ["0", "1"], "mul": [["0", "1"], ["1", "0"]]}},
        theory=builtin("Group"),
    )
    flat = algebra_from_dict(
        {"carrier": ["0", "1"], "ops": {"e": ["0"], "inv": ["0", "1"], "mul": ["0", "1", "1", "0"]}},
        theory=builtin("Group"),
    )
    assert nested == flat
    assert nested.arities == {"e": 0, "inv": 1, "mul": 2}


def test_algebra_arity_inference_without_theory():
    alg = algebra_from_dict({"carrier": ["0", "1"], "ops": {"c": ["1"], "f": [["0", "1"], ["1", "1"]]}})
    assert alg.arities == {"c": 0, "f": 2}


@pytest.mark.parametrize(
    "ops",
    [
        {"mul": [["0", "1"], ["1"]]},
        {"mul": [["0", "1"], ["1", "7"]]},
        {"e": ["0", "1"]},
        "mul",
    ],
)
def test_bad_algebras(ops):
    with pytest.raises(InputError):
        algebra_from_dict({"carrier": ["0", "1"], "ops": ops}, theory=builtin("Group"))


def test_topalgebra_needs_topology(tmp_path):
    doc = {"carrier": ["0", "1"], "ops": {"e": ["0"], "inv": ["0", "1"], "mul": [["0", "1"], ["1", "0"]]}}
    with pytest.raises(InputError):
        load_topalgebra(write(tmp_path, "a.json", doc))
    doc["topology"] = {"subbasis": [["1"]]}
    y, _ = load_topalgebra(write(tmp_path, "b.json", doc))
    assert len(y.topology) == 3
    doc["topology"] = {"opens": [["1"]]}
    with pytest.raises(InputError):
        load_topalgebra(write(tmp_path, "c.json", doc))


def test_load_theory(tmp_path):
    assert load_theory("Group") == builtin("Group")
    path = write(tmp_path, "m.theory", "theory M\nops: e/0, mul/2\neq: mul(e, x) = x\n")
    assert load_theory(path).name == "M"
    with pytest.raises(InputError):
        load_theory("Lattice")
    with pytest.raises(InputError):
        load_theory(str(tmp_path / "absent.theory"))
    with pytest.raises(InputError, match="line 2"):
        load_theory(write(tmp_path, "bad.theory", "theory M\nops: e/x\n"))


def test_file_errors(tmp_path):
    with pytest.raises(InputError, match="malformed JSON"):
        load_space(write(tmp_path, "m.json", "{"))
    with pytest.raises(InputError):
        load_algebra(str(tmp_path / "absent.json"))
