import json

import pytest
from hypothesis import given, strategies as st

from youngwalls.crystal import (CrystalError, CrystalGraph, connected_components, export_dot,
                                export_json, import_json, is_isomorphic, isomorphism_map,
                                tensor, verify_axioms)

from conftest import D4


def test_epsilon_phi(b1, b1p):
    u1, uphi = b1.index("u_1"), b1.index("u_phi")
    assert b1.epsilon(u1, 0) == 2
    assert (b1.epsilon(uphi, 1), b1.phi(uphi, 1)) == (0, 0)
    assert b1p.epsilon(b1p.index("v_6"), 2) == 3
    assert b1p.phi(b1p.index("v_6b"), 2) == 3


def test_classical_weights(b1):
    assert b1.weight_of(b1.index("u_phi")).coeffs == (0, 0, 0)
    assert b1.weight_of(b1.index("u_1")).coeffs == (-2, 1, 0)


@pytest.mark.parametrize("which", ["b1", "b1p"])
def test_axioms_hold(which, request):
    assert verify_axioms(request.getfixturevalue(which)).ok


def test_axiom_six_fails_on_corrupted_table(b1):
    rep = verify_axioms(b1.with_f_arrow_dropped("u_2", 2))
    assert not rep.ok
    assert rep.failed("condition (6)")


def test_tensor_rule(b1):
    t = tensor(b1, b1)
    assert len(t) == 64
    start = t.index("u_phi⊗u_phi")
    assert t.label(t.f(start, 0)) == "u_phi⊗u_1"


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 2))
def test_tensor_signature_rule(x, y, i):
    from youngwalls.perfect import perfect_crystal
    g = perfect_crystal(D4).graph
    t = tensor(g, g)
    xy = x * len(g) + y
    wt_x = g.weight_of(x).pair(i)
    assert t.epsilon(xy, i) == max(g.epsilon(x, i), g.epsilon(y, i) - wt_x)
    assert t.phi(xy, i) == max(g.phi(y, i), g.phi(x, i) + g.weight_of(y).pair(i))


def test_connectivity(b1, b1p):
    assert len(connected_components(tensor(b1, b1))) == 1
    assert len(connected_components(tensor(b1p, b1p))) == 1
    assert len(connected_components(b1.restrict_colors({1, 2}))) > 1


def test_isomorphism(b1, b1p):
    assert is_isomorphic(b1, b1, [("u_phi", "u_phi")])
    assert not is_isomorphic(b1, b1p, [(0, 0)])
    assert isomorphism_map(b1, b1, [("u_phi", "u_1")]) is None
    with pytest.raises(CrystalError):
        isomorphism_map(b1, b1, [])


def test_dot_export(b1):
    dot = export_dot(b1)
    assert dot.count("[label=") == 8
    assert dot.count("->") == 10
    assert export_dot(CrystalGraph(D4, [])).startswith("digraph")


def test_json_roundtrip(b1p):
    text = export_json(b1p)
    back = import_json(text)
    assert export_json(back) == text
    doc = json.loads(text)
    assert set(doc) == {"type", "elements", "edges"}
    assert len(doc["elements"]) == 15 and len(doc["edges"]) == 20


def test_empty_graph_json():
    g = import_json(export_json(CrystalGraph(D4, [])))
    assert len(g) == 0 and g.edges == []


@pytest.mark.parametrize("labels, edges", [
    (["a", "a"], []),
    (["a"], [(0, 0, 1)]),
    (["a", "b"], [(0, 3, 1)]),
])
def test_bad_graphs(labels, edges):
    with pytest.raises(CrystalError):
        CrystalGraph(D4, labels, edges)


def test_without_element(b1):
    g = b1.without_element("u_phi")
    assert len(g) == 7 and "u_phi" not in g.labels
