import pytest

from youngwalls.columns import (PRINTED_SIGNATURES, LEDGER, ColumnState, UnsupportedType,
                                adjacency_delta_blocks, blocks_added, chain_of_classes,
                                column_class, column_classes, column_graph, psi, psi_inverse,
                                signature)
from youngwalls.crystal import isomorphism_map
from youngwalls.energy import energy_table
from youngwalls.perfect import perfect_crystal

from conftest import D4, G2


def test_psi_examples():
    g, gp = perfect_crystal(D4).graph, perfect_crystal(G2).graph
    assert g.label(psi(column_class(D4, "c_phi"))) == "u_phi"
    assert gp.label(psi(column_class(G2, "c'_7b"))) == "v_7b"


@pytest.mark.parametrize("ctype", [D4, G2])
def test_psi_bijection(ctype):
    g = perfect_crystal(ctype).graph
    assert [psi(psi_inverse(ctype, b)) for b in g] == list(g)
    assert len({psi(c) for c in column_classes(ctype)}) == len(g)


@pytest.mark.parametrize("ctype, label, i, sig", [
    (D4, "c_1", 0, (2, 0)),
    (D4, "c_3", 1, (0, 2)),
    (G2, "c'_5", 2, (0, 2)),
])
def test_signatures(ctype, label, i, sig):
    assert signature(column_class(ctype, label), i) == sig


@pytest.mark.parametrize("label", list(PRINTED_SIGNATURES))
def test_printed_signature_table(label):
    c = column_class(D4, label)
    assert tuple(signature(c, i) for i in range(3)) == PRINTED_SIGNATURES[label]


def test_unknown_class():
    with pytest.raises(Exception):
        column_class(D4, "c_9")


def test_chain_colors_and_edges():
    chain = chain_of_classes(D4)
    assert [c for _, c, _ in chain] == [0, 1, 2, 1, 1, 2, 1, 0]
    g = perfect_crystal(D4).graph
    assert all(g.f(psi(a), i) == psi(b) for a, i, b in chain)


def test_ledger_period():
    counts = [LEDGER.pattern_colors.count(i) for i in range(3)]
    assert counts == [2, 4, 2]
    assert LEDGER.blocks_per_delta == 4


@pytest.mark.parametrize("label, n, blocks", [("c_phi", 0, 0), ("c_3", 1, 3), ("c_3", 2, 7)])
def test_blocks_added(label, n, blocks):
    assert blocks_added(ColumnState(column_class(D4, label), n)) == blocks


def test_blocks_added_rejects_impossible_level():
    with pytest.raises(ValueError):
        blocks_added(ColumnState(column_class(D4, "c_3"), 0))


def test_adjacency_delta():
    c = lambda s: column_class(D4, s)  # noqa: E731
    assert adjacency_delta_blocks(c("c_phi"), c("c_phi"), n_left=0) == 0
    assert adjacency_delta_blocks(c("c_1"), c("c_0")) == 3
    t = energy_table(D4)
    deltas = [adjacency_delta_blocks(a, b, t) for a in column_classes(D4) for b in column_classes(D4)]
    assert len(deltas) == 64 and min(deltas) >= 0


@pytest.mark.parametrize("n_left", [1, 2, 5])
def test_adjacency_delta_independent_of_level(n_left):
    c = lambda s: column_class(D4, s)  # noqa: E731
    assert adjacency_delta_blocks(c("c_1"), c("c_0"), n_left=n_left) == 3


def test_g2_blocks_unsupported():
    with pytest.raises(UnsupportedType):
        blocks_added(ColumnState(column_class(G2, "c'_1"), 1))
    with pytest.raises(UnsupportedType):
        chain_of_classes(G2)


@pytest.mark.parametrize("ctype, ground", [(D4, "c_phi"), (G2, "c'_0")])
def test_column_graph_isomorphic(ctype, ground):
    cg, pg = column_graph(ctype), perfect_crystal(ctype).graph
    m = isomorphism_map(cg, pg, [(ground, 0)])
    assert m is not None
    assert all(m[c] == psi(column_class(ctype, cg.label(c))) for c in cg)
