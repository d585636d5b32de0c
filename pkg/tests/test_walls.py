import pytest
from hypothesis import given, settings, strategies as st

from youngwalls.cartan import INDEX_SET, Weight, simple_root_as_weight
from youngwalls.columns import column_class
from youngwalls.walls import (WallError, depth_profile, enumerate_reduced_adjacent_pairs,
                              generate_crystal, ground_wall, multiplicities, wall_model)

from conftest import CASES, D4, G2, L0, L2


@pytest.fixture(scope="module")
def d4():
    return wall_model(D4, L0)


def alpha(ctype, i):
    return simple_root_as_weight(ctype, i)


def test_ground_tail():
    assert wall_model(D4, L0).ground_class.label == "c_phi"
    m = wall_model(G2, L2)
    assert m.ground_class.label == "c'_7b"
    assert m.table(m.ground, m.ground) == 0


def test_invalid_weight():
    with pytest.raises(WallError):
        ground_wall(D4, L2)


def test_reducedness(d4):
    assert d4.is_reduced(d4.ground_wall())
    c = lambda s: column_class(D4, s)  # noqa: E731
    assert d4.is_reduced(d4.wall([(c("c_phi"), 0), (c("c_1"), 1)]))
    assert not d4.is_reduced(d4.wall([(c("c_phi"), 0), (c("c_1"), 0)]))


def test_signature_examples(d4):
    g = d4.ground_wall()
    s = d4.i_signature(g, 0)
    assert str(s) == "+" and s.reduced[0][1] == -1
    assert str(d4.i_signature(g, 1)) == ""
    w = d4.wall([(column_class(D4, "c_3b"), 1)])
    s = d4.i_signature(w, 0)
    # Leftmost surviving plus sits on the ground column next to the wall.
    assert str(s) == "++" and s.reduced[0][1] == -1


def test_first_step(d4):
    g = d4.ground_wall()
    w = d4.f(g, 0)
    assert w.label == "(c_1(1))"
    assert d4.weight(w) == L0 - alpha(D4, 0)
    assert d4.f(g, 1) is None and d4.f(g, 2) is None
    assert d4.epsilon_phi(g, 0) == (0, 1)
    assert d4.epsilon_phi(w, 0) == (1, 0)


def test_f_then_e_returns(d4):
    g = d4.ground_wall()
    w = d4.f(d4.f(g, 0), 1)
    assert d4.e(d4.e(w, 1), 0) == g


def test_chain_to_two_delta(d4):
    w = d4.ground_wall()
    for i in (0, 1, 2, 1, 1, 2, 1, 0):
        w = d4.f(w, i)
    assert d4.added_blocks(w) == (2, 4, 2)
    assert d4.weight(w) == L0 - 2 * Weight((0, 0, 0), 1)


def test_early_layers(d4):
    layers = d4.generate_layers(6)
    # Depth 5 also holds (c_1(1), c_0(1)), of weight s_0(Lambda_0 - delta).
    assert [len(layer) for layer in layers] == [1, 1, 1, 1, 1, 2, 2]
    assert [w.label for w in layers[5]] == ["(c_3b(1))", "(c_1(1), c_0(1))"]
    assert [w.label for w in layers[6]] == ["(c_2b(1))", "(c_1(1), c_3b(1))"]
    w = layers[5][1]
    assert d4.weight(w) == L0 - alpha(D4, 0) - Weight((0, 0, 0), 1)


@pytest.mark.parametrize("ctype, count", [(D4, 64), (G2, 225)])
def test_adjacent_pairs(ctype, count):
    n, pairs = enumerate_reduced_adjacent_pairs(ctype)
    assert n == len(pairs) == count
    assert all(h >= 0 for _, _, h in pairs)


@pytest.mark.parametrize("ctype, lam", CASES)
def test_generated_walls_are_reduced_and_weighted(ctype, lam):
    m = wall_model(ctype, lam)
    g = generate_crystal(ctype, lam, 9)
    layers = m.generate_layers(9)
    walls = [w for layer in layers for w in layer]
    assert all(m.is_reduced(w) and m.is_normalized(w) for w in walls)
    assert [g.label(b) for b in g] == [w.label for w in walls]
    for w in walls:
        wt = m.weight(w)
        for i in INDEX_SET:
            eps, phi = m.epsilon_phi(w, i)
            assert phi - eps == wt.pair(i)
            assert w.signature(i).minus_count == eps
            assert w.signature(i).plus_count == phi


@pytest.mark.parametrize("ctype, lam", CASES)
def test_path_roundtrip(ctype, lam):
    m = wall_model(ctype, lam)
    for layer in m.generate_layers(8):
        for w in layer:
            assert m.from_path(m.to_path(w)) == w
    assert m.to_path(m.ground_wall()) == ()
    assert m.from_path([m.ground] * 4) == m.ground_wall()


def test_from_path_rejects_unknown(d4):
    with pytest.raises(WallError):
        d4.from_path([42])


def test_multiplicity_rows():
    g = generate_crystal(D4, L0, 6)
    rows = multiplicities(g, L0)
    assert sum(m for d, _, m in rows if d == 6) == 2
    assert depth_profile(g, L0) == [1, 1, 1, 1, 1, 2, 2]


def test_generation_is_deterministic():
    a, b = generate_crystal(G2, L2, 7), generate_crystal(G2, L2, 7)
    assert a.labels == b.labels and a.edges == b.edges


def test_negative_depth(d4):
    with pytest.raises(ValueError):
        d4.generate_layers(-1)


walks = st.tuples(st.sampled_from(CASES), st.lists(st.sampled_from(INDEX_SET), max_size=25))


@settings(max_examples=60, deadline=None)
@given(walks)
def test_random_walks_stay_reduced(data):
    (ctype, lam), colors = data
    m = wall_model(ctype, lam)
    w = m.ground_wall()
    wt = lam
    for i in colors:
        v = m.f(w, i)
        if v is None:
            continue
        assert m.e(v, i) == w
        # One extra ground column on the left changes nothing.
        padded = m.f(m.pad(w, 2), i)
        assert m.normalize(padded) == v
        w, wt = v, wt - alpha(ctype, i)
        assert m.is_reduced(w) and m.weight(w) == wt
