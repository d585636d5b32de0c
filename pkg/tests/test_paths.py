import pytest

from youngwalls.cartan import INDEX_SET
from youngwalls.crystal import isomorphism_map
from youngwalls.paths import path_model, generate_paths
from youngwalls.walls import generate_crystal, wall_model

from conftest import CASES, D4, G2, L0, L2


@pytest.mark.parametrize("ctype, lam", CASES)
def test_isomorphic_prefixes(ctype, lam):
    walls = generate_crystal(ctype, lam, 8)
    paths = generate_paths(ctype, lam, 8)
    assert isomorphism_map(walls, paths, [(0, 0)]) is not None


@pytest.mark.parametrize("ctype, lam", CASES)
def test_to_path_intertwines_operators(ctype, lam):
    wm, pm = wall_model(ctype, lam), path_model(ctype, lam)
    for layer in wm.generate_layers(7):
        for w in layer:
            p = wm.to_path(w)
            for i in INDEX_SET:
                fw, fp = wm.f(w, i), pm.f(p, i)
                assert (fw is None) == (fp is None)
                if fw is not None:
                    assert wm.to_path(fw) == fp
                    assert wm.weight(fw) == pm.weight(fp)
                ew = wm.e(w, i)
                assert (None if ew is None else wm.to_path(ew)) == pm.e(p, i)


def test_ground_path():
    pm = path_model(D4, L0)
    assert pm.weight(()) == L0
    assert pm.e((), 0) is None
    assert pm.label(pm.f((), 0)) == "(u_1)"


def test_path_weight_matches_string_statistics():
    pm = path_model(G2, L2)
    g = generate_paths(G2, L2, 6)
    for b in g:
        w = g.weight_of(b)
        assert all(g.phi(b, i) <= pm.epsilon_phi(_path(pm, g, b), i)[1] for i in INDEX_SET)
        assert w.delta <= 0


def _path(pm, g, b):
    labels = g.label(b).strip("()")
    if not labels:
        return ()
    return tuple(pm.g.index(s) for s in labels.split(", "))


def test_bad_weight():
    with pytest.raises(ValueError):
        path_model(D4, L2)
