"""The level-1 perfect crystals B1 of D4(3) (8 elements) and B'1 of G2(1)
(15 elements), their perfectness check and ground-state paths.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .cartan import (INDEX_SET, AffineType, Weight, as_type, central_element,
                     dominant_weights, level, root_coordinates)
from .crystal import CrystalGraph, Report, connected_components, tensor, verify_axioms

FIXTURE_ENV = "YOUNGWALLS_FIXTURES"

B1_LABELS = ("u_phi", "u_1", "u_2", "u_3", "u_0", "u_3b", "u_2b", "u_1b")
B1_EDGES = (
    ("u_phi", 0, "u_1"), ("u_1b", 0, "u_phi"), ("u_3b", 0, "u_2"), ("u_2b", 0, "u_3"),
    ("u_1", 1, "u_2"), ("u_3", 1, "u_0"), ("u_0", 1, "u_3b"), ("u_2b", 1, "u_1b"),
    ("u_2", 2, "u_3"), ("u_3b", 2, "u_2b"),
)

B1P_LABELS = ("v_0", "v_1", "v_2", "v_3", "v_4", "v_5", "v_6", "v_7",
              "v_7b", "v_6b", "v_5b", "v_4b", "v_3b", "v_2b", "v_1b")
# The two arrows leaving v_7 and v_7b in the drawing are read as
# f_1: v_7 -> v_6b and f_2: v_7b -> v_5b; build_B1_prime asserts that this
# makes every weight level 0 and eps(v_7b) = phi(v_7b) = Lambda_2.
B1P_EDGES = (
    ("v_0", 0, "v_1"), ("v_1b", 0, "v_0"), ("v_6b", 0, "v_2"), ("v_4b", 0, "v_3"),
    ("v_3b", 0, "v_4"), ("v_2b", 0, "v_6"),
    ("v_1", 1, "v_2"), ("v_4", 1, "v_5"), ("v_6", 1, "v_7"), ("v_7", 1, "v_6b"),
    ("v_5b", 1, "v_4b"), ("v_2b", 1, "v_1b"),
    ("v_2", 2, "v_3"), ("v_3", 2, "v_4"), ("v_4", 2, "v_6"), ("v_5", 2, "v_7b"),
    ("v_7b", 2, "v_5b"), ("v_6b", 2, "v_4b"), ("v_4b", 2, "v_3b"), ("v_3b", 2, "v_2b"),
)

_FIXTURE_NAMES = {AffineType.D4_3: "b1_d4_3.json", AffineType.G2_1: "b1_g2_1.json"}


class FixtureMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class PerfectCrystal:
    graph: CrystalGraph
    coordinates: dict[str, tuple[Fraction, ...]]
    minimal: dict[Weight, int]

    @property
    def ctype(self) -> AffineType:
        return self.graph.ctype

    def minimal_element(self, lam: Weight) -> int:
        try:
            return self.minimal[lam.classical]
        except KeyError:
            raise ValueError(f"{lam} is not a level-1 dominant weight for {self.ctype}") from None


def fixture_path(name: str) -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override) / name
    return Path(str(resources.files("youngwalls") / "data" / name))


def load_fixture(ctype: AffineType | str) -> dict:
    return json.loads(fixture_path(_FIXTURE_NAMES[as_type(ctype)]).read_text())


def _build(ctype: AffineType, labels, edges) -> PerfectCrystal:
    index = {lab: k for k, lab in enumerate(labels)}
    graph = CrystalGraph(ctype, labels, [(index[s], i, index[d]) for s, i, d in edges])
    fix = load_fixture(ctype)
    fix_labels = tuple(el["label"] for el in fix["elements"])
    fix_edges = {tuple(ed) for ed in fix["edges"]}
    if fix_labels != tuple(labels) or fix_edges != set(edges):
        raise FixtureMismatch(f"{ctype}: built crystal differs from fixture "
                              f"(missing {set(edges) - fix_edges}, extra {fix_edges - set(edges)})")
    coords = {el["label"]: tuple(Fraction(x) for x in el["coords"]) for el in fix["elements"]}
    minimal = {}
    for lam in dominant_weights(ctype, 1):
        hits = [b for b in graph if graph.phi_vector(b) == lam]
        if len(hits) == 1:
            minimal[lam] = hits[0]
    return PerfectCrystal(graph, coords, minimal)


@lru_cache(maxsize=None)
def build_B1() -> PerfectCrystal:
    return _build(AffineType.D4_3, B1_LABELS, B1_EDGES)


@lru_cache(maxsize=None)
def build_B1_prime() -> PerfectCrystal:
    p = _build(AffineType.G2_1, B1P_LABELS, B1P_EDGES)
    g = p.graph
    assert all(level(g.ctype, g.weight_of(b)) == 0 for b in g)
    v7b = g.index("v_7b")
    assert g.epsilon_vector(v7b) == g.phi_vector(v7b) == Weight((0, 0, 1))
    return p


def perfect_crystal(ctype: AffineType | str) -> PerfectCrystal:
    return build_B1() if as_type(ctype) is AffineType.D4_3 else build_B1_prime()


def verify_perfect(p: PerfectCrystal | CrystalGraph, lev: int = 1) -> Report:
    """Check perfectness conditions (2)-(5); condition (1) is taken on trust."""
    g = p.graph if isinstance(p, PerfectCrystal) else p
    ctype = g.ctype
    rep = Report(f"perfect {ctype.value}")
    rep.add("condition (1) module with crystal basis", True, "assumed (out of scope)")
    rep.add("crystal axioms", verify_axioms(g).ok)

    comps = connected_components(tensor(g, g))
    rep.add("condition (2) B(x)B connected", len(comps) == 1, f"{len(comps)} component(s)")

    weights = [g.weight_of(b) for b in g]
    found = None
    for cand in sorted(set(weights)):
        if weights.count(cand) != 1:
            continue
        ok = True
        for w in weights:
            k = root_coordinates(ctype, cand - w)
            if k is None or min(k) < 0:
                ok = False
                break
        if ok:
            found = cand
            break
    rep.add("condition (3) highest classical weight",
            found is not None, f"lambda_0 = {found}" if found is not None else "none")

    c = central_element(ctype)
    low = min((sum(ci * e for ci, e in zip(c, g.epsilon_vector(b).coeffs)) for b in g),
              default=0)
    rep.add(f"condition (4) eps(b)(c) >= {lev}", len(g) > 0 and low >= lev, f"min = {low}")

    details, ok5 = [], True
    for lam in dominant_weights(ctype, lev):
        up = [g.label(b) for b in g if g.epsilon_vector(b) == lam]
        down = [g.label(b) for b in g if g.phi_vector(b) == lam]
        ok5 &= len(up) == 1 and len(down) == 1
        details.append(f"{lam}: b^ = {up}, b_ = {down}")
    rep.add("condition (5) unique minimal vectors", ok5, "; ".join(details))
    return rep


def ground_state_path(ctype: AffineType | str, lam: Weight) -> int:
    """The repeated element of the ground-state path of weight ``lam``.

    Here eps(b_lam) = phi(b_lam) = lam, so the path is constant at b_lam.
    """
    ctype = as_type(ctype)
    if level(ctype, lam) != 1 or min(lam.coeffs) < 0:
        raise ValueError(f"{lam} is not a level-1 dominant weight for {ctype}")
    p = perfect_crystal(ctype)
    b = p.minimal_element(lam)
    if p.graph.epsilon_vector(b) != lam.classical:
        raise AssertionError("minimal element is not self-repeating")
    return b
