"""Finite crystal graphs: string statistics, axiom checks, tensor products,
seeded isomorphism and DOT/JSON export.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cartan import INDEX_SET, AffineType, Weight, as_type, simple_root_as_weight

DOT_COLORS = {0: "red", 1: "black", 2: "blue"}


class CrystalError(ValueError):
    pass


@dataclass
class Report:
    """Outcome of a batch of named checks."""

    title: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append((name, bool(passed), detail))
        return passed

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(n, d) for n, p, d in self.checks if not p]

    def failed(self, prefix: str) -> bool:
        return any(not p and n.startswith(prefix) for n, p, _ in self.checks)

    def lines(self) -> list[str]:
        out = []
        for name, passed, detail in self.checks:
            status = "PASS" if passed else "FAIL"
            out.append(f"{status}  {self.title}: {name}" + (f"  [{detail}]" if detail else ""))
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


class CrystalGraph:
    """A finite crystal as an I-colored directed graph.

    Elements are integers ``0..len-1`` with unique display labels.  The
    Kashiwara operators are kept as two partial maps so that a corrupted
    operator table can be represented (and caught by ``verify_axioms``).
    Weights are derived from string lengths unless given explicitly, which
    is how truncated affine crystals carry their delta-degrees.
    """

    def __init__(self, ctype: AffineType | str, labels: Sequence[str],
                 edges: Iterable[tuple[int, int, int]] = (),
                 weights: Sequence[Weight] | None = None,
                 e_edges: Iterable[tuple[int, int, int]] | None = None):
        self.ctype = as_type(ctype)
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise CrystalError("element labels must be unique")
        self._index = {lab: k for k, lab in enumerate(self.labels)}
        n = len(self.labels)
        self._f: list[dict[int, int]] = [{} for _ in INDEX_SET]
        self._e: list[dict[int, int]] = [{} for _ in INDEX_SET]
        self._duplicate: list[tuple[int, int, int]] = []
        edges = list(edges)
        for src, i, dst in edges:
            if not (0 <= src < n and 0 <= dst < n) or i not in INDEX_SET:
                raise CrystalError(f"bad edge {(src, i, dst)}")
            if src in self._f[i]:
                self._duplicate.append((src, i, dst))
            self._f[i][src] = dst
        for dst_src in (edges if e_edges is None else e_edges):
            src, i, dst = dst_src
            if dst in self._e[i]:
                self._duplicate.append((src, i, dst))
            self._e[i][dst] = src
        self._weights = tuple(weights) if weights is not None else None
        if self._weights is not None and len(self._weights) != n:
            raise CrystalError("one weight per element required")

    # -- basic access -----------------------------------------------------
    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def __repr__(self) -> str:
        return f"CrystalGraph({self.ctype.value}, {len(self)} elements, {len(self.edges)} edges)"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise CrystalError(f"unknown element {label!r}") from None

    def label(self, b: int) -> str:
        return self.labels[b]

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((src, i, dst) for i in INDEX_SET for src, dst in self._f[i].items())

    @property
    def has_stored_weights(self) -> bool:
        return self._weights is not None

    def f(self, b: int, i: int) -> int | None:
        return self._f[i].get(b)

    def e(self, b: int, i: int) -> int | None:
        return self._e[i].get(b)

    def _check(self, b: int) -> None:
        if not 0 <= b < len(self.labels):
            raise CrystalError(f"unknown element {b}")

    # -- statistics -------------------------------------------------------
    def epsilon(self, b: int, i: int) -> int:
        self._check(b)
        k, seen = 0, {b}
        while (b := self._e[i].get(b)) is not None and b not in seen:
            seen.add(b)
            k += 1
        return k

    def phi(self, b: int, i: int) -> int:
        self._check(b)
        k, seen = 0, {b}
        while (b := self._f[i].get(b)) is not None and b not in seen:
            seen.add(b)
            k += 1
        return k

    def weight_of(self, b: int) -> Weight:
        self._check(b)
        if self._weights is not None:
            return self._weights[b]
        return Weight(tuple(self.phi(b, i) - self.epsilon(b, i) for i in INDEX_SET))

    def epsilon_vector(self, b: int) -> Weight:
        return Weight(tuple(self.epsilon(b, i) for i in INDEX_SET))

    def phi_vector(self, b: int) -> Weight:
        return Weight(tuple(self.phi(b, i) for i in INDEX_SET))

    # -- derived graphs ---------------------------------------------------
    def restrict_colors(self, colors: Iterable[int]) -> CrystalGraph:
        colors = set(colors)
        return CrystalGraph(self.ctype, self.labels,
                            [ed for ed in self.edges if ed[1] in colors], self._weights)

    def without_element(self, label: str) -> CrystalGraph:
        drop = self.index(label)
        keep = [b for b in self if b != drop]
        new = {b: k for k, b in enumerate(keep)}
        edges = [(new[s], i, new[d]) for s, i, d in self.edges if s != drop and d != drop]
        weights = None if self._weights is None else [self._weights[b] for b in keep]
        return CrystalGraph(self.ctype, [self.labels[b] for b in keep], edges, weights)

    def with_f_arrow_dropped(self, src: str, color: int) -> CrystalGraph:
        """Copy with one f-arrow removed but its e-arrow kept (a corrupted table)."""
        s = self.index(src)
        f_edges = [ed for ed in self.edges if not (ed[0] == s and ed[1] == color)]
        return CrystalGraph(self.ctype, self.labels, f_edges, self._weights, e_edges=self.edges)

    def relabel(self, mapping) -> CrystalGraph:
        return CrystalGraph(self.ctype, [mapping(lab) for lab in self.labels],
                            self.edges, self._weights)


def verify_axioms(g: CrystalGraph) -> Report:
    """Check crystal axioms (1)-(6) for every element and color.

    Without stored weights only the classical part of alpha_i is compared.
    """
    rep = Report("axioms")
    classical = not g.has_stored_weights
    bad: dict[int, list[str]] = {k: [] for k in range(1, 7)}
    for src, i, dst in g._duplicate:
        bad[6].append(f"operator {i} not single-valued at {g.label(src)}->{g.label(dst)}")
    for b in g:
        wt = g.weight_of(b)
        for i in INDEX_SET:
            alpha = simple_root_as_weight(g.ctype, i)
            if classical:
                alpha = alpha.classical
            eps, ph = g.epsilon(b, i), g.phi(b, i)
            if ph != eps + wt.pair(i):
                bad[1].append(f"{g.label(b)}, i={i}")
            up, down = g.e(b, i), g.f(b, i)
            if up is not None:
                if g.weight_of(up) != wt + alpha:
                    bad[2].append(f"e_{i} {g.label(b)}")
                if g.epsilon(up, i) != eps - 1 or g.phi(up, i) != ph + 1:
                    bad[4].append(f"e_{i} {g.label(b)}")
                if g.f(up, i) != b:
                    bad[6].append(f"f_{i} e_{i} {g.label(b)} != {g.label(b)}")
            if down is not None:
                if g.weight_of(down) != wt - alpha:
                    bad[3].append(f"f_{i} {g.label(b)}")
                if g.epsilon(down, i) != eps + 1 or g.phi(down, i) != ph - 1:
                    bad[5].append(f"f_{i} {g.label(b)}")
                if g.e(down, i) != b:
                    bad[6].append(f"e_{i} f_{i} {g.label(b)} != {g.label(b)}")
    for k in range(1, 7):
        rep.add(f"condition ({k})", not bad[k], "; ".join(bad[k][:3]))
    return rep


def tensor(a: CrystalGraph, b: CrystalGraph, sep: str = "⊗") -> CrystalGraph:
    """Tensor product with f acting on the left factor iff phi_i(x) > eps_i(y)."""
    if a.ctype != b.ctype:
        raise CrystalError("tensor factors must have the same affine type")
    nb = len(b)
    labels = [f"{a.label(x)}{sep}{b.label(y)}" for x in a for y in b]
    stats_a = [[(a.epsilon(x, i), a.phi(x, i)) for i in INDEX_SET] for x in a]
    stats_b = [[(b.epsilon(y, i), b.phi(y, i)) for i in INDEX_SET] for y in b]
    edges = []
    for x in a:
        for y in b:
            for i in INDEX_SET:
                if stats_a[x][i][1] > stats_b[y][i][0]:
                    fx = a.f(x, i)
                    if fx is not None:
                        edges.append((x * nb + y, i, fx * nb + y))
                else:
                    fy = b.f(y, i)
                    if fy is not None:
                        edges.append((x * nb + y, i, x * nb + fy))
    weights = None
    if a.has_stored_weights and b.has_stored_weights:
        weights = [a.weight_of(x) + b.weight_of(y) for x in a for y in b]
    return CrystalGraph(a.ctype, labels, edges, weights)


def connected_components(g: CrystalGraph) -> list[list[int]]:
    adj: list[set[int]] = [set() for _ in g]
    for s, _, d in g.edges:
        adj[s].add(d)
        adj[d].add(s)
    seen = [False] * len(g)
    comps = []
    for start in g:
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [], deque([start])
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def isomorphism_map(g1: CrystalGraph, g2: CrystalGraph,
                    seed_pairs: Sequence[tuple[int | str, int | str]]) -> dict[int, int] | None:
    """Extend the seed pairs along edges to a color- and weight-preserving bijection.

    Returns the map, or ``None`` if the extension is not well defined, not
    injective, not total, or misses an edge of either graph.
    """
    if not seed_pairs:
        raise CrystalError("at least one seed pair is required")
    if g1.ctype != g2.ctype or len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return None

    def idx(g, x):
        return g.index(x) if isinstance(x, str) else x

    fwd: dict[int, int] = {}
    back: dict[int, int] = {}
    queue = deque()

    def bind(x: int, y: int) -> bool:
        if x in fwd or y in back:
            return fwd.get(x) == y and back.get(y) == x
        if g1.weight_of(x) != g2.weight_of(y):
            return False
        fwd[x], back[y] = y, x
        queue.append(x)
        return True

    for x, y in seed_pairs:
        if not bind(idx(g1, x), idx(g2, y)):
            return None
    while queue:
        x = queue.popleft()
        y = fwd[x]
        for i in INDEX_SET:
            for op1, op2 in ((g1.f, g2.f), (g1.e, g2.e)):
                nx, ny = op1(x, i), op2(y, i)
                if (nx is None) != (ny is None):
                    return None
                if nx is not None and not bind(nx, ny):
                    return None
    if len(fwd) != len(g1):
        return None
    return fwd


def is_isomorphic(g1: CrystalGraph, g2: CrystalGraph, seed_pairs) -> bool:
    return isomorphism_map(g1, g2, seed_pairs) is not None


def export_dot(g: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{", f'  // type {g.ctype.value}']
    for b in g:
        w = g.weight_of(b)
        lines.append(f'  n{b} [label="{g.label(b)}", tooltip="{w}"];')
    for s, i, d in g.edges:
        lines.append(f'  n{s} -> n{d} [color={DOT_COLORS[i]}, label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: CrystalGraph) -> str:
    doc = {
        "type": g.ctype.value,
        "elements": [{"id": b, "label": g.label(b), "weight": g.weight_of(b).as_list()}
                     for b in g],
        "edges": [{"src": s, "color": i, "dst": d} for s, i, d in g.edges],
    }
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def import_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    elements = sorted(doc["elements"], key=lambda el: el["id"])
    if [el["id"] for el in elements] != list(range(len(elements))):
        raise CrystalError("element ids must be 0..n-1")
    weights = [Weight(tuple(el["weight"][:3]), el["weight"][3]) for el in elements]
    edges = [(ed["src"], ed["color"], ed["dst"]) for ed in doc["edges"]]
    return CrystalGraph(doc["type"], [el["label"] for el in elements], edges, weights)

