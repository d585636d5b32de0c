"""Path realization of B(lambda), used as an oracle for the wall model.

A path is a sequence of perfect-crystal elements that agrees with the ground
state path far to the left.  States keep only the finite part after
stripping leading ground elements; the infinite ground tail is a virtual
head with ``eps_i = 0`` and ``phi_i = lambda(h_i)``.  Operators follow the
binary tensor rule applied recursively through prefix statistics, and the
delta-degree comes from the transcribed energy table, so nothing here is
shared with the wall code beyond the perfect crystal itself.
"""
from __future__ import annotations

from functools import lru_cache

from .cartan import INDEX_SET, AffineType, Weight, as_type, level
from .crystal import CrystalGraph
from .energy import EnergyTable, printed_table
from .perfect import ground_state_path, perfect_crystal


class PathModel:
    def __init__(self, ctype: AffineType | str, highest: Weight,
                 table: EnergyTable | None = None):
        self.ctype = as_type(ctype)
        self.highest = highest.classical
        if level(self.ctype, self.highest) != 1 or min(self.highest.coeffs) < 0:
            raise ValueError(f"{highest} is not a level-1 dominant weight")
        self.g = perfect_crystal(self.ctype).graph
        self.table = printed_table(self.ctype) if table is None else table
        self.ground = ground_state_path(self.ctype, self.highest)

    def _strip(self, path: tuple[int, ...]) -> tuple[int, ...]:
        k = 0
        while k < len(path) and path[k] == self.ground:
            k += 1
        return path[k:]

    def _prefix_stats(self, path, i):
        """(eps, phi) of head (x) path[0] (x) ... (x) path[j] for every j, head first."""
        g = self.g
        eps, phi = 0, self.highest.pair(i)
        out = [(eps, phi)]
        for b in path:
            eb, pb = g.epsilon(b, i), g.phi(b, i)
            wt_prev = phi - eps
            eps, phi = max(eps, eb - wt_prev), max(pb, phi + pb - eb)
            out.append((eps, phi))
        return out

    def epsilon_phi(self, path, i: int) -> tuple[int, int]:
        return self._prefix_stats(path, i)[-1]

    def _locate(self, path, i, strict: bool) -> int:
        """Position acted on, or -1 for the head."""
        stats = self._prefix_stats(path, i)
        for j in range(len(path) - 1, -1, -1):
            left_phi = stats[j][1]
            right_eps = self.g.epsilon(path[j], i)
            acts_left = left_phi > right_eps if strict else left_phi >= right_eps
            if not acts_left:
                return j
        return -1

    def f(self, path, i: int):
        if self.epsilon_phi(path, i)[1] == 0:
            return None
        j = self._locate(path, i, strict=True)
        if j < 0:
            path = (self.ground,) + tuple(path)
            j = self._locate(path, i, strict=True)
            if j < 0:
                raise AssertionError("f acted on the head twice")
        new = self.g.f(path[j], i)
        if new is None:
            raise AssertionError(f"tensor rule chose an element without f_{i}")
        return self._strip(tuple(path[:j]) + (new,) + tuple(path[j + 1:]))

    def e(self, path, i: int):
        if self.epsilon_phi(path, i)[0] == 0:
            return None
        j = self._locate(path, i, strict=False)
        if j < 0:
            return None
        new = self.g.e(path[j], i)
        if new is None:
            raise AssertionError(f"tensor rule chose an element without e_{i}")
        return self._strip(tuple(path[:j]) + (new,) + tuple(path[j + 1:]))

    def weight(self, path) -> Weight:
        g = self.g
        cl = self.highest
        for b in path:
            cl = cl + g.weight_of(b) - g.weight_of(self.ground)
        full = (self.ground,) + tuple(path)
        # full[-1] is p_0; p_{k+1} sits left of p_k.
        energy = 0
        m = len(full)
        for k in range(m - 1):
            energy += (k + 1) * self.table(full[m - 2 - k], full[m - 1 - k])
        return Weight(cl.coeffs, -energy)

    def label(self, path) -> str:
        return "(" + ", ".join(self.g.label(b) for b in path) + ")"

    def generate(self, depth: int) -> CrystalGraph:
        layers = [[()]]
        for _ in range(depth):
            nxt = {}
            for p in layers[-1]:
                for i in INDEX_SET:
                    q = self.f(p, i)
                    if q is not None:
                        nxt.setdefault(q, None)
            layers.append(sorted(nxt, key=lambda p: (len(p), p)))
        paths = [p for layer in layers for p in layer]
        index = {p: k for k, p in enumerate(paths)}
        edges = [(index[p], i, index[q]) for layer in layers[:-1] for p in layer
                 for i in INDEX_SET if (q := self.f(p, i)) is not None]
        return CrystalGraph(self.ctype, [self.label(p) for p in paths], edges,
                            [self.weight(p) for p in paths])


@lru_cache(maxsize=None)
def path_model(ctype: AffineType | str, highest: Weight) -> PathModel:
    return PathModel(as_type(ctype), highest.classical)


def generate_paths(ctype: AffineType | str, highest: Weight, depth: int) -> CrystalGraph:
    return path_model(as_type(ctype), highest.classical).generate(depth)
