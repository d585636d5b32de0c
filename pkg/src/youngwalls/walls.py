"""Reduced Young walls and their affine crystal structure.

A wall is stored as its explicit columns, left to right
``(y_{N-1}, ..., y_1, y_0)``, each a column class together with the number
``n`` of 0-blocks added above the ground column.  Left of the explicit
columns sit infinitely many ground columns; for signatures they are
replaced by one virtual element with no minuses and ``lambda(h_i)``
pluses, because ``eps(b_lambda) = phi(b_lambda) = lambda`` makes the
signatures of further ground columns cancel in pairs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import _kernel
from .cartan import (INDEX_SET, AffineType, Weight, as_type, level, root_coordinates,
                     simple_root_as_weight)
from .columns import ColumnClass, ColumnState, psi, psi_inverse
from .crystal import CrystalGraph
from .energy import EnergyTable, energy_table
from .perfect import ground_state_path, perfect_crystal


class WallError(ValueError):
    pass


@dataclass(frozen=True)
class YoungWall:
    ctype: AffineType
    highest: Weight
    classes: bytes
    levels: tuple[int, ...]

    @property
    def model(self) -> WallModel:
        return wall_model(self.ctype, self.highest)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def columns(self) -> list[ColumnState]:
        return [ColumnState(psi_inverse(self.ctype, c), n)
                for c, n in zip(self.classes, self.levels)]

    @property
    def label(self) -> str:
        return "(" + ", ".join(map(str, self.columns)) + ")"

    def __str__(self) -> str:
        return self.label

    def is_reduced(self) -> bool:
        return self.model.is_reduced(self)

    def f(self, i: int) -> YoungWall | None:
        return self.model.f(self, i)

    def e(self, i: int) -> YoungWall | None:
        return self.model.e(self, i)

    def epsilon(self, i: int) -> int:
        return self.model.epsilon_phi(self, i)[0]

    def phi(self, i: int) -> int:
        return self.model.epsilon_phi(self, i)[1]

    def weight(self) -> Weight:
        return self.model.weight(self)

    def signature(self, i: int) -> WallSignature:
        return self.model.i_signature(self, i)


@dataclass(frozen=True)
class WallSignature:
    """Pre-signature per column and the reduced string after cancellation.

    Owners are explicit column positions (0 = leftmost) or -1 for the
    virtual tail.
    """

    pre: tuple[tuple[int, int, int], ...]  # (owner, minuses, pluses)
    reduced: tuple[tuple[str, int], ...] = field(default=())

    @property
    def minus_count(self) -> int:
        return sum(1 for s, _ in self.reduced if s == "-")

    @property
    def plus_count(self) -> int:
        return sum(1 for s, _ in self.reduced if s == "+")

    def __str__(self) -> str:
        return "".join(s for s, _ in self.reduced)


class WallModel:
    """Crystal structure on reduced Young walls for one (type, lambda)."""

    def __init__(self, ctype: AffineType | str, highest: Weight,
                 table: EnergyTable | None = None):
        self.ctype = as_type(ctype)
        self.highest = highest.classical
        if level(self.ctype, self.highest) != 1 or min(self.highest.coeffs) < 0:
            raise WallError(f"{highest} is not a level-1 dominant weight for {self.ctype}")
        self.crystal = perfect_crystal(self.ctype).graph
        self.table = energy_table(self.ctype) if table is None else table
        self.ground = ground_state_path(self.ctype, self.highest)
        if self.table(self.ground, self.ground) != 0:
            raise WallError("ground-state wall is not reduced: H(ground, ground) != 0")
        g = self.crystal
        self.tail_plus = tuple(self.highest.pair(i) for i in INDEX_SET)
        self._eps = tuple(bytes(g.epsilon(b, i) for b in g) for i in INDEX_SET)
        self._phi = tuple(bytes(g.phi(b, i) for b in g) for i in INDEX_SET)
        self._f = tuple(tuple(g.f(b, i) for b in g) for i in INDEX_SET)
        self._e = tuple(tuple(g.e(b, i) for b in g) for i in INDEX_SET)
        self._h = self.table.values
        self._cl_wt = tuple(g.weight_of(b) for b in g)
        self._alpha = tuple(simple_root_as_weight(self.ctype, i) for i in INDEX_SET)

    # -- construction -------------------------------------------------------
    def ground_wall(self) -> YoungWall:
        return YoungWall(self.ctype, self.highest, b"", ())

    @property
    def ground_class(self) -> ColumnClass:
        return psi_inverse(self.ctype, self.ground)

    def wall(self, columns) -> YoungWall:
        """Build a wall from ``(class, n)`` pairs given left to right."""
        classes, levels = [], []
        for cls, n in columns:
            classes.append(psi(cls) if isinstance(cls, ColumnClass)
                           else self.crystal.index(cls) if isinstance(cls, str) else cls)
            levels.append(n)
        return YoungWall(self.ctype, self.highest, bytes(classes), tuple(levels))

    def normalize(self, w: YoungWall) -> YoungWall:
        k = 0
        while k < len(w.classes) and w.classes[k] == self.ground and w.levels[k] == 0:
            k += 1
        if k == 0:
            return w
        return YoungWall(w.ctype, w.highest, w.classes[k:], w.levels[k:])

    def pad(self, w: YoungWall, count: int = 1) -> YoungWall:
        """Materialize ``count`` ground columns on the left (not normalized)."""
        return YoungWall(w.ctype, w.highest, bytes([self.ground] * count) + w.classes,
                         (0,) * count + w.levels)

    # -- reducedness --------------------------------------------------------
    def is_reduced(self, w: YoungWall) -> bool:
        h = self._h
        prev_c, prev_n = self.ground, 0
        for c, n in zip(w.classes, w.levels):
            if n < 0 or n - prev_n != h[prev_c][c]:
                return False
            prev_c, prev_n = c, n
        return True

    def is_normalized(self, w: YoungWall) -> bool:
        return not w.classes or not (w.classes[0] == self.ground and w.levels[0] == 0)

    def levels_for(self, classes: bytes) -> tuple[int, ...]:
        """The unique n-values making the class sequence reduced."""
        h = self._h
        out, prev_c, prev_n = [], self.ground, 0
        for c in classes:
            prev_n = prev_n + h[prev_c][c]
            out.append(prev_n)
            prev_c = c
        return tuple(out)

    # -- signatures and operators --------------------------------------------
    def i_signature(self, w: YoungWall, i: int) -> WallSignature:
        pre = [(-1, 0, self.tail_plus[i])]
        pre += [(k, self._eps[i][c], self._phi[i][c]) for k, c in enumerate(w.classes)]
        stack: list[tuple[str, int]] = []
        for owner, minus, plus in pre:
            for _ in range(minus):
                if stack and stack[-1][0] == "+":
                    stack.pop()
                else:
                    stack.append(("-", owner))
            stack.extend(("+", owner) for _ in range(plus))
        return WallSignature(tuple(pre), tuple(stack))

    def _reduce(self, w: YoungWall, i: int):
        return _kernel.reduce_signature(w.classes, self._eps[i], self._phi[i], self.tail_plus[i])

    def epsilon_phi(self, w: YoungWall, i: int) -> tuple[int, int]:
        n_minus, n_plus, _, _ = self._reduce(w, i)
        return n_minus, n_plus

    def f(self, w: YoungWall, i: int) -> YoungWall | None:
        _, n_plus, owner, _ = self._reduce(w, i)
        if n_plus == 0:
            return None
        classes, levels = bytearray(w.classes), list(w.levels)
        if owner == -1:
            classes.insert(0, self.ground)
            levels.insert(0, 0)
            owner = 0
        new = self._f[i][classes[owner]]
        if new is None:
            raise AssertionError(f"signature points at a column without an f_{i} arrow")
        classes[owner] = new
        levels[owner] += i == 0
        out = YoungWall(w.ctype, w.highest, bytes(classes), tuple(levels))
        if not self.is_reduced(out):
            raise AssertionError(f"F_{i} {w} = {out} is not reduced")
        return out

    def e(self, w: YoungWall, i: int) -> YoungWall | None:
        n_minus, _, _, owner = self._reduce(w, i)
        if n_minus == 0:
            return None
        classes, levels = bytearray(w.classes), list(w.levels)
        new = self._e[i][classes[owner]]
        if new is None:
            raise AssertionError(f"signature points at a column without an e_{i} arrow")
        classes[owner] = new
        levels[owner] -= i == 0
        out = self.normalize(YoungWall(w.ctype, w.highest, bytes(classes), tuple(levels)))
        if not self.is_reduced(out):
            raise AssertionError(f"E_{i} {w} = {out} is not reduced")
        return out

    # -- weights ---------------------------------------------------------------
    def added_blocks(self, w: YoungWall) -> tuple[int, int, int]:
        """(k_0, k_1, k_2): blocks of each color added to the ground-state wall."""
        k0 = sum(w.levels)
        classical = Weight()
        for c in w.classes:
            classical = classical + self._cl_wt[c] - self._cl_wt[self.ground]
        rest = -classical - k0 * self._alpha[0].classical
        k12 = root_coordinates(self.ctype, rest, (1, 2))
        if k12 is None:
            raise AssertionError(f"classical weight of {w} is not in the root lattice")
        k = (k0, *k12)
        if min(k) < 0:
            raise AssertionError(f"negative block count {k} for {w}")
        return k

    def weight(self, w: YoungWall) -> Weight:
        k = self.added_blocks(w)
        out = self.highest
        for i in INDEX_SET:
            out = out - k[i] * self._alpha[i]
        return out

    # -- paths -------------------------------------------------------------------
    def to_path(self, w: YoungWall) -> tuple[int, ...]:
        """Apply psi columnwise: perfect-crystal elements left to right."""
        return tuple(w.classes)

    def from_path(self, path) -> YoungWall:
        """Rebuild the reduced wall of an eventually-ground path.

        The path is given left to right as a finite sequence; everything
        further left is the ground element.  n-values are accumulated from
        the tail inward.
        """
        path = list(path)
        for b in path:
            if not 0 <= b < len(self.crystal):
                raise WallError(f"unknown element {b}")
        k = 0
        while k < len(path) and path[k] == self.ground:
            k += 1
        classes = bytes(path[k:])
        return YoungWall(self.ctype, self.highest, classes, self.levels_for(classes))

    # -- generation ---------------------------------------------------------------
    def generate_layers(self, depth: int) -> list[list[YoungWall]]:
        """Walls grouped by number of added blocks, each layer sorted by label."""
        if depth < 0:
            raise ValueError("depth must be non-negative")
        layers = [[self.ground_wall()]]
        for _ in range(depth):
            nxt = {}
            for w in layers[-1]:
                for i in INDEX_SET:
                    v = self.f(w, i)
                    if v is not None:
                        nxt.setdefault(v, None)
            layers.append(sorted(nxt, key=_sort_key))
        return layers


def _sort_key(w: YoungWall):
    return (len(w.classes), w.classes, w.levels)


@lru_cache(maxsize=None)
def wall_model(ctype: AffineType | str, highest: Weight) -> WallModel:
    return WallModel(ctype, highest.classical)


def ground_wall(ctype: AffineType | str, highest: Weight) -> YoungWall:
    return wall_model(as_type(ctype), highest.classical).ground_wall()


def enumerate_reduced_adjacent_pairs(ctype: AffineType | str,
                                     table: EnergyTable | None = None):
    """Every ordered pair of classes with its forced difference n_right - n_left."""
    ctype = as_type(ctype)
    table = energy_table(ctype) if table is None else table
    g = perfect_crystal(ctype).graph
    pairs = [(psi_inverse(ctype, x), psi_inverse(ctype, y), table(x, y)) for x in g for y in g]
    return len(pairs), pairs


def generate_crystal(ctype: AffineType | str, highest: Weight, depth: int,
                     check_weights: bool = True) -> CrystalGraph:
    """BFS of reduced walls up to ``depth`` added blocks, as a crystal graph.

    Weights are tracked incrementally (``wt(F_i Y) = wt(Y) - alpha_i``) and,
    with ``check_weights``, compared against the closed form on every wall.
    """
    model = wall_model(as_type(ctype), highest.classical)
    layers = model.generate_layers(depth)
    walls = [w for layer in layers for w in layer]
    index = {w: k for k, w in enumerate(walls)}
    weights: dict[YoungWall, Weight] = {walls[0]: model.highest}
    edges = []
    for layer in layers[:-1]:
        for w in layer:
            for i in INDEX_SET:
                v = model.f(w, i)
                if v is None:
                    continue
                edges.append((index[w], i, index[v]))
                wt = weights[w] - model._alpha[i]
                if weights.setdefault(v, wt) != wt:
                    raise AssertionError(f"incremental weight of {v} is path dependent")
    if check_weights:
        for w in walls:
            if model.weight(w) != weights[w]:
                raise AssertionError(f"weights disagree at {w}: {model.weight(w)} vs {weights[w]}")
    return CrystalGraph(model.ctype, [w.label for w in walls], edges,
                        [weights[w] for w in walls])


def depth_profile(g: CrystalGraph, highest: Weight) -> list[int]:
    """Number of elements per depth, depth read off the weight."""
    counts = Counter(depth_of(g.ctype, highest, g.weight_of(b)) for b in g)
    return [counts[d] for d in range(max(counts) + 1)] if counts else []


def depth_of(ctype: AffineType | str, highest: Weight, w: Weight) -> int:
    diff = highest.classical - w
    k0 = diff.delta
    rest = diff.classical - k0 * simple_root_as_weight(ctype, 0).classical
    k12 = root_coordinates(ctype, rest, (1, 2))
    if k12 is None:
        raise ValueError(f"{w} is not lambda minus a root-lattice element")
    return k0 + sum(k12)


def multiplicities(g: CrystalGraph, highest: Weight) -> list[tuple[int, Weight, int]]:
    """(depth, weight, multiplicity) rows sorted by depth then weight."""
    counts = Counter(g.weight_of(b) for b in g)
    rows = [(depth_of(g.ctype, highest, w), w, m) for w, m in counts.items()]
    return sorted(rows, key=lambda r: (r[0], tuple(-x for x in r[1].as_list())))
