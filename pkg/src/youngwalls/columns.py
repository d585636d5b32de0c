"""Young-column classes, their identification with perfect-crystal elements,
signatures, and the half-block ledger of the D4(3) column pattern.

Columns are handled through their equivalence classes.  A class together
with the number ``n`` of 0-blocks added above the ground column is all the
wall crystal needs.  For D4(3) the number of added half-blocks also
follows from the class and ``n`` via the period-8 color ledger below.
G2(1) classes are abstract: signatures are the string statistics of the
matching element of B'1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import INDEX_SET, AffineType, Weight, as_type, null_root, simple_root_as_weight
from .crystal import CrystalGraph
from .energy import EnergyTable, energy_table
from .perfect import perfect_crystal


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ColumnClass:
    ctype: AffineType
    label: str

    def __str__(self) -> str:
        return self.label


def _prefix(ctype: AffineType) -> tuple[str, str]:
    return ("u_", "c_") if ctype is AffineType.D4_3 else ("v_", "c'_")


def class_label(ctype: AffineType | str, element_label: str) -> str:
    src, dst = _prefix(as_type(ctype))
    return dst + element_label[len(src):]


def column_classes(ctype: AffineType | str) -> list[ColumnClass]:
    ctype = as_type(ctype)
    return [ColumnClass(ctype, class_label(ctype, lab)) for lab in perfect_crystal(ctype).graph.labels]


def psi(c: ColumnClass) -> int:
    """Index-preserving bijection c_i -> u_i (D4(3)), c'_i -> v_i (G2(1))."""
    src, dst = _prefix(c.ctype)
    return perfect_crystal(c.ctype).graph.index(src + c.label[len(dst):])


def psi_inverse(ctype: AffineType | str, b: int) -> ColumnClass:
    ctype = as_type(ctype)
    return ColumnClass(ctype, class_label(ctype, perfect_crystal(ctype).graph.label(b)))


def column_class(ctype: AffineType | str, label: str) -> ColumnClass:
    c = ColumnClass(as_type(ctype), label)
    psi(c)
    return c


def signature(c: ColumnClass, i: int) -> tuple[int, int]:
    """(removable count, admissible count) of the i-signature of a column."""
    g = perfect_crystal(c.ctype).graph
    b = psi(c)
    return g.epsilon(b, i), g.phi(b, i)


# Printed D4(3) signatures (sign_0, sign_1, sign_2) for each class.
PRINTED_SIGNATURES = {
    "c_1": ((2, 0), (0, 1), (0, 0)),
    "c_2": ((1, 0), (1, 0), (0, 1)),
    "c_3": ((1, 0), (0, 2), (1, 0)),
    "c_0": ((0, 0), (1, 1), (0, 0)),
    "c_3b": ((0, 1), (2, 0), (0, 1)),
    "c_2b": ((0, 1), (0, 1), (1, 0)),
    "c_1b": ((0, 2), (1, 0), (0, 0)),
    "c_phi": ((1, 1), (0, 0), (0, 0)),
}


@dataclass(frozen=True)
class BlockLedgerD4:
    """Half-block bookkeeping of the D4(3) column pattern above the ground column."""

    pattern_colors: tuple[int, ...] = (0, 1, 2, 1, 1, 2, 1, 0)
    chain: tuple[str, ...] = ("c_phi", "c_1", "c_2", "c_3", "c_0", "c_3b", "c_2b", "c_1b")

    def __post_init__(self):
        counts = [self.pattern_colors.count(i) for i in INDEX_SET]
        delta = null_root(AffineType.D4_3)
        if counts != [2 * d for d in delta]:
            raise AssertionError(f"period color counts {counts} are not 2*delta")

    @property
    def base_blocks(self) -> dict[str, int]:
        return {lab: k for k, lab in enumerate(self.chain)}

    @property
    def base_n(self) -> dict[str, int]:
        out, n = {}, 0
        for lab, color in zip(self.chain, (None,) + self.pattern_colors):
            n += color == 0
            out[lab] = n
        return out

    @property
    def blocks_per_delta(self) -> int:
        return sum(null_root(AffineType.D4_3))


LEDGER = BlockLedgerD4()


def _require_d4(ctype: AffineType) -> None:
    if ctype is not AffineType.D4_3:
        raise UnsupportedType("block counts are only modeled for D4(3)")


def chain_of_classes(ctype: AffineType | str) -> list[tuple[ColumnClass, int, ColumnClass]]:
    """The cyclic chain of D4(3) classes, each step adding one block of a color."""
    ctype = as_type(ctype)
    _require_d4(ctype)
    labels = LEDGER.chain + LEDGER.chain[:1]
    return [(ColumnClass(ctype, a), color, ColumnClass(ctype, b))
            for a, color, b in zip(labels, LEDGER.pattern_colors, labels[1:])]


@dataclass(frozen=True, order=True)
class ColumnState:
    cls: ColumnClass
    n: int

    def __str__(self) -> str:
        return f"{self.cls.label}({self.n})"


def blocks_added(state: ColumnState) -> int:
    """Number of half-blocks added above the ground column (D4(3) only)."""
    _require_d4(state.cls.ctype)
    lab = state.cls.label
    base_n = LEDGER.base_n[lab]
    if state.n < base_n:
        raise ValueError(f"no column of class {lab} with {state.n} zero-blocks above the ground")
    return LEDGER.base_blocks[lab] + LEDGER.blocks_per_delta * (state.n - base_n)


def adjacency_delta_blocks(left: ColumnClass, right: ColumnClass,
                           table: EnergyTable | None = None, n_left: int = 1) -> int:
    """|right| - |left| for reduced adjacent columns (left, right)."""
    _require_d4(left.ctype)
    table = energy_table(left.ctype) if table is None else table
    h = table(psi(left), psi(right))
    return (blocks_added(ColumnState(right, n_left + h))
            - blocks_added(ColumnState(left, n_left)))


def _weight_from_signature(sig) -> Weight:
    return Weight(tuple(a - r for r, a in sig))


@lru_cache(maxsize=None)
def column_graph(ctype: AffineType | str) -> CrystalGraph:
    """Crystal graph on column classes.

    For D4(3) it is assembled from the ledger chain plus the printed
    signatures: any arrow still missing is the unique weight-compatible
    pairing of an unused admissible slot with an unused removable block.
    G2(1) classes are abstract, so their graph is B'1 relabelled.
    """
    ctype = as_type(ctype)
    if ctype is AffineType.G2_1:
        return perfect_crystal(ctype).graph.relabel(lambda lab: class_label(ctype, lab))
    labels = list(PRINTED_SIGNATURES)
    index = {lab: k for k, lab in enumerate(labels)}
    edges = {(index[a.label], color, index[b.label]) for a, color, b in chain_of_classes(ctype)}
    wt = {lab: _weight_from_signature(sig) for lab, sig in PRINTED_SIGNATURES.items()}
    for i in INDEX_SET:
        alpha = simple_root_as_weight(ctype, i).classical
        while True:
            g = CrystalGraph(ctype, labels, sorted(edges))
            sources = [x for x in labels
                       if g.f(index[x], i) is None and PRINTED_SIGNATURES[x][i][1] > 0]
            targets = [y for y in labels
                       if g.e(index[y], i) is None and PRINTED_SIGNATURES[y][i][0] > 0]
            added = False
            for x in sources:
                cands = [y for y in targets if wt[y] == wt[x] - alpha]
                if len(cands) != 1:
                    raise AssertionError(f"arrow f_{i} from {x} is not determined: {cands}")
                edges.add((index[x], i, index[cands[0]]))
                targets.remove(cands[0])
                added = True
            if not added:
                break
    g = CrystalGraph(ctype, labels, sorted(edges))
    for lab, sig in PRINTED_SIGNATURES.items():
        stats = tuple((g.epsilon(index[lab], i), g.phi(index[lab], i)) for i in INDEX_SET)
        if stats != sig:
            raise AssertionError(f"column graph strings at {lab} give {stats}, printed {sig}")
    return g
