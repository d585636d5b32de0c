"""Affine Cartan data for D4(3) and G2(1) and weight-lattice arithmetic.

Weights are stored over the fundamental weights Lambda_0, Lambda_1, Lambda_2
together with an integer coefficient of the null root delta.  Every weight
that shows up in the Young wall model has the form
``lambda - sum_i k_i alpha_i`` with integer ``k_i``, so no further basis
vectors are needed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

INDEX_SET = (0, 1, 2)


class AffineType(enum.Enum):
    D4_3 = "d4_3"
    G2_1 = "g2_1"

    def __str__(self) -> str:
        return self.value


# a_ij = <h_i, alpha_j>, row i, column j.
_CARTAN = {
    AffineType.D4_3: ((2, -1, 0), (-1, 2, -3), (0, -1, 2)),
    AffineType.G2_1: ((2, -1, 0), (-1, 2, -1), (0, -3, 2)),
}

# Printed values, kept only to cross-check the computed kernels.
_PRINTED_DELTA = {AffineType.D4_3: (1, 2, 1), AffineType.G2_1: (1, 2, 3)}
_PRINTED_CENTRAL = {AffineType.D4_3: (1, 2, 3), AffineType.G2_1: (1, 2, 1)}


class CartanDataError(ValueError):
    """Raised when Cartan matrix data does not define an affine type."""


def as_type(value: AffineType | str) -> AffineType:
    if isinstance(value, AffineType):
        return value
    try:
        return AffineType(str(value).lower())
    except ValueError:
        raise ValueError(f"unknown affine type {value!r}; expected one of "
                         f"{[t.value for t in AffineType]}") from None


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        a = self.entries
        if len(a) != 3 or any(len(row) != 3 for row in a):
            raise CartanDataError("Cartan matrix must be 3x3")
        for i, j in product(INDEX_SET, INDEX_SET):
            if i == j and a[i][j] != 2:
                raise CartanDataError(f"diagonal entry a_{i}{j} = {a[i][j]} != 2")
            if i != j:
                if a[i][j] > 0:
                    raise CartanDataError(f"off-diagonal entry a_{i}{j} > 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise CartanDataError(f"a_{i}{j} and a_{j}{i} disagree on vanishing")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> CartanMatrix:
        return CartanMatrix(tuple(zip(*self.entries)))

    def apply(self, v) -> tuple[int, int, int]:
        return tuple(sum(row[j] * v[j] for j in INDEX_SET) for row in self.entries)


def cartan_matrix(ctype: AffineType | str) -> CartanMatrix:
    return CartanMatrix(_CARTAN[as_type(ctype)])


def _kernel_generator(m: CartanMatrix) -> tuple[int, int, int]:
    rows = m.entries
    # Kernel of a rank-2 3x3 matrix: cross product of two independent rows.
    cand = None
    for r, s in ((0, 1), (0, 2), (1, 2)):
        a, b = rows[r], rows[s]
        v = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
        if any(v):
            cand = v
            break
    if cand is None or any(m.apply(cand)):
        raise CartanDataError("kernel is not one-dimensional")
    g = gcd(*cand)
    v = tuple(x // g for x in cand)
    if v[0] < 0:
        v = tuple(-x for x in v)
    if any(x <= 0 for x in v) or v[0] != 1:
        raise CartanDataError(f"kernel generator {v} is not positive with first entry 1")
    return v


@lru_cache(maxsize=None)
def null_root(ctype: AffineType | str) -> tuple[int, int, int]:
    """Coefficients of delta over (alpha_0, alpha_1, alpha_2)."""
    ctype = as_type(ctype)
    delta = _kernel_generator(cartan_matrix(ctype))
    if delta != _PRINTED_DELTA[ctype]:
        raise CartanDataError(f"computed delta {delta} != printed {_PRINTED_DELTA[ctype]}")
    return delta


@lru_cache(maxsize=None)
def central_element(ctype: AffineType | str) -> tuple[int, int, int]:
    """Coefficients of c over (h_0, h_1, h_2)."""
    ctype = as_type(ctype)
    c = _kernel_generator(cartan_matrix(ctype).transpose())
    if c != _PRINTED_CENTRAL[ctype]:
        raise CartanDataError(f"computed c {c} != printed {_PRINTED_CENTRAL[ctype]}")
    return c


@dataclass(frozen=True, order=True)
class Weight:
    """An affine weight ``sum_i m_i Lambda_i + d delta``."""

    coeffs: tuple[int, int, int] = (0, 0, 0)
    delta: int = 0

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                      self.delta + other.delta)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
                      self.delta - other.delta)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coeffs), -self.delta)

    def __mul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coeffs), k * self.delta)

    __rmul__ = __mul__

    def pair(self, i: int) -> int:
        """<h_i, self>; delta pairs to zero with every coroot."""
        return self.coeffs[i]

    @property
    def classical(self) -> Weight:
        return Weight(self.coeffs, 0)

    def as_list(self) -> list[int]:
        return [*self.coeffs, self.delta]

    def __str__(self) -> str:
        parts = [f"{m}L{i}" for i, m in enumerate(self.coeffs) if m]
        if self.delta:
            parts.append(f"{self.delta}d")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


ZERO = Weight()


def fundamental_weight(i: int) -> Weight:
    if i not in INDEX_SET:
        raise IndexError(f"index {i} not in {INDEX_SET}")
    return Weight(tuple(int(j == i) for j in INDEX_SET))


def simple_root_as_weight(ctype: AffineType | str, i: int) -> Weight:
    """alpha_i = sum_j a_ji Lambda_j, plus delta when i = 0."""
    if i not in INDEX_SET:
        raise IndexError(f"index {i} not in {INDEX_SET}")
    a = cartan_matrix(ctype)
    return Weight(tuple(a[j, i] for j in INDEX_SET), int(i == 0))


def root_to_weight(ctype: AffineType | str, k) -> Weight:
    """Map sum_i k_i alpha_i to a Weight."""
    w = ZERO
    for i in INDEX_SET:
        w = w + k[i] * simple_root_as_weight(ctype, i)
    return w


def level(ctype: AffineType | str, w: Weight) -> int:
    c = central_element(ctype)
    return sum(ci * mi for ci, mi in zip(c, w.coeffs))


def dominant_weights(ctype: AffineType | str, lev: int = 1) -> list[Weight]:
    """All classical dominant integral weights of the given level."""
    c = central_element(ctype)
    out = []
    for m in product(*(range(lev // ci + 1) for ci in c)):
        if sum(ci * mi for ci, mi in zip(c, m)) == lev:
            out.append(Weight(tuple(m)))
    return sorted(out, key=lambda w: tuple(reversed(w.coeffs)))


def parse_weight(name: str) -> Weight:
    """Accept ``L0``, ``L2``, ``Lambda_2``."""
    s = name.strip().lower().replace("lambda", "l").replace("_", "")
    if len(s) == 2 and s[0] == "l" and s[1].isdigit():
        return fundamental_weight(int(s[1]))
    raise ValueError(f"cannot parse weight {name!r}; use L0, L1 or L2")


def root_coordinates(ctype: AffineType | str, w: Weight,
                     indices=(1, 2)) -> tuple[int, ...] | None:
    """Integers ``k`` with ``cl(w) = sum_j k_j cl(alpha_j)`` over ``indices``, or None."""
    import numpy as np

    cols = [simple_root_as_weight(ctype, j).coeffs for j in indices]
    mat = np.array(cols, dtype=float).T
    sol, *_ = np.linalg.lstsq(mat, np.array(w.coeffs, dtype=float), rcond=None)
    k = tuple(int(round(x)) for x in sol)
    back = Weight(tuple(sum(kj * col[r] for kj, col in zip(k, cols)) for r in INDEX_SET))
    return k if back.coeffs == w.coeffs else None
