"""
field.py – Exact dense linear algebra over a prime field.

Entries are Python ints in [0, p) held in numpy object arrays, so
products never overflow; row operations are vectorised with np.outer.
The default modulus is the Mersenne prime 2^61 - 1 (settings.MODULUS).

A field scalar is a plain int; a field vector is a tuple of ints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from errors import GraphInputError, NoStressError
from settings import MODULUS

logger = logging.getLogger(__name__)

FieldVector = tuple[int, ...]


# ══════════════════════════════════════════════════════════
#  Matrix type
# ══════════════════════════════════════════════════════════

@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """rows × cols matrix over GF(modulus); never mutated after construction."""

    rows: int
    cols: int
    entries: np.ndarray          # object dtype, shape (rows, cols)
    modulus: int = MODULUS

    def __post_init__(self):
        if self.entries.shape != (self.rows, self.cols):
            raise GraphInputError(
                f"entries shape {self.entries.shape} does not match {self.rows}x{self.cols}"
            )
        self.entries.setflags(write=False)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None,
                  modulus: int = MODULUS) -> FieldMatrix:
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        arr = np.zeros((len(rows), width), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise GraphInputError(f"row {i} has {len(row)} entries, expected {width}")
            arr[i, :] = [int(x) % modulus for x in row]
        return cls(len(rows), width, arr, modulus)

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int = MODULUS) -> FieldMatrix:
        return cls(rows, cols, np.zeros((rows, cols), dtype=object), modulus)

    @classmethod
    def identity(cls, size: int, modulus: int = MODULUS) -> FieldMatrix:
        arr = np.zeros((size, size), dtype=object)
        for i in range(size):
            arr[i, i] = 1
        return cls(size, size, arr, modulus)

    def to_rows(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def row(self, i: int) -> FieldVector:
        return tuple(int(x) for x in self.entries[i])

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def select_columns(self, columns: Sequence[int]) -> FieldMatrix:
        cols = list(columns)
        return FieldMatrix(self.rows, len(cols), self.entries[:, cols].copy(), self.modulus)

    def select_rows(self, rows: Sequence[int]) -> FieldMatrix:
        picked = list(rows)
        return FieldMatrix(len(picked), self.cols, self.entries[picked, :].copy(), self.modulus)


def transpose(m: FieldMatrix) -> FieldMatrix:
    return FieldMatrix(m.cols, m.rows, m.entries.T.copy(), m.modulus)


def matmul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    if a.cols != b.rows:
        raise GraphInputError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return FieldMatrix.zeros(a.rows, b.cols, a.modulus)
    return FieldMatrix(a.rows, b.cols, a.entries.dot(b.entries) % a.modulus, a.modulus)


def apply(m: FieldMatrix, vector: Sequence[int]) -> FieldVector:
    """m · v."""
    if len(vector) != m.cols:
        raise GraphInputError(f"vector of length {len(vector)} for {m.cols} columns")
    if m.rows == 0:
        return ()
    if m.cols == 0:
        return (0,) * m.rows
    v = np.asarray([int(x) for x in vector], dtype=object)
    return tuple(int(x) for x in m.entries.dot(v) % m.modulus)


# ══════════════════════════════════════════════════════════
#  Elimination
# ══════════════════════════════════════════════════════════

def _eliminate(m: FieldMatrix, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """Gaussian elimination; pivots are the first nonzero entry per column.

    With *reduced* the result is in reduced row echelon form, otherwise
    only the entries below each pivot are cleared.
    """
    p = m.modulus
    a = m.entries.copy()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy() if reduced else np.concatenate([np.zeros(r + 1, dtype=object), a[r + 1:, c]])
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def row_reduce(m: FieldMatrix) -> tuple[FieldMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a, pivots = _eliminate(m, reduced=True)
    return FieldMatrix(m.rows, m.cols, a, m.modulus), pivots


def rank(m: FieldMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # eliminate along the shorter side
    target = m if m.rows >= m.cols else transpose(m)
    _, pivots = _eliminate(target, reduced=False)
    return len(pivots)


def kernel_basis(m: FieldMatrix) -> list[FieldVector]:
    """Basis of {v : m·v = 0}, one vector per free column."""
    return null_space(m)[0]


def null_space(m: FieldMatrix) -> tuple[list[FieldVector], list[int]]:
    """Kernel basis together with the pivot columns of m.

    The vector for free column f has a 1 in position f and is supported
    on f plus pivot columns only. The pivot columns form the greedy
    (leftmost) column basis of m.
    """
    p = m.modulus
    if m.cols == 0:
        return [], []
    if m.rows == 0:
        return [tuple(1 if i == j else 0 for i in range(m.cols)) for j in range(m.cols)], []
    rref, pivots = _eliminate(m, reduced=True)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        vec = [0] * m.cols
        vec[f] = 1
        for i, c in enumerate(pivots):
            vec[c] = (-int(rref[i, f])) % p
        basis.append(tuple(vec))
    return basis, pivots


def field_rng(seed: int) -> np.random.Generator:
    """Counter-based generator (Philox) keyed by a non-negative seed."""
    return np.random.Generator(np.random.Philox(int(seed)))


def _combine(vectors: Sequence[FieldVector], coefficients: Sequence[int], modulus: int) -> FieldVector:
    if not vectors:
        return ()
    acc = np.zeros(len(vectors[0]), dtype=object)
    for vec, coef in zip(vectors, coefficients):
        acc = (acc + np.asarray(vec, dtype=object) * int(coef)) % modulus
    return tuple(int(x) for x in acc)


def random_kernel_element(m: FieldMatrix, seed: int) -> FieldVector:
    """Uniform random nonzero element of ker(m), deterministic in *seed*."""
    basis = kernel_basis(m)
    if not basis:
        raise NoStressError("the kernel is trivial: no nonzero stress exists")
    rng = field_rng(seed)
    while True:
        coefficients = [int(x) for x in rng.integers(0, m.modulus, size=len(basis), dtype=np.int64)]
        vec = _combine(basis, coefficients, m.modulus)
        if any(vec):
            return vec
        logger.debug("zero kernel combination drawn, redrawing")
