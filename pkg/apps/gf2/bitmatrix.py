# apps/gf2/bitmatrix.py
"""
Dense bit-packed matrices over GF(2).

Rows are packed eight entries per byte (``np.packbits`` with little bit order), so row
operations in Gaussian elimination are vectorized XORs over a handful of bytes. The public
interface is entry-level; the packing is an implementation detail.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from apps.common.exceptions import DimensionMismatch, InsufficientRank, Singular

BitArray = npt.NDArray[np.uint8]


def _n_bytes(cols: int) -> int:
    return (cols + 7) // 8


def _pack(array: npt.ArrayLike) -> BitArray:
    bits = np.asarray(array, dtype=np.int64) & 1
    if bits.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got {bits.ndim} dimension(s)")
    return np.packbits(bits.astype(np.uint8), axis=1, bitorder="little")


def _bit_column(words: BitArray, j: int) -> BitArray:
    return (words[:, j >> 3] >> (j & 7)) & 1


def _lowest_bit(row: BitArray) -> int:
    nonzero = np.flatnonzero(row)
    if nonzero.size == 0:
        return -1
    byte = int(nonzero[0])
    value = int(row[byte])
    return byte * 8 + (value & -value).bit_length() - 1


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """A rows×cols matrix over GF(2) with packed row storage."""

    rows: int
    cols: int
    words: BitArray

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("BitMatrix dimensions must be non-negative.")
        if self.words.dtype != np.uint8 or self.words.shape != (self.rows, _n_bytes(self.cols)):
            raise ValueError(
                f"Packed storage {self.words.shape} does not match a {self.rows}x{self.cols} matrix."
            )
        words = self.words.copy()
        if self.cols % 8 and self.rows:
            # padding bits beyond the last column stay zero
            words[:, -1] &= np.uint8((1 << (self.cols % 8)) - 1)
        words.setflags(write=False)
        object.__setattr__(self, "words", words)

    # --- construction ---
    @classmethod
    def from_array(cls, array: npt.ArrayLike) -> BitMatrix:
        bits = np.asarray(array)
        if bits.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got {bits.ndim} dimension(s)")
        return cls(bits.shape[0], bits.shape[1], _pack(bits))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> BitMatrix:
        if not rows:
            return cls.zeros(0, cols or 0)
        return cls.from_array(np.array(rows, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, np.zeros((rows, _n_bytes(cols)), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_array(np.eye(n, dtype=np.uint8))

    # --- entry-level access ---
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return int((self.words[i, j >> 3] >> (j & 7)) & 1)

    def with_entry(self, i: int, j: int, value: int) -> BitMatrix:
        array = self.to_array()
        array[i, j] = value & 1
        return BitMatrix.from_array(array)

    def to_array(self) -> BitArray:
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        return np.unpackbits(self.words, axis=1, count=self.cols, bitorder="little")

    # --- structural helpers ---
    @property
    def T(self) -> BitMatrix:
        return BitMatrix.from_array(self.to_array().T)

    def take_rows(self, indices: Iterable[int]) -> BitMatrix:
        idx = np.fromiter(indices, dtype=np.int64)
        return BitMatrix(len(idx), self.cols, self.words[idx])

    def take_cols(self, indices: Iterable[int]) -> BitMatrix:
        idx = np.fromiter(indices, dtype=np.int64)
        return BitMatrix.from_array(self.to_array()[:, idx])

    def row_bits(self, i: int) -> BitArray:
        return self.to_array()[i] if self.cols else np.zeros(0, dtype=np.uint8)

    def is_zero(self) -> bool:
        return not self.words.any()

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return multiply(self, other)

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return BitMatrix(self.rows, self.cols, self.words ^ other.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.words, other.words))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def hstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    return BitMatrix.from_array(np.hstack([b.to_array() for b in blocks]))


def vstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    cols = {b.cols for b in blocks}
    if len(cols) != 1:
        raise DimensionMismatch(f"cannot stack blocks with column counts {sorted(cols)}")
    return BitMatrix(sum(b.rows for b in blocks), cols.pop(), np.vstack([b.words for b in blocks]))


# --- operations ---
def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product mod 2."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    # float64 products stay exact far beyond any dimension used here
    product = a.to_array().astype(np.float64) @ b.to_array().astype(np.float64)
    return BitMatrix.from_array(np.mod(product, 2).astype(np.uint8))


def _echelon(words: BitArray, n_cols: int, full: bool = False) -> tuple[BitArray, list[int]]:
    """
    Row-reduces ``words`` in place over its first ``n_cols`` columns.

    The pivot of each column is the first row at or below the current pivot row holding a one,
    columns are scanned left to right. With ``full`` the rows above each pivot are cleared too.
    """
    pivots: list[int] = []
    r = 0
    n_rows = words.shape[0]
    for j in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(_bit_column(words[r:], j))
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        hits = np.flatnonzero(_bit_column(words, j))
        hits = hits[hits != r] if full else hits[hits > r]
        if hits.size:
            words[hits] ^= words[r]
        pivots.append(j)
        r += 1
    return words, pivots


def rank(m: BitMatrix) -> int:
    """Row rank over GF(2)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _echelon(m.words.copy(), m.cols)
    return len(pivots)


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse of a square matrix; raises Singular when the rank is deficient."""
    if m.rows != m.cols:
        raise DimensionMismatch(f"cannot invert a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    augmented = _pack(np.hstack([m.to_array(), np.eye(n, dtype=np.uint8)]))
    words, pivots = _echelon(augmented, n, full=True)
    if len(pivots) < n:
        raise Singular(f"matrix has rank {len(pivots)} < {n}")
    return BitMatrix.from_array(np.unpackbits(words, axis=1, count=2 * n, bitorder="little")[:, n:])


def column_reduce(m: BitMatrix) -> tuple[BitMatrix, BitMatrix]:
    """
    Gaussian elimination among the columns of ``m``.

    Returns ``(reduced, r)`` with ``reduced = m·r``, ``r`` invertible and ``reduced`` in column
    echelon form, so its first ``rank(m)`` columns are nonzero and the rest vanish. Rows of ``m``
    are scanned top to bottom and each takes the leftmost remaining column with a one as pivot.
    """
    rows, cols = m.shape
    augmented = _pack(np.hstack([m.to_array().T, np.eye(cols, dtype=np.uint8)]))
    words, _ = _echelon(augmented, rows)
    unpacked = np.unpackbits(words, axis=1, count=rows + cols, bitorder="little")
    reduced = BitMatrix.from_array(unpacked[:, :rows].T)
    r = BitMatrix.from_array(unpacked[:, rows:].T)
    return reduced, r


def independent_rows(m: BitMatrix, k: int) -> list[int]:
    """
    Greedy smallest-index-first selection of ``k`` linearly independent rows.
    Raises InsufficientRank when fewer than ``k`` exist.
    """
    chosen: list[int] = []
    if k <= 0:
        return chosen
    pivots: list[int] = []
    basis: list[BitArray] = []
    for i in range(m.rows):
        row = m.words[i].copy()
        for p, vector in zip(pivots, basis):
            if (row[p >> 3] >> (p & 7)) & 1:
                row ^= vector
        pivot = _lowest_bit(row)
        if pivot < 0:
            continue
        pivots.append(pivot)
        basis.append(row)
        chosen.append(i)
        if len(chosen) == k:
            return chosen
    raise InsufficientRank(f"only {len(chosen)} independent rows, {k} requested")


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of {v : m·v = 0} as the columns of a cols×(cols − rank) matrix."""
    rows, cols = m.shape
    if rows == 0:
        return BitMatrix.identity(cols)
    words, pivots = _echelon(m.words.copy(), cols, full=True)
    reduced = np.unpackbits(words, axis=1, count=cols, bitorder="little")
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    basis = np.zeros((cols, len(free)), dtype=np.uint8)
    basis[free, np.arange(len(free))] = 1
    basis[pivots, :] = reduced[: len(pivots)][:, free]
    return BitMatrix.from_array(basis)

