"""Commutative semirings and dense matrices over them.

Everything downstream (automata, diagram evaluation, path counting) runs
through the two instances BOOL and NAT.  No operation here ever subtracts,
so the code is valid over any commutative semiring.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable

from .errors import ShapeError


@dataclass(frozen=True)
class Semiring:
    """A commutative semiring (add, mul, 0, 1) on plain Python ints."""

    name: str
    zero: int
    one: int
    add: Callable[[int, int], int]
    mul: Callable[[int, int], int]

    def __repr__(self):
        return f"Semiring({self.name})"


#: The Boolean semiring {0, 1 | 1 + 1 = 1}: add is OR, mul is AND.
BOOL = Semiring("bool", 0, 1, operator.or_, operator.and_)

#: The natural numbers under ordinary + and *; used for path counting.
NAT = Semiring("nat", 0, 1, operator.add, operator.mul)


@dataclass(frozen=True)
class Mat:
    """Dense matrix over a semiring, entries stored row-major.

    Values are immutable after construction and safe to share across
    threads.  Multiplication over BOOL packs rows into int bitmasks, so
    desk-scale dimensions (a few thousand) stay cheap.
    """

    ring: Semiring
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative dimensions {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols}"
                f" entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, ring, rows_data) -> Mat:
        rows_data = [tuple(r) for r in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if rows_data else 0
        if any(len(r) != ncols for r in rows_data):
            raise ShapeError("ragged rows")
        return cls(ring, nrows, ncols, tuple(v for r in rows_data for v in r))

    def row(self, i) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def __add__(self, other: Mat) -> Mat:
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        add = self.ring.add
        ent = tuple(add(a, b) for a, b in zip(self.entries, other.entries))
        return Mat(self.ring, self.rows, self.cols, ent)

    def __matmul__(self, other: Mat) -> Mat:
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        if self.ring is BOOL:
            return self._matmul_bool(other)
        return self._matmul_generic(other)

    def _matmul_bool(self, other: Mat) -> Mat:
        k, c = self.cols, other.cols
        # pack each row of the right factor into one bitmask
        masks = []
        ent = other.entries
        for t in range(k):
            m = 0
            base = t * c
            for j in range(c):
                if ent[base + j]:
                    m |= 1 << j
            masks.append(m)
        out = []
        mine = self.entries
        for i in range(self.rows):
            base = i * k
            acc = 0
            for t in range(k):
                if mine[base + t]:
                    acc |= masks[t]
            out.extend((acc >> j) & 1 for j in range(c))
        return Mat(BOOL, self.rows, c, tuple(out))

    def _matmul_generic(self, other: Mat) -> Mat:
        k, c = self.cols, other.cols
        ring = self.ring
        zero, add, mul = ring.zero, ring.add, ring.mul
        out = []
        for i in range(self.rows):
            arow = self.row(i)
            for j in range(c):
                acc = zero
                for t in range(k):
                    x = arow[t]
                    if x != zero:
                        acc = add(acc, mul(x, other.entries[t * c + j]))
                out.append(acc)
        return Mat(ring, self.rows, c, tuple(out))

    def transpose(self) -> Mat:
        ent = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return Mat(self.ring, self.cols, self.rows, ent)

    @property
    def T(self) -> Mat:
        return self.transpose()

    def trace(self):
        if self.rows != self.cols:
            raise ShapeError(f"trace of non-square {self.rows}x{self.cols}")
        acc = self.ring.zero
        for i in range(self.rows):
            acc = self.ring.add(acc, self.entries[i * self.cols + i])
        return acc

    def _check_ring(self, other: Mat):
        if self.ring is not other.ring:
            raise ShapeError(f"semiring mismatch: {self.ring} vs {other.ring}")

    def __repr__(self):
        return f"Mat({self.ring.name}, {self.rows}x{self.cols}, {self.to_rows()})"


def identity(ring: Semiring, n: int) -> Mat:
    ent = tuple(
        ring.one if i == j else ring.zero for i in range(n) for j in range(n)
    )
    return Mat(ring, n, n, ent)


def zeros(ring: Semiring, rows: int, cols: int) -> Mat:
    return Mat(ring, rows, cols, (ring.zero,) * (rows * cols))


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, indices row-major on (left, right) factor pairs."""
    a._check_ring(b)
    ring = a.ring
    mul, zero, one = ring.mul, ring.zero, ring.one
    out = []
    for i1 in range(a.rows):
        arow = a.row(i1)
        for i2 in range(b.rows):
            brow = b.row(i2)
            for x in arow:
                if x == zero:
                    out.extend((zero,) * b.cols)
                elif x == one:
                    out.extend(brow)
                else:
                    out.extend(mul(x, y) for y in brow)
    return Mat(ring, a.rows * b.rows, a.cols * b.cols, tuple(out))
