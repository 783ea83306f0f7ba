"""Matrices over L_n with the star-transpose involution.

Entries are carried either as PForm (coefficient-one sums, closed under the
product when every input is in P-form) or as normal-form AlgebraElement.
The P-form path never normalizes, which is what keeps the isomorphism
pipeline inside the unitary P-matrices; normal forms are computed on demand
for equality and unitarity tests.
"""

from __future__ import annotations

import json
from typing import Union

from . import leavitt
from .leavitt import AlgebraElement, PForm, Monomial, normalize

Entry = Union[PForm, AlgebraElement]


class NotUnitaryError(ValueError):
    """Raised when a matrix required to be unitary is not."""


class LMatrix:
    """A dense rows x cols matrix over L_n."""

    __slots__ = ("rows", "cols", "n", "entries")

    def __init__(self, rows: int, cols: int, n: int, entries):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        grid = tuple(tuple(row) for row in entries)
        if len(grid) != rows or any(len(row) != cols for row in grid):
            raise ValueError("entry grid does not match %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.n = n
        self.entries = grid

    def __getitem__(self, ij) -> Entry:
        i, j = ij
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_pform(self) -> bool:
        return all(isinstance(e, PForm) for row in self.entries for e in row)

    def nf_entry(self, i: int, j: int) -> AlgebraElement:
        return normalize(self.entries[i][j], self.n)

    def nf(self) -> tuple:
        """Grid of normal forms; the canonical value of the matrix."""
        return tuple(tuple(normalize(e, self.n) for e in row)
                     for row in self.entries)

    def __eq__(self, other) -> bool:
        """Normal-form equality (representation-independent)."""
        return (isinstance(other, LMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.n == other.n
                and self.nf() == other.nf())

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.n, self.nf()))

    def __repr__(self) -> str:
        return "LMatrix(%dx%d, n=%d)" % (self.rows, self.cols, self.n)

    def to_json(self) -> str:
        return json.dumps({
            "rows": self.rows,
            "cols": self.cols,
            "n": self.n,
            "entries": [[e.text() for e in row] for row in self.entries],
        })


def identity(size: int, n: int) -> LMatrix:
    return LMatrix(size, size, n,
                   [[leavitt.PFORM_ONE if i == j else leavitt.PFORM_ZERO
                     for j in range(size)] for i in range(size)])


def from_pform_grid(grid, n: int) -> LMatrix:
    rows = len(grid)
    cols = len(grid[0])
    return LMatrix(rows, cols, n, grid)


def mat_mul(A: LMatrix, B: LMatrix) -> LMatrix:
    """Matrix product; stays in P-form whenever both factors are."""
    if A.n != B.n:
        raise ValueError("mismatched arities %d vs %d" % (A.n, B.n))
    if A.cols != B.rows:
        raise ValueError("dimension mismatch: %dx%d times %dx%d"
                         % (A.rows, A.cols, B.rows, B.cols))
    if A.is_pform() and B.is_pform():
        grid = []
        for i in range(A.rows):
            row = []
            for j in range(B.cols):
                pairs = []
                for k in range(A.cols):
                    a = A.entries[i][k]
                    b = B.entries[k][j]
                    if not a.pairs or not b.pairs:
                        continue
                    for ma in a.pairs:
                        for mb in b.pairs:
                            m = leavitt.mono_mul(ma, mb)
                            if m is not None:
                                pairs.append(m)
                row.append(PForm(pairs))
            grid.append(row)
        return LMatrix(A.rows, B.cols, A.n, grid)
    grid = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = leavitt.zero(A.n)
            for k in range(A.cols):
                acc = leavitt.add(acc, leavitt.mul(A.nf_entry(i, k),
                                                   B.nf_entry(k, j)))
            row.append(acc)
        grid.append(row)
    return LMatrix(A.rows, B.cols, A.n, grid)


def mat_star(A: LMatrix) -> LMatrix:
    """Transpose with entrywise star."""
    grid = []
    for j in range(A.cols):
        row = []
        for i in range(A.rows):
            e = A.entries[i][j]
            row.append(e.star() if isinstance(e, PForm) else leavitt.star(e))
        grid.append(row)
    return LMatrix(A.cols, A.rows, A.n, grid)


def is_identity(A: LMatrix) -> bool:
    if not A.is_square():
        return False
    one = leavitt.one(A.n)
    zero = leavitt.zero(A.n)
    for i in range(A.rows):
        for j in range(A.cols):
            if A.nf_entry(i, j) != (one if i == j else zero):
                return False
    return True


def is_unitary(X: LMatrix) -> bool:
    """XX* = X*X = I under normal-form equality."""
    if not X.is_square():
        return False
    Xs = mat_star(X)
    return is_identity(mat_mul(X, Xs)) and is_identity(mat_mul(Xs, X))


def is_pform_matrix(X: LMatrix) -> bool:
    """True iff every entry is carried as a coefficient-one P-form."""
    return X.is_pform()


class UnitaryPMatrix:
    """A square P-form matrix verified unitary at construction."""

    __slots__ = ("base",)

    def __init__(self, base: LMatrix):
        if not base.is_square():
            raise NotUnitaryError("matrix is not square")
        if not base.is_pform():
            raise NotUnitaryError("matrix entries are not in P-form")
        if not is_unitary(base):
            raise NotUnitaryError("XX* = X*X = I fails")
        self.base = base

    @property
    def size(self) -> int:
        return self.base.rows

    @property
    def n(self) -> int:
        return self.base.n

    def star(self) -> "UnitaryPMatrix":
        out = UnitaryPMatrix.__new__(UnitaryPMatrix)
        out.base = mat_star(self.base)
        return out

    def __mul__(self, other: "UnitaryPMatrix") -> "UnitaryPMatrix":
        # Product of unitaries is unitary; skip re-verification.
        out = UnitaryPMatrix.__new__(UnitaryPMatrix)
        out.base = mat_mul(self.base, other.base)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitaryPMatrix) and self.base == other.base

    def __hash__(self) -> int:
        return hash(self.base)

    def __repr__(self) -> str:
        return "UnitaryPMatrix(%dx%d, n=%d)" % (self.size, self.size, self.n)
