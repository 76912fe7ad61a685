"""Exact rational dense linear algebra.

Everything here works over `fractions.Fraction`; there is no floating point
fallback anywhere.  Rank, kernel and determinant computations therefore give
certified answers, which the generic-rank machinery in :mod:`.matroid` relies
on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction

__all__ = ["Q", "QMatrix", "qvec", "dot", "cross"]


def qvec(entries: Iterable) -> list[Fraction]:
    """Coerce an iterable of numbers into a list of Fractions."""
    return [Q(e) for e in entries]


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dot: length mismatch {len(a)} != {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Q(0))


def cross(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Cross product of two 3-vectors."""
    if len(a) != 3 or len(b) != 3:
        raise ValueError("cross: expected 3-vectors")
    return [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]


class QMatrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable):
        self.rows = rows
        self.cols = cols
        self._data = [Q(e) for e in data]
        if len(self._data) != rows * cols:
            raise ValueError(
                f"QMatrix: {rows}x{cols} needs {rows * cols} entries, got {len(self._data)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("QMatrix.from_rows: ragged input")
            flat.extend(r)
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [Q(1) if i == j else Q(0) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [Q(0)] * (rows * cols))

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return self._data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> list[Fraction]:
        return self._data[j :: self.cols][: self.rows] if self.cols else []

    def row_list(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        data = [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return QMatrix(self.cols, self.rows, data)

    def matvec(self, v: Sequence[Fraction]) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("matvec: dimension mismatch")
        return [dot(self.row(i), v) for i in range(self.rows)]

    def matmul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("matmul: dimension mismatch")
        ot = other.transpose()
        data = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                data.append(dot(ri, ot.row(j)))
        return QMatrix(self.rows, other.cols, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (
            self.rows == other.rows and self.cols == other.cols and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._data)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"QMatrix({self.rows}x{self.cols}: {body})"

    # -- elimination ---------------------------------------------------

    def _rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices).

        Pivot choice is the first nonzero entry in column order, so the
        result (and everything derived from it) is deterministic.
        """
        m = [self.row(i) for i in range(self.rows)]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            sel = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if sel is None:
                continue
            m[r], m[sel] = m[sel], m[r]
            inv = 1 / m[r][c]
            m[r] = [e * inv for e in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self) -> int:
        """Exact rank over the rationals."""
        if self.rows == 0 or self.cols == 0:
            return 0
        if all(e.denominator == 1 for e in self._data):
            return self._rank_bareiss()
        return len(self._rref()[1])

    def _rank_bareiss(self) -> int:
        """Fraction-free elimination for integer matrices.

        Avoids gcd normalization of Fraction arithmetic; pivoting is still
        first-nonzero in column order.
        """
        m = [[e.numerator for e in self.row(i)] for i in range(self.rows)]
        rows, cols = self.rows, self.cols
        r = 0
        prev = 1
        for c in range(cols):
            if r == rows:
                break
            sel = next((i for i in range(r, rows) if m[i][c] != 0), None)
            if sel is None:
                continue
            m[r], m[sel] = m[sel], m[r]
            piv = m[r][c]
            for i in range(r + 1, rows):
                mi, mr = m[i], m[r]
                fi = mi[c]
                for j in range(c, cols):
                    mi[j] = (piv * mi[j] - fi * mr[j]) // prev
            prev = piv
            r += 1
        return r

    def kernel_basis(self) -> list[list[Fraction]]:
        """Basis of the right null space, in free-variable order.

        Each returned vector z satisfies self . z = 0 exactly; the list has
        cols - rank entries.
        """
        m, pivots = self._rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for f in free:
            v = [Q(0)] * self.cols
            v[f] = Q(1)
            for r, c in enumerate(pivots):
                v[c] = -m[r][f]
            basis.append(v)
        return basis

    def det(self) -> Fraction:
        """Exact determinant (square matrices only)."""
        if self.rows != self.cols:
            raise ValueError(f"det: matrix is {self.rows}x{self.cols}, not square")
        n = self.rows
        if n == 0:
            return Q(1)
        m = [self.row(i) for i in range(n)]
        sign = 1
        result = Q(1)
        for c in range(n):
            sel = next((i for i in range(c, n) if m[i][c] != 0), None)
            if sel is None:
                return Q(0)
            if sel != c:
                m[c], m[sel] = m[sel], m[c]
                sign = -sign
            piv = m[c][c]
            result *= piv
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / piv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return result * sign

    def solve(self, b: Sequence[Fraction]) -> list[Fraction] | None:
        """Some exact solution of self . x = b, or None when inconsistent."""
        if len(b) != self.rows:
            raise ValueError("solve: rhs length mismatch")
        aug = QMatrix(
            self.rows,
            self.cols + 1,
            [e for i in range(self.rows) for e in (*self.row(i), Q(b[i]))],
        )
        m, pivots = aug._rref()
        if self.cols in pivots:
            return None
        x = [Q(0)] * self.cols
        for r, c in enumerate(pivots):
            x[c] = m[r][self.cols]
        return x

    def stack(self, other: "QMatrix") -> "QMatrix":
        """Vertical concatenation."""
        if self.cols != other.cols:
            raise ValueError("stack: column mismatch")
        return QMatrix(self.rows + other.rows, self.cols, self._data + other._data)
