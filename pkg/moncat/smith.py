"""
Integer matrix normal forms. Matrices are 2D numpy arrays with dtype=object holding Python ints, so that no
intermediate result can overflow.

The Smith normal form S = U·M·V is computed with deterministic pivoting (smallest non-zero absolute value, ties broken
in row-major order) so that U and V are reproducible. The Hermite normal form gives a canonical basis of a lattice.
"""

#  MONCAT, computes colimits of monoids in monoidal categories.
#  Copyright (C) 2023 The MONCAT authors
#
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <https://www.gnu.org/licenses/>.

import dataclasses
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from moncat.custom_types import IntMatrix


def int_matrix(entries: Iterable[Iterable[int]], rows: Optional[int] = None, cols: Optional[int] = None) -> IntMatrix:
    """
    Create an integer matrix from nested rows.

    :param entries: The rows of the matrix.
    :param rows: (optional) The number of rows; needed to build matrices with no columns.
    :param cols: (optional) The number of columns; needed to build matrices with no rows.
    :return: A read-only (rows, cols) array of Python ints.
    """
    entries = [[int(x) for x in row] for row in entries]
    rows = len(entries) if rows is None else rows

    if cols is None:
        cols = len(entries[0]) if entries else 0

    matrix = zeros(rows, cols)

    if len(entries) != rows or any(len(row) != cols for row in entries):
        raise ValueError(f"Expected a {rows}x{cols} matrix, got rows of lengths {[len(row) for row in entries]}.")

    for i, row in enumerate(entries):
        for j, x in enumerate(row):
            matrix[i, j] = x

    return freeze(matrix)


def zeros(rows: int, cols: int) -> IntMatrix:
    matrix = np.empty((rows, cols), dtype=object)
    matrix.fill(0)

    return matrix


def identity_matrix(n: int) -> IntMatrix:
    matrix = zeros(n, n)

    for i in range(n):
        matrix[i, i] = 1

    return freeze(matrix)


def freeze(matrix: IntMatrix) -> IntMatrix:
    matrix.flags.writeable = False

    return matrix


def as_int_matrix(matrix) -> IntMatrix:
    """Convert any 2D array-like (including numpy integer arrays) to a read-only matrix of Python ints."""
    array = np.asarray(matrix, dtype=object)

    if array.ndim != 2:
        raise ValueError(f"Expected a 2D matrix, got an array with {array.ndim} dimension(s).")

    return int_matrix(array.tolist(), rows=array.shape[0], cols=array.shape[1])


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply a {a.shape} matrix by a {b.shape} matrix.")

    if a.shape[0] == 0 or a.shape[1] == 0 or b.shape[1] == 0:
        return freeze(zeros(a.shape[0], b.shape[1]))

    return freeze(np.dot(a, b))


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """The Kronecker product with row-major block indexing: entry ((i, k), (j, l)) is a[i, j]·b[k, l]."""
    rows_b, cols_b = b.shape
    result = zeros(a.shape[0] * rows_b, a.shape[1] * cols_b)

    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            if a[i, j]:
                result[i * rows_b:(i + 1) * rows_b, j * cols_b:(j + 1) * cols_b] = a[i, j] * b

    return freeze(result)


def hstack(matrices: Sequence[IntMatrix], rows: int) -> IntMatrix:
    """Juxtapose matrices with `rows` rows. Works when there are no matrices or some have no columns."""
    for matrix in matrices:
        if matrix.shape[0] != rows:
            raise ValueError(f"Cannot juxtapose a matrix with {matrix.shape[0]} rows next to {rows} rows.")

    cols = sum(matrix.shape[1] for matrix in matrices)
    result = zeros(rows, cols)
    offset = 0

    for matrix in matrices:
        result[:, offset:offset + matrix.shape[1]] = matrix
        offset += matrix.shape[1]

    return freeze(result)


def block_diagonal(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    result = zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    result[:a.shape[0], :a.shape[1]] = a
    result[a.shape[0]:, a.shape[1]:] = b

    return freeze(result)


def column_vector(vector: Sequence[int]) -> IntMatrix:
    return int_matrix([[x] for x in vector], rows=len(vector), cols=1)


def to_lists(matrix: IntMatrix) -> List[List[int]]:
    return [[int(x) for x in row] for row in matrix.tolist()]


@dataclasses.dataclass(frozen=True)
class SmithNormalForm:
    """
    The decomposition S = U·M·V of an m×n integer matrix M, where U (m×m) and V (n×n) are unimodular and S is
    diagonal with non-negative entries d_1 | d_2 | ... | d_r followed by zeros.
    """

    """The left transform."""
    U: IntMatrix
    """The diagonal matrix."""
    S: IntMatrix
    """The right transform."""
    V: IntMatrix
    """The inverse of U, tracked during elimination."""
    U_inverse: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        """The non-zero diagonal entries d_1, ..., d_r."""
        return tuple(int(self.S[i, i]) for i in range(min(self.S.shape)) if self.S[i, i] != 0)

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        """The diagonal entries greater than one, i.e. the orders of the non-trivial cyclic summands."""
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(matrix: IntMatrix) -> SmithNormalForm:
    """
    Compute the Smith normal form of an integer matrix.

    :param matrix: An m×n integer matrix (any array-like of ints).
    :return: U, S, V with S = U·M·V, U and V unimodular and the diagonal of S forming a divisibility chain.
    """
    matrix = np.asarray(matrix, dtype=object)

    if matrix.ndim != 2:
        raise ValueError(f"Expected a 2D matrix, got an array with {matrix.ndim} dimension(s).")

    m, n = matrix.shape
    s = to_lists(matrix)
    u = to_lists(identity_matrix(m))
    u_inverse = to_lists(identity_matrix(m))
    v = to_lists(identity_matrix(n))

    def swap_rows(i: int, j: int):
        if i == j:
            return

        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

        for row in u_inverse:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int):
        if i == j:
            return

        for row in s:
            row[i], row[j] = row[j], row[i]

        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(target: int, source: int, q: int):
        """row_target += q·row_source"""
        s[target] = [a + q * b for a, b in zip(s[target], s[source])]
        u[target] = [a + q * b for a, b in zip(u[target], u[source])]

        for row in u_inverse:
            row[source] -= q * row[target]

    def add_col(target: int, source: int, q: int):
        """col_target += q·col_source"""
        for row in s:
            row[target] += q * row[source]

        for row in v:
            row[target] += q * row[source]

    def negate_row(i: int):
        s[i] = [-a for a in s[i]]
        u[i] = [-a for a in u[i]]

        for row in u_inverse:
            row[i] = -row[i]

    t = 0

    while t < min(m, n):
        candidates = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j] != 0]

        if not candidates:
            break

        _, i, j = min(candidates)
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            pivot = s[t][t]

            for i in range(t + 1, m):
                if s[i][t] != 0:
                    add_row(i, t, -(s[i][t] // pivot))

            for j in range(t + 1, n):
                if s[t][j] != 0:
                    add_col(j, t, -(s[t][j] // pivot))

            remainders = ([(abs(s[i][t]), 0, i) for i in range(t + 1, m) if s[i][t] != 0] +
                          [(abs(s[t][j]), 1, j) for j in range(t + 1, n) if s[t][j] != 0])

            if remainders:
                _, is_column, index = min(remainders)

                if is_column:
                    swap_cols(t, index)
                else:
                    swap_rows(t, index)

                continue

            not_divisible = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                                  if s[i][j] % pivot != 0), None)

            if not_divisible is None:
                break

            add_row(t, not_divisible[0], 1)

        if s[t][t] < 0:
            negate_row(t)

        t += 1

    return SmithNormalForm(U=int_matrix(u, m, m), S=int_matrix(s, m, n), V=int_matrix(v, n, n),
                           U_inverse=int_matrix(u_inverse, m, m))


def solve(a: IntMatrix, b: IntMatrix, snf: Optional[SmithNormalForm] = None) -> Optional[IntMatrix]:
    """
    Solve A·X = B over the integers.

    :param a: An m×n integer matrix.
    :param b: An m×k integer matrix of right-hand sides.
    :param snf: (optional) A precomputed Smith normal form of `a`.
    :return: An n×k integer solution, or None if some column of B has no integer solution.
    """
    snf = smith_normal_form(a) if snf is None else snf
    m, n = a.shape
    diagonal = snf.diagonal
    rank = len(diagonal)
    transformed = to_lists(matmul(snf.U, b))
    solution = zeros(n, b.shape[1])

    for col in range(b.shape[1]):
        for i in range(m):
            c = transformed[i][col]

            if i < rank:
                if c % diagonal[i] != 0:
                    return None

                solution[i, col] = c // diagonal[i]
            elif c != 0:
                return None

    return matmul(snf.V, solution)


def kernel(a: IntMatrix, snf: Optional[SmithNormalForm] = None) -> IntMatrix:
    """A basis of the integer kernel {x | A·x = 0}, as the columns of an n×(n - rank) matrix."""
    snf = smith_normal_form(a) if snf is None else snf

    return freeze(np.ascontiguousarray(snf.V[:, snf.rank:]))


def hermite_normal_form(matrix: IntMatrix) -> IntMatrix:
    """
    The canonical basis of the lattice spanned by the columns of `matrix`.

    The basis is in column echelon form: the pivot of each column is positive, lies strictly below the pivot of the
    previous column, and every entry to the left of a pivot in the pivot's row lies in [0, pivot). Two matrices span
    the same lattice if and only if their Hermite normal forms are identical.

    :param matrix: A g×c integer matrix.
    :return: A g×r matrix where r is the rank of the lattice.
    """
    g = matrix.shape[0]
    # Work with rows, i.e. the transpose.
    rows = [row for row in to_lists(np.ascontiguousarray(matrix.T)) if any(row)]
    pivot_row = 0

    for col in range(g):
        while True:
            nonzero = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]

            if not nonzero:
                break

            smallest = min(nonzero, key=lambda i: (abs(rows[i][col]), i))
            rows[pivot_row], rows[smallest] = rows[smallest], rows[pivot_row]
            pivot = rows[pivot_row][col]
            reduced = True

            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col] != 0:
                    q = rows[i][col] // pivot
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]
                    reduced = reduced and rows[i][col] == 0

            if reduced:
                break

        if pivot_row >= len(rows) or rows[pivot_row][col] == 0:
            continue

        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]

        pivot = rows[pivot_row][col]

        for i in range(pivot_row):
            q = rows[i][col] // pivot

            if q != 0:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]

        pivot_row += 1

        if pivot_row == len(rows):
            break

    basis = rows[:pivot_row]

    return freeze(np.ascontiguousarray(int_matrix(basis, rows=len(basis), cols=g).T))
