"""Exact dense linear algebra over Fraction and QuadExt entries."""
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from hadamard_star.exceptions import DimensionMismatchError
from hadamard_star.field import Field, field_of


class Matrix:
    """
    Immutable row-major matrix of exact scalars.

    Parameters
    ----------
    rows : iterable of sequences
        The matrix rows; all must have the same length. Plain ints are
        lifted to ``Fraction``.
    cols : int, optional
        Column count, only needed to describe a matrix with no rows.

    Attributes
    ----------
    field : Field
        The smallest field holding every entry.
    """

    __slots__ = ("_rows", "_cols", "field")

    def __init__(self, rows: Iterable[Sequence], cols: Optional[int] = None) -> None:
        self._rows: Tuple[tuple, ...] = tuple(
            tuple(Fraction(x) if isinstance(x, int) else x for x in row) for row in rows
        )
        widths = {len(row) for row in self._rows}
        if len(widths) > 1:
            raise DimensionMismatchError(f"ragged matrix with row lengths {sorted(widths)}")
        self._cols = widths.pop() if widths else (cols or 0)
        self.field: Field = field_of(x for row in self._rows for x in row)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        """The ``size`` x ``size`` identity over Q."""
        return cls([[int(i == j) for j in range(size)] for i in range(size)])

    @property
    def rows(self) -> int:
        """Number of rows."""
        return len(self._rows)

    @property
    def cols(self) -> int:
        """Number of columns, also for a matrix with no rows."""
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        """The pair ``(rows, cols)``."""
        return self.rows, self.cols

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self._rows[i][j]
        return self._rows[index]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"Matrix([{body}])"

    def to_lists(self) -> List[list]:
        """Mutable copy of the rows, as used by the elimination routines."""
        return [list(row) for row in self._rows]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        """
        Select rows and columns by index.

        Parameters
        ----------
        rows, cols : sequence of int
            Indices to keep, in the order given.

        Returns
        -------
        Matrix
            The entries ``self[i, j]`` for ``i`` in ``rows`` and ``j`` in ``cols``.
        """
        return Matrix([[self._rows[i][j] for j in cols] for i in rows])

    def transpose(self) -> "Matrix":
        """Transposed matrix; an empty matrix keeps its shape swapped."""
        return Matrix(
            [[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    T = property(transpose)

    def __matmul__(self, vector: Sequence) -> list:
        """``m @ v`` is :func:`mat_vec`."""
        return mat_vec(self, vector)


def mat_vec(m: Matrix, vector: Sequence) -> list:
    """Product of a matrix with a column vector."""
    if len(vector) != m.cols:
        raise DimensionMismatchError(
            f"vector of length {len(vector)} against {m.cols} columns"
        )
    return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in m]


def cofactor_determinant(m: Matrix):
    """
    Determinant by Laplace expansion along the first row.

    Exponential in the size; used as the cross-check path for small
    matrices and as a test oracle.
    """
    if m.rows != m.cols:
        raise DimensionMismatchError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    return _cofactor([list(row) for row in m])


def _cofactor(rows: List[list]):
    size = len(rows)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = entry * _cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def determinant(m: Matrix):
    """
    Exact determinant by fraction-free (Bareiss) elimination.

    Every division performed is exact in the underlying field. Matrices of
    size at most 3 go through the cofactor expansion instead.

    Parameters
    ----------
    m : Matrix
        A square matrix.

    Returns
    -------
    Fraction or QuadExt
        The determinant.

    Raises
    ------
    DimensionMismatchError
        If ``m`` is not square.
    """
    if m.rows != m.cols:
        raise DimensionMismatchError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    size = m.rows
    if size <= 3:
        return cofactor_determinant(m)
    a = m.to_lists()
    sign = 1
    previous = Fraction(1)
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) / previous
            a[i][k] = Fraction(0)
        previous = pivot
    det = a[size - 1][size - 1]
    return det if sign > 0 else -det


def _row_echelon(a: List[list]) -> List[int]:
    """
    Reduce ``a`` in place to reduced row echelon form.

    Pivots are searched column by column and, inside a column, from the
    lowest row index, so the result is deterministic.

    Returns
    -------
    list of int
        The pivot columns, one per nonzero row.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if a[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            a[piv_r], a[i_row] = a[i_row], a[piv_r]
        fp = a[piv_r][piv_c]
        a[piv_r] = [x / fp for x in a[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = a[r][piv_c]
            if fr == 0:
                continue
            a[r] = [x - fr * y for x, y in zip(a[r], a[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return pivots


def rank(m: Matrix) -> int:
    """Exact row rank."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_row_echelon(m.to_lists()))


def kernel_basis(m: Matrix) -> List[list]:
    """
    Basis of the right null space ``{u : m u = 0}``.

    One vector per free column of the reduced echelon form, with a 1 in that
    column; the list is empty exactly when the rank equals the column count.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [[Fraction(int(i == j)) for j in range(m.cols)] for i in range(m.cols)]
    a = m.to_lists()
    pivots = _row_echelon(a)
    one, zero = m.field.one, m.field.zero
    basis = []
    for free in (c for c in range(m.cols) if c not in pivots):
        vector = [zero] * m.cols
        vector[free] = one
        for row, piv_c in enumerate(pivots):
            vector[piv_c] = -a[row][free]
        basis.append(vector)
    return basis


def solve(m: Matrix, rhs: Sequence) -> Optional[list]:
    """
    One exact solution of ``m x = rhs``, or None if the system is inconsistent.

    Free variables are set to zero, so the answer is reproducible.
    """
    if len(rhs) != m.rows:
        raise DimensionMismatchError(
            f"right-hand side of length {len(rhs)} against {m.rows} rows"
        )
    a = [list(row) + [b] for row, b in zip(m, rhs)]
    if not a:
        return [Fraction(0)] * m.cols
    pivots = _row_echelon(a)
    if pivots and pivots[-1] == m.cols:
        return None
    solution = [m.field.zero] * m.cols
    for row, piv_c in enumerate(pivots):
        solution[piv_c] = a[row][-1]
    return solution


def maximal_minors(m: Matrix) -> List[Tuple[Tuple[int, ...], object]]:
    """
    All minors of size ``min(rows, cols)``.

    Index sets are 0-based and refer to rows when ``rows >= cols`` and to
    columns otherwise; they are produced in lexicographic order.

    Returns
    -------
    list of (tuple of int, scalar)
        Each index set with its minor.
    """
    size = min(m.rows, m.cols)
    if size == 0:
        return []
    everything = range(size)
    if m.rows >= m.cols:
        return [
            (rows, determinant(m.submatrix(rows, everything)))
            for rows in combinations(range(m.rows), size)
        ]
    return [
        (cols, determinant(m.submatrix(everything, cols)))
        for cols in combinations(range(m.cols), size)
    ]
