"""Fraction-free (Bareiss) elimination for small exact linear systems.

Used to solve the barycentric system

    [ alpha_1 ... alpha_m ]            [ beta ]
    [   1     ...   1     ] * lambda = [  1   ]

whose rows are exponent coordinates. Entries stay integral during elimination
because each updated entry is a minor of the input matrix divided by the
previous pivot.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


class SingularSystemError(ArithmeticError):
    """The coefficient columns are linearly dependent."""


class InconsistentSystemError(ArithmeticError):
    """The right-hand side is not in the column span."""


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> Tuple[Matrix, List[int]]:
    """
    Reduce a matrix to row echelon form without fractions.

    Args:
        rows: Rectangular matrix with integer (or rational) entries

    Returns:
        (echelon matrix, list of pivot column indices)
    """
    a: Matrix = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return a, []
    n_rows, n_cols = len(a), len(a[0])
    previous = Fraction(1)
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, n_rows):
            factor = a[i][c]
            for j in range(c + 1, n_cols):
                a[i][j] = (pivot * a[i][j] - factor * a[r][j]) / previous
            a[i][c] = Fraction(0)
        previous = pivot
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(bareiss_echelon(rows)[1])


# PUBLIC_INTERFACE
def solve_exact(columns: Sequence[Sequence[int]], rhs: Sequence[int]) -> List[Fraction]:
    """
    Solve M * x = rhs exactly where M has the given columns.

    Args:
        columns: The m columns of M, each of length len(rhs)
        rhs: Right-hand side

    Returns:
        The unique solution x of length m

    Raises:
        SingularSystemError: When the columns are linearly dependent
        InconsistentSystemError: When no solution exists
    """
    m = len(columns)
    augmented = [[col[i] for col in columns] + [rhs[i]] for i in range(len(rhs))]
    echelon, pivots = bareiss_echelon(augmented)
    if m in pivots:
        if len(pivots) - 1 < m:
            # rank deficiency takes precedence over inconsistency
            raise SingularSystemError("Coefficient matrix is rank deficient")
        raise InconsistentSystemError("Right-hand side is outside the column span")
    if len(pivots) < m:
        raise SingularSystemError("Coefficient matrix is rank deficient")
    x = [Fraction(0)] * m
    for r in reversed(range(m)):
        c = pivots[r]
        acc = echelon[r][m]
        for j in range(c + 1, m):
            acc -= echelon[r][j] * x[j]
        x[c] = acc / echelon[r][c]
    return x
