"""
Exact linear solves over Q

Thin bridge to sympy's `DomainMatrix` over `QQ`, which does fraction-free
Gauss-Jordan elimination far faster than `sympy.Matrix` on rational entries.
"""

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from eisenzeta.errors import SingularSystemError


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list:
    """
    Solve A·v = b exactly and insist on a unique solution.

    Overdetermined systems are accepted as long as they are consistent.

    Args:
        rows: Coefficient matrix A as a list of rows of Fractions
        rhs: Right-hand side b

    Returns:
        list[Fraction]: The unique solution v

    Raises:
        SingularSystemError: If the system is inconsistent or underdetermined
    """

    n_rows = len(rows)
    if n_rows != len(rhs):
        raise ValueError(f"Matrix has {n_rows} rows but right-hand side has {len(rhs)}")
    n_cols = len(rows[0]) if n_rows else 0

    augmented = [
        [_to_qq(entry) for entry in row] + [_to_qq(value)]
        for row, value in zip(rows, rhs)
    ]
    matrix = DomainMatrix(augmented, (n_rows, n_cols + 1), QQ)
    reduced, pivots = matrix.rref()

    if n_cols in pivots:
        raise SingularSystemError("Linear system is inconsistent")
    if len(pivots) < n_cols:
        raise SingularSystemError(
            f"Linear system has rank {len(pivots)} for {n_cols} unknowns"
        )

    reduced = reduced.to_Matrix()
    solution = [Fraction(0)] * n_cols
    for row_index, col in enumerate(pivots):
        value = reduced[row_index, n_cols]
        solution[col] = Fraction(int(value.p), int(value.q))
    return solution
