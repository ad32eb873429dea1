"""Independent ground-truth engines for cross-checking the formula code.

Nothing here shares index arithmetic with the closed-form engines: the
determinant enumerates permutations directly, the inverse builds classical
adjugates from literal row/column deletion, and elimination works on a
mutable augmented tableau. Slow and obvious on purpose.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import CapacityError, DomainError, SingularMatrixError
from .matrices import Matrix, minor_by_deletion

_LEIBNIZ_MAX = 9  # n! products; 9! = 362880 is the largest tolerable sum

# Elimination treats a pivot column with no entry above this magnitude as
# exactly zero; normal draws never land here unless the matrix is singular.
_PIVOT_FLOOR = 1e-300


class GaussResult(NamedTuple):
    inverse: Matrix
    residual: float


def leibniz_terms(a: Matrix) -> Iterator[tuple[int, complex]]:
    """Yield every signed permutation product, lexicographic in column order.

    The permutation sign is maintained incrementally: picking the k-th
    remaining column for the current row crosses k earlier choices, flipping
    the sign k times.
    """
    if a.n > _LEIBNIZ_MAX:
        raise CapacityError(f"permutation enumeration capped at n <= {_LEIBNIZ_MAX}")

    def recurse(row: int, remaining: list[int], sign: int, partial: complex):
        if not remaining:
            yield sign, partial
            return
        for k, col in enumerate(remaining):
            yield from recurse(
                row + 1,
                remaining[:k] + remaining[k + 1 :],
                -sign if k & 1 else sign,
                partial * a.entry(row, col),
            )

    yield from recurse(1, list(range(1, a.n + 1)), 1, 1.0 + 0.0j)


def leibniz_det(a: Matrix) -> complex:
    """Determinant as the full signed sum over permutations."""
    return sum(sign * product for sign, product in leibniz_terms(a))


def laplace_det(a: Matrix) -> complex:
    """Determinant by recursive first-row expansion over deletion minors."""
    if a.n == 1:
        return a.entry(1, 1)
    total = 0.0 + 0.0j
    for col in range(1, a.n + 1):
        pivot = a.entry(1, col)
        if pivot == 0:
            continue
        term = pivot * laplace_det(minor_by_deletion(a, 1, col))
        total += term if col % 2 else -term
    return total


def cofactor_inverse(a: Matrix) -> Matrix:
    """Inverse as transposed cofactors over the determinant."""
    if a.n < 2:
        raise DomainError("cofactor inverse is defined for n >= 2")
    det = laplace_det(a)
    if det == 0:
        raise SingularMatrixError("determinant is exactly zero")
    out = [0.0 + 0.0j] * (a.n * a.n)
    for i in range(1, a.n + 1):
        for j in range(1, a.n + 1):
            cof = laplace_det(minor_by_deletion(a, i, j))
            if (i + j) % 2:
                cof = -cof
            out[(j - 1) * a.n + (i - 1)] = cof / det
    return Matrix(a.n, tuple(out))


def residual_max_abs(a: Matrix, x: Matrix) -> float:
    """max |(A X - I)_{rc}|, the worst-entry inversion defect."""
    if a.n != x.n:
        raise DomainError("residual requires matrices of equal size")
    n = a.n
    worst = 0.0
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            acc = sum(a.entry(r, k) * x.entry(k, c) for k in range(1, n + 1))
            if r == c:
                acc -= 1.0
            worst = max(worst, abs(acc))
    return worst


def elimination_det(a: Matrix) -> complex:
    """Determinant as the signed pivot product of partial-pivoting elimination."""
    n = a.n
    rows = [list(row) for row in a.rows()]
    det = 1.0 + 0.0j
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda r: abs(rows[r][k]))
        if abs(rows[pivot_row][k]) < _PIVOT_FLOOR:
            return 0.0 + 0.0j
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        det *= rows[k][k]
        for r in range(k + 1, n):
            factor = rows[r][k] / rows[k][k]
            if factor != 0:
                rows[r] = [rv - factor * kv for rv, kv in zip(rows[r], rows[k])]
    return det


def gauss_inverse(a: Matrix) -> GaussResult:
    """Inverse by Gauss-Jordan elimination with partial pivoting.

    Pivots are chosen by largest magnitude; ties keep the first candidate,
    so the computation is deterministic. Returns the inverse together with
    its own worst-entry residual against the identity.
    """
    if a.n < 1:
        raise DomainError("elimination requires a square matrix")
    n = a.n
    aug = [row + [1.0 + 0.0j if r == c else 0.0 + 0.0j for c in range(n)] for r, row in enumerate(a.rows())]
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda r: abs(aug[r][k]))
        if abs(aug[pivot_row][k]) < _PIVOT_FLOOR:
            raise SingularMatrixError(f"no usable pivot in column {k + 1}")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        aug[k] = [v / pivot for v in aug[k]]
        for r in range(n):
            if r == k:
                continue
            factor = aug[r][k]
            if factor != 0:
                aug[r] = [rv - factor * kv for rv, kv in zip(aug[r], aug[k])]
    inverse = Matrix(n, tuple(aug[r][n + c] for r in range(n) for c in range(n)))
    return GaussResult(inverse, residual_max_abs(a, inverse))
