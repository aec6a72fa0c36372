"""Dense matrices over the code alphabets.

Provides lambda-circulant generation, the back-diagonal matrix R,
table-driven matrix algebra and the structural predicates needed by
the block constructions.  Matrices are numpy uint8 arrays of element
codes; every instance in this project has n <= 16 blocks, so nothing
fancier than dense arithmetic is warranted.
"""

from __future__ import annotations

import numpy as np

from .algebra import DomainError, Ring

__all__ = [
    "DEFAULT_SHIFT",
    "lambda_circulant",
    "back_diagonal",
    "identity",
    "mat_mul",
    "mat_add",
    "mat_neg",
    "mat_eq",
    "is_lambda_circulant",
    "is_symmetric_reverse_circulant",
    "field_rank",
    "batch_circulant",
    "batch_mat_mul",
]

# Shift orientation of "lambda-circulant": each row is the previous row
# shifted one step in this direction, the wrapped entry scaled by lambda.
# Only the right shift satisfies the reverse-circulant commutation
# identities that the block arrays rely on (see test_matrices), and it is
# the orientation that reproduces the published four-circulant tables.
DEFAULT_SHIFT = "right"


def _check_shift(shift):
    shift = DEFAULT_SHIFT if shift is None else shift
    if shift not in ("right", "left"):
        raise DomainError(f"shift must be 'right' or 'left', got {shift!r}")
    return shift


def lambda_circulant(ring, lam, first_row, shift=None):
    """n x n matrix of successive cyclic shifts of first_row.

    The entry that wraps around is multiplied by the unit lam;
    lam = 1 gives an ordinary circulant.
    """
    shift = _check_shift(shift)
    if not ring.is_unit(lam):
        raise DomainError(f"lambda {ring.format_element(lam)} is not a unit in {ring.kind}")
    row = ring.vector(first_row)
    n = row.size
    M = np.empty((n, n), dtype=np.uint8)
    M[0] = row
    for i in range(1, n):
        if shift == "right":
            M[i, 1:] = M[i - 1, :-1]
            M[i, 0] = ring.mul_table[lam, M[i - 1, -1]]
        else:
            M[i, :-1] = M[i - 1, 1:]
            M[i, -1] = ring.mul_table[lam, M[i - 1, 0]]
    return M


def back_diagonal(n):
    """The n x n matrix with ones on the back diagonal, zeros elsewhere."""
    if n < 1:
        raise DomainError("back_diagonal needs n >= 1")
    return np.eye(n, dtype=np.uint8)[::-1].copy()


def identity(n):
    return np.eye(n, dtype=np.uint8)


def mat_mul(ring, X, Y):
    """Matrix product over the ring."""
    X = np.ascontiguousarray(X, dtype=np.uint8)
    Y = np.ascontiguousarray(Y, dtype=np.uint8)
    if X.shape[1] != Y.shape[0]:
        raise DomainError(f"dimension mismatch: {X.shape} x {Y.shape}")
    prods = ring.mul_table[X[:, :, None], Y[None, :, :]]
    return ring.vec_sum(prods, axis=1)


def mat_add(ring, X, Y):
    if X.shape != Y.shape:
        raise DomainError(f"shape mismatch: {X.shape} vs {Y.shape}")
    return ring.add_table[X, Y]


def mat_neg(ring, X):
    return ring.neg_table[X]


def mat_eq(X, Y):
    return X.shape == Y.shape and bool(np.array_equal(X, Y))


def is_lambda_circulant(ring, X, lam, shift=None):
    """True iff X has the lambda-circulant shape for this lambda."""
    X = np.asarray(X, dtype=np.uint8)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        return False
    if not ring.is_unit(lam):
        return False
    return np.array_equal(X, lambda_circulant(ring, lam, X[0], shift))


def is_symmetric_reverse_circulant(ring, X, lam, shift=None):
    """True iff X is symmetric with the shape C*R for lambda-circulant C.

    Since R*R = I that shape is equivalent to X*R being lambda-circulant.
    """
    X = np.asarray(X, dtype=np.uint8)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        return False
    if not np.array_equal(X, X.T):
        return False
    C = mat_mul(ring, X, back_diagonal(X.shape[0]))
    return is_lambda_circulant(ring, C, lam, shift)


def field_rank(ring, M):
    """Rank of a matrix over F2 or F3 by Gaussian elimination."""
    if ring.kind not in ("F2", "F3"):
        raise DomainError(f"{ring.kind} is not a field; rank is undefined here")
    p = ring.size
    A = np.asarray(M, dtype=np.int16).copy()
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        A[[r, i]] = A[[i, r]]
        if p == 3 and A[r, c] == 2:
            A[r] = (A[r] * 2) % 3
        f = A[:, c].copy()
        f[r] = 0
        A = (A - f[:, None] * A[r][None, :]) % p
        r += 1
    return r


# ---- batched helpers for the search hot path ---------------------------


def batch_circulant(ring, lam, rows, shift=None):
    """Stack of lambda-circulants, one per row of `rows` (N, n) -> (N, n, n)."""
    shift = _check_shift(shift)
    if not ring.is_unit(lam):
        raise DomainError(f"lambda {ring.format_element(lam)} is not a unit in {ring.kind}")
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    N, n = rows.shape
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    if shift == "right":
        src = (j - i) % n
        wrap = j < i
    else:
        src = (i + j) % n
        wrap = i + j >= n
    out = rows[:, src]
    lam_scaled = ring.mul_table[lam, out]
    return np.where(wrap[None, :, :], lam_scaled, out)


def batch_mat_mul(ring, X, Y):
    """Batched matrix product: (N, r, m) x (N, m, c) -> (N, r, c)."""
    prods = ring.mul_table[X[:, :, :, None], Y[:, None, :, :]]
    return ring.vec_sum(prods, axis=2)
