"""Linear codes over the supported rings.

A LinearCode is a generator matrix plus its ring; every construction
here emits the standard form [I_k | M], and the two-column extension
emits a free generator that is no longer in standard form.  Self-dual
verification, a brute-force dual oracle for toy sizes, the two-column
self-dual extension and binary Gray images live here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    DomainError,
    F2,
    F2U,
    gray_map,
    inner_product,
    is_unit_square_one,
)
from . import _kernels
from .matrices import field_rank, mat_mul

__all__ = [
    "UnsupportedShapeError",
    "ResourceRefusal",
    "LinearCode",
    "ExplicitCode",
    "is_self_orthogonal",
    "is_self_dual",
    "span_codewords",
    "brute_force_dual",
    "extend_code",
    "gray_image_code",
]


class UnsupportedShapeError(DomainError):
    """Code shape outside what the self-duality test supports."""


class ResourceRefusal(RuntimeError):
    """An exact computation was refused because it exceeds its size bound."""


@dataclass
class LinearCode:
    """A code given by a k x n generator matrix of element codes.

    standard_form marks generators of the shape [I_k | M]; those are
    free by construction.  Treat instances as immutable values.
    """

    ring: object
    n: int
    generator: np.ndarray
    standard_form: bool = False

    def __post_init__(self):
        G = np.ascontiguousarray(self.generator, dtype=np.uint8)
        self.ring.validate(G)
        if G.ndim != 2 or G.shape[1] != self.n:
            raise DomainError(f"generator shape {G.shape} does not match length {self.n}")
        self.generator = G
        if self.standard_form:
            k = G.shape[0]
            if self.n < k or not np.array_equal(G[:, :k], np.eye(k, dtype=np.uint8)):
                raise DomainError("standard_form generator must start with an identity block")

    @property
    def k(self):
        return self.generator.shape[0]

    def __repr__(self):
        return f"LinearCode({self.ring.kind}, [{self.n},{self.k}])"


@dataclass
class ExplicitCode:
    """A code listed by its codewords (output of the brute-force dual)."""

    ring: object
    n: int
    words: np.ndarray

    def word_set(self):
        return {w.tobytes() for w in self.words}


def is_self_orthogonal(code):
    """True iff G * G^T = 0."""
    G = code.generator
    return not mat_mul(code.ring, G, G.T).any()


def _is_free(code):
    """True iff the k generator rows span a free rank-k submodule."""
    ring, G, k = code.ring, code.generator, code.k
    if code.standard_form:
        return True
    if ring is F2U:
        rows = _gray_rows(G)
        return _kernels.gf2_rank(rows) == 2 * k
    return field_rank(ring, G) == k


def is_self_dual(code):
    """Self-duality test for free codes with n = 2k.

    For a free rank n/2 code over these rings, G * G^T = 0 is
    equivalent to self-duality (self-orthogonality plus cardinality).
    Generators must either be in standard form or have verifiably
    independent rows.
    """
    if code.n != 2 * code.k:
        raise UnsupportedShapeError(
            f"self-duality needs n = 2k, got [{code.n},{code.k}]"
        )
    if not _is_free(code):
        raise UnsupportedShapeError("generator rows are not independent (code is not free)")
    return is_self_orthogonal(code)


def _all_vectors(ring, n, limit):
    count = ring.size**n
    if count > limit:
        raise ResourceRefusal(
            f"enumerating {ring.kind}^{n} means {count} vectors, over the bound {limit}"
        )
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, n), dtype=np.uint8)
    for j in range(n - 1, -1, -1):
        out[:, j] = idx % ring.size
        idx //= ring.size
    return out


def span_codewords(code, limit=1 << 24):
    """All codewords of a toy-sized code, sorted lexicographically."""
    ring, G, k = code.ring, code.generator, code.k
    msgs = _all_vectors(ring, k, limit)
    words = np.zeros((msgs.shape[0], code.n), dtype=np.uint8)
    for j in range(k):
        term = ring.mul_table[msgs[:, j][:, None], G[j][None, :]]
        words = ring.add_table[words, term]
    return _lex_sorted_unique(words)


def _lex_sorted_unique(words):
    if words.shape[0] == 0:
        return words
    return np.unique(words, axis=0)


def brute_force_dual(code, limit=1 << 24):
    """Exhaustive dual: every vector orthogonal to all generator rows.

    Toy-scale oracle only; refuses when |ring|^n exceeds `limit`.
    """
    ring, G = code.ring, code.generator
    vecs = _all_vectors(ring, code.n, limit)
    keep = np.ones(vecs.shape[0], dtype=bool)
    for row in G:
        prods = ring.mul_table[vecs, row[None, :]]
        keep &= ring.vec_sum(prods, axis=1) == 0
    return ExplicitCode(ring, code.n, _lex_sorted_unique(vecs[keep]))


def extend_code(base, c, X):
    """Two-column self-dual extension.

    Given a self-dual code with generator rows r_i, a unit c with
    c^2 = 1 and a vector X with <X, X> = 1, returns the length n+2
    self-dual code generated by the row (1, 0, X) on top of the rows
    (y_i, c*y_i, r_i) with y_i = <r_i, X>.
    """
    ring = base.ring
    X = ring.vector(X)
    if X.size != base.n:
        raise DomainError(f"X has length {X.size}, expected {base.n}")
    if not is_unit_square_one(ring, c):
        raise DomainError(f"c = {ring.format_element(c)} is not a unit with c^2 = 1")
    if inner_product(ring, X, X) != 1:
        raise DomainError("<X, X> must be 1")
    if not is_self_dual(base):
        raise DomainError("extension requires a self-dual base code")
    G = base.generator
    ys = np.array([inner_product(ring, row, X) for row in G], dtype=np.uint8)
    top = np.concatenate([np.array([1, 0], dtype=np.uint8), X])
    body = np.column_stack([ys, ring.mul_table[c, ys], G])
    return LinearCode(ring, base.n + 2, np.vstack([top, body]))


def _gray_rows(G):
    out = np.empty((2 * G.shape[0], 2 * G.shape[1]), dtype=np.uint8)
    for i, row in enumerate(G):
        out[2 * i] = gray_map(F2U, row)
        out[2 * i + 1] = gray_map(F2U, F2U.mul_table[2, row])
    return out


def gray_image_code(code):
    """Binary image of a code over F2+uF2.

    The image of a free rank-k code is the binary code of length 2n
    generated by the 2k rows phi(r_i), phi(u * r_i).
    """
    if code.ring is not F2U:
        raise DomainError(f"gray image needs a code over F2U, not {code.ring.kind}")
    return LinearCode(F2, 2 * code.n, _gray_rows(code.generator))
