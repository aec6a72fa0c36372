"""Four-block generator-matrix constructions for self-dual codes.

Three 4x4 block arrays are supported, each assembling four
lambda-circulant n x n blocks A, B, C, D into a generator [I_4n | M]
of a length-8n code:

  "I"   the short Kharaghani array,
  "II"  a variation of it with transposed A, B blocks in rows 2 and 4,
  "GS"  the Goethals-Seidel array.

Each array comes with duality conditions on the blocks; when they hold
the generated code is self-dual.  Condition checks are cheap and are
reported with residual matrices so searches can reject candidates
before assembling anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import DomainError, format_symbols, parse_symbols
from .codes import LinearCode
from .matrices import (
    back_diagonal,
    batch_circulant,
    batch_mat_mul,
    identity,
    lambda_circulant,
    mat_add,
    mat_mul,
    mat_neg,
)

__all__ = [
    "CirculantQuad",
    "ConditionReport",
    "ConstructionError",
    "check_conditions_i",
    "check_conditions_ii",
    "check_conditions_gs",
    "build_construction_i",
    "build_construction_ii",
    "build_goethals_seidel",
    "batch_condition_mask",
    "CONSTRUCTIONS",
]


@dataclass(frozen=True)
class CirculantQuad:
    """Seed of every construction: four first rows over one ring.

    Rows are stored as tuples of element codes so a quad is an
    immutable value that workers can share freely.
    """

    ring: object
    n: int
    lam: int
    ra: tuple
    rb: tuple
    rc: tuple
    rd: tuple

    def __post_init__(self):
        if not self.ring.is_unit(self.lam):
            raise DomainError(
                f"lambda {self.ring.format_element(self.lam)} is not a unit in {self.ring.kind}"
            )
        for name, row in zip("abcd", self.rows):
            if len(row) != self.n:
                raise DomainError(f"r{name.upper()} has length {len(row)}, expected n={self.n}")
            self.ring.vector(row)

    @property
    def rows(self):
        return (self.ra, self.rb, self.rc, self.rd)

    @classmethod
    def from_strings(cls, ring, lam, ra, rb, rc, rd, n=None):
        """Build a quad from symbol strings, e.g. from a table row."""
        lam_code = int(parse_symbols(lam, ring)[0]) if isinstance(lam, str) else int(lam)
        rows = [tuple(int(v) for v in parse_symbols(r, ring)) for r in (ra, rb, rc, rd)]
        if n is None:
            n = len(rows[0])
        return cls(ring, n, lam_code, *rows)

    def row_strings(self):
        return tuple(format_symbols(self.ring, np.array(r, np.uint8)) for r in self.rows)

    def blocks(self):
        """The four lambda-circulant matrices A, B, C, D."""
        return tuple(
            lambda_circulant(self.ring, self.lam, np.array(r, np.uint8)) for r in self.rows
        )


@dataclass
class ConditionReport:
    """Outcome of a duality-condition check, with residuals on failure."""

    gram_ok: bool
    skew_ok: bool
    residuals: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.gram_ok and self.skew_ok


class ConstructionError(Exception):
    """Raised when a build is attempted on a quad that fails its conditions."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _gram_residual(ring, A, B, C, D):
    # residual of AA^T + BB^T + CC^T + DD^T = -I, i.e. the sum plus I
    n = A.shape[0]
    s = mat_add(ring, mat_mul(ring, A, A.T), mat_mul(ring, B, B.T))
    s = mat_add(ring, s, mat_mul(ring, C, C.T))
    s = mat_add(ring, s, mat_mul(ring, D, D.T))
    return mat_add(ring, s, identity(n))


def check_conditions_i(quad):
    """Conditions of the short Kharaghani array.

    gram_ok: AA^T + BB^T + CC^T + DD^T = -I_n
    skew_ok: AB^T - BA^T - CD^T + DC^T = 0
    """
    ring = quad.ring
    A, B, C, D = quad.blocks()
    gram = _gram_residual(ring, A, B, C, D)
    skew = mat_add(ring, mat_mul(ring, A, B.T), mat_neg(ring, mat_mul(ring, B, A.T)))
    skew = mat_add(ring, skew, mat_neg(ring, mat_mul(ring, C, D.T)))
    skew = mat_add(ring, skew, mat_mul(ring, D, C.T))
    report = ConditionReport(gram_ok=not gram.any(), skew_ok=not skew.any())
    if not report.gram_ok:
        report.residuals["gram"] = gram
    if not report.skew_ok:
        report.residuals["skew"] = skew
    return report


def check_conditions_ii(quad):
    """Conditions of the variant array; requires lambda^2 = 1.

    gram_ok: AA^T + BB^T + CC^T + DD^T = -I_n
    skew_ok: CD^T - DC^T = 0  and  -ADR + BCR - CRB + DRA = 0

    The second skew condition is implemented exactly as stated, with no
    transposes on the CRB and DRA terms; reproducing the published
    tables validates this reading.
    """
    ring = quad.ring
    if ring.mul(quad.lam, quad.lam) != 1:
        raise DomainError(
            f"construction II needs lambda^2 = 1; lambda={ring.format_element(quad.lam)}"
        )
    A, B, C, D = quad.blocks()
    R = back_diagonal(quad.n)
    CR = mat_mul(ring, C, R)
    DR = mat_mul(ring, D, R)
    gram = _gram_residual(ring, A, B, C, D)
    cd = mat_add(ring, mat_mul(ring, C, D.T), mat_neg(ring, mat_mul(ring, D, C.T)))
    cross = mat_add(ring, mat_neg(ring, mat_mul(ring, A, DR)), mat_mul(ring, B, CR))
    cross = mat_add(ring, cross, mat_neg(ring, mat_mul(ring, CR, B)))
    cross = mat_add(ring, cross, mat_mul(ring, DR, A))
    report = ConditionReport(
        gram_ok=not gram.any(), skew_ok=not cd.any() and not cross.any()
    )
    if not report.gram_ok:
        report.residuals["gram"] = gram
    if cd.any():
        report.residuals["cd"] = cd
    if cross.any():
        report.residuals["cross"] = cross
    return report


def check_conditions_gs(quad):
    """Condition of the Goethals-Seidel array: the Gram identity alone."""
    ring = quad.ring
    A, B, C, D = quad.blocks()
    gram = _gram_residual(ring, A, B, C, D)
    report = ConditionReport(gram_ok=not gram.any(), skew_ok=True)
    if not report.gram_ok:
        report.residuals["gram"] = gram
    return report


def _assemble(ring, blocks):
    M = np.concatenate([np.concatenate(row, axis=1) for row in blocks], axis=0)
    k = M.shape[0]
    G = np.concatenate([identity(k), M], axis=1)
    return LinearCode(ring, 2 * k, G, standard_form=True)


def _checked(quad, checker, unchecked, label):
    if unchecked:
        return None
    report = checker(quad)
    if not report.ok:
        raise ConstructionError(
            f"duality conditions of construction {label} fail for the given quad "
            f"(gram_ok={report.gram_ok}, skew_ok={report.skew_ok})",
            report=report,
        )
    return report


def build_construction_i(quad, unchecked=False):
    """Generator [I_4n | M] from the short Kharaghani array."""
    _checked(quad, check_conditions_i, unchecked, "I")
    ring = quad.ring
    A, B, C, D = quad.blocks()
    R = back_diagonal(quad.n)
    CR = mat_mul(ring, C, R)
    DR = mat_mul(ring, D, R)
    ng = lambda X: mat_neg(ring, X)
    return _assemble(
        ring,
        [
            [A, B, CR, DR],
            [ng(B), A, DR, ng(CR)],
            [ng(CR), ng(DR), A, B],
            [ng(DR), CR, ng(B), A],
        ],
    )


def build_construction_ii(quad, unchecked=False):
    """Generator [I_4n | M] from the variant array (transposed A, B rows)."""
    _checked(quad, check_conditions_ii, unchecked, "II")
    ring = quad.ring
    A, B, C, D = quad.blocks()
    R = back_diagonal(quad.n)
    CR = mat_mul(ring, C, R)
    DR = mat_mul(ring, D, R)
    AT = np.ascontiguousarray(A.T)
    BT = np.ascontiguousarray(B.T)
    ng = lambda X: mat_neg(ring, X)
    return _assemble(
        ring,
        [
            [A, B, CR, DR],
            [ng(BT), AT, DR, ng(CR)],
            [ng(CR), ng(DR), A, B],
            [ng(DR), CR, ng(BT), AT],
        ],
    )


def build_goethals_seidel(quad, unchecked=False):
    """Generator [I_4n | M] from the Goethals-Seidel array."""
    _checked(quad, check_conditions_gs, unchecked, "GS")
    ring = quad.ring
    A, B, C, D = quad.blocks()
    R = back_diagonal(quad.n)
    BR = mat_mul(ring, B, R)
    CR = mat_mul(ring, C, R)
    DR = mat_mul(ring, D, R)
    BTR = mat_mul(ring, np.ascontiguousarray(B.T), R)
    CTR = mat_mul(ring, np.ascontiguousarray(C.T), R)
    DTR = mat_mul(ring, np.ascontiguousarray(D.T), R)
    ng = lambda X: mat_neg(ring, X)
    return _assemble(
        ring,
        [
            [A, BR, CR, DR],
            [ng(BR), A, DTR, ng(CTR)],
            [ng(CR), ng(DTR), A, BTR],
            [ng(DR), CTR, ng(BTR), A],
        ],
    )


CONSTRUCTIONS = {
    "I": (check_conditions_i, build_construction_i),
    "II": (check_conditions_ii, build_construction_ii),
    "GS": (check_conditions_gs, build_goethals_seidel),
}


# ---- batched condition scan (search hot path) ---------------------------


def batch_condition_mask(ring, lam, RA, RB, RC, RD, construction):
    """Boolean mask of candidates whose duality conditions hold.

    RA..RD are (N, n) stacks of first rows (RC/RD may have N=1 and are
    broadcast).  Works directly from first rows: circulants, their
    Grams and the skew terms are evaluated for the whole stack at once.
    """
    if construction not in CONSTRUCTIONS:
        raise DomainError(f"unknown construction {construction!r}")
    if construction == "II" and ring.mul(lam, lam) != 1:
        raise DomainError("construction II needs lambda^2 = 1")

    stacks = [np.atleast_2d(np.asarray(r, dtype=np.uint8)) for r in (RA, RB, RC, RD)]
    N = max(s.shape[0] for s in stacks)
    stacks = [np.broadcast_to(s, (N, s.shape[1])) for s in stacks]
    A, B, C, D = (batch_circulant(ring, lam, s) for s in stacks)
    AT, BT, CT, DT = (np.ascontiguousarray(X.transpose(0, 2, 1)) for X in (A, B, C, D))

    madd = lambda X, Y: ring.add_table[X, Y]
    mneg = lambda X: ring.neg_table[X]
    mm = lambda X, Y: batch_mat_mul(ring, X, Y)

    n = A.shape[1]
    gram = madd(madd(mm(A, AT), mm(B, BT)), madd(mm(C, CT), mm(D, DT)))
    gram = madd(gram, np.broadcast_to(identity(n), gram.shape))
    mask = ~gram.any(axis=(1, 2))

    if construction == "GS":
        return mask

    if construction == "I":
        skew = madd(mm(A, BT), mneg(mm(B, AT)))
        skew = madd(skew, madd(mneg(mm(C, DT)), mm(D, CT)))
        return mask & ~skew.any(axis=(1, 2))

    # construction II; X*R is a column reversal of X
    CR = C[:, :, ::-1]
    DR = D[:, :, ::-1]
    cd = madd(mm(C, DT), mneg(mm(D, CT)))
    cross = madd(mneg(mm(A, DR)), mm(B, CR))
    cross = madd(cross, madd(mneg(mm(CR, B)), mm(DR, A)))
    return mask & ~cd.any(axis=(1, 2)) & ~cross.any(axis=(1, 2))
