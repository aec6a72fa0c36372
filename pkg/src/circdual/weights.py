"""Weight distributions, minimum distances and enumerator classification.

The binary engine enumerates all 2^k codewords exactly (bit-packed,
Gray-code order, internally parallel over message-space partitions);
ternary codes get an exact minimum distance by information-set
enumeration.  Weight enumerators of lengths 64 and 68 are classified
into the four published families

    W64_1:  A12 = 1312 + 16b,  A14 = 22016 - 64b          (14 <= b <= 284)
    W64_2:  A12 = 1312 + 16b,  A14 = 23040 - 64b          (0 <= b <= 277)
    W68_1:  A12 = 442 + 4b,    A14 = 10864 - 8b           (104 <= b <= 1358)
    W68_2:  A12 = 442 + 4b,    A14 = 14960 - 8b - 256g    (0 <= g <= 11,
                                                           14g <= b <= 1870 - 32g)

and checked for novelty against a shipped table of parameter sets with
previously known codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import _kernels, _ternary
from .algebra import DomainError, F2, F2U, F3
from .codes import LinearCode, ResourceRefusal, gray_image_code

__all__ = [
    "ClassificationError",
    "WeightReport",
    "EnumeratorClass",
    "KnownParameterTable",
    "weight_distribution",
    "binary_image_report",
    "min_distance_ternary",
    "classify",
    "classify_counts",
    "enumerator_counts",
    "is_extremal",
    "is_extremal_ternary",
    "load_known_table",
    "novelty_check",
]

ENUMERATION_K_LIMIT = 40
TERNARY_K_LIMIT = 30


class ClassificationError(ValueError):
    """Counts fit no known enumerator family; carries the raw counts."""

    def __init__(self, message, a12=None, a14=None):
        super().__init__(message)
        self.a12 = a12
        self.a14 = a14


@dataclass
class EnumeratorClass:
    family: str
    beta: int
    gamma: int | None = None
    in_published_range: bool = True

    def key(self):
        return (self.family, self.gamma, self.beta)


@dataclass
class WeightReport:
    """Exact weight data of one code.

    counts is the full distribution A_0..A_n for binary codes and None
    for ternary codes, where only the minimum distance (and optionally
    the number of minimum-weight words) is computed.
    """

    n: int
    k: int
    counts: np.ndarray | None
    d: int | None
    type_two: bool | None = None
    classification: EnumeratorClass | None = None
    min_words: int | None = None

    def a(self, i):
        return int(self.counts[i]) if self.counts is not None else None


def weight_distribution(code, threads=None, engine="auto"):
    """Full weight distribution of a binary code by exact enumeration."""
    if code.ring is not F2:
        raise DomainError(f"weight_distribution needs a binary code, not {code.ring.kind}")
    k, n = code.k, code.n
    if k > ENUMERATION_K_LIMIT:
        raise ResourceRefusal(
            f"k={k} exceeds the 2^{ENUMERATION_K_LIMIT} enumeration bound; "
            "this engine computes full distributions only"
        )
    if k and _kernels.gf2_rank(code.generator) != k:
        raise DomainError("generator is rank deficient; counts would not be codeword counts")
    counts = _kernels.weight_histogram(code.generator, threads=threads, engine=engine)
    nz = np.nonzero(counts[1:])[0]
    d = int(nz[0]) + 1 if nz.size else None
    type_two = bool(all(counts[i] == 0 for i in range(n + 1) if i % 4))
    return WeightReport(n=n, k=k, counts=counts, d=d, type_two=type_two)


def binary_image_report(code, threads=None, engine="auto"):
    """Weight report of the code itself (F2) or of its Gray image (F2U)."""
    if code.ring is F2:
        return weight_distribution(code, threads=threads, engine=engine)
    if code.ring is F2U:
        return weight_distribution(gray_image_code(code), threads=threads, engine=engine)
    raise DomainError(f"no binary image for a code over {code.ring.kind}")


def min_distance_ternary(code, count_min_words=False):
    """Exact minimum distance of a ternary code.

    Returns d, or (d, count) with the number of weight-d words when
    count_min_words is set.
    """
    if code.ring is not F3:
        raise DomainError(f"min_distance_ternary needs a ternary code, not {code.ring.kind}")
    if code.k > TERNARY_K_LIMIT:
        raise ResourceRefusal(f"k={code.k} exceeds the ternary bound {TERNARY_K_LIMIT}")
    d, count = _ternary.min_distance_f3(code.generator, count_words=count_min_words)
    return (d, count) if count_min_words else d


# ---- enumerator families -------------------------------------------------


def enumerator_counts(family, beta, gamma=None):
    """(A12, A14) synthesized from a family's formulas."""
    if family == "W64_1":
        return 1312 + 16 * beta, 22016 - 64 * beta
    if family == "W64_2":
        return 1312 + 16 * beta, 23040 - 64 * beta
    if family == "W68_1":
        return 442 + 4 * beta, 10864 - 8 * beta
    if family == "W68_2":
        if gamma is None:
            raise DomainError("W68_2 needs gamma")
        return 442 + 4 * beta, 14960 - 8 * beta - 256 * gamma
    raise DomainError(f"unknown family {family!r}")


def classify_counts(n, a12, a14):
    """Resolve (A12, A14) of a length 64 or 68 code into a family."""
    a12, a14 = int(a12), int(a14)
    if n == 64:
        beta, rem = divmod(a12 - 1312, 16)
        if rem:
            raise ClassificationError(
                f"A12={a12} does not fit 1312 + 16*beta", a12=a12, a14=a14
            )
        if a14 == 22016 - 64 * beta:
            return EnumeratorClass("W64_1", beta, None, 14 <= beta <= 284)
        if a14 == 23040 - 64 * beta:
            return EnumeratorClass("W64_2", beta, None, 0 <= beta <= 277)
        raise ClassificationError(
            f"A14={a14} matches neither length-64 family at beta={beta}",
            a12=a12,
            a14=a14,
        )
    if n == 68:
        beta, rem = divmod(a12 - 442, 4)
        if rem:
            raise ClassificationError(
                f"A12={a12} does not fit 442 + 4*beta", a12=a12, a14=a14
            )
        gamma_num = 14960 - 8 * beta - a14
        gamma, grem = divmod(gamma_num, 256)
        if grem == 0 and 0 <= gamma <= 11:
            ok = 14 * gamma <= beta <= 1870 - 32 * gamma
            return EnumeratorClass("W68_2", beta, int(gamma), ok)
        if a14 == 10864 - 8 * beta:
            return EnumeratorClass("W68_1", beta, None, 104 <= beta <= 1358)
        raise ClassificationError(
            f"A14={a14} matches neither length-68 family at beta={beta}",
            a12=a12,
            a14=a14,
        )
    raise ClassificationError(f"no enumerator families for length {n}")


def classify(report):
    """Classify a WeightReport of a [64,32] or [68,34] binary code."""
    if (report.n, report.k) not in ((64, 32), (68, 34)):
        raise ClassificationError(
            f"classification covers [64,32] and [68,34], not [{report.n},{report.k}]"
        )
    if report.counts is None:
        raise ClassificationError("report has no distribution")
    return classify_counts(report.n, report.counts[12], report.counts[14])


# ---- extremality bounds ----------------------------------------------------


def is_extremal(n, d, type_two):
    """True iff d meets the binary self-dual bound for length n."""
    if type_two:
        bound = 4 * (n // 24) + 4
    elif n % 24 == 22:
        bound = 4 * (n // 24) + 6
    else:
        bound = 4 * (n // 24) + 4
    if d > bound:
        raise DomainError(f"d={d} exceeds the self-dual bound {bound} for n={n}")
    return d == bound


def is_extremal_ternary(n, d):
    """True iff d meets the ternary self-dual bound 3*floor(n/12) + 3."""
    if n % 4:
        raise DomainError(f"ternary self-dual codes have length divisible by 4, got {n}")
    bound = 3 * (n // 12) + 3
    if d > bound:
        raise DomainError(f"d={d} exceeds the ternary bound {bound} for n={n}")
    return d == bound


# ---- known-parameter table --------------------------------------------------

_FAMILIES = ("W64_1", "W64_2", "W68_1", "W68_2")


@dataclass
class KnownParameterTable:
    """Published (family, gamma, beta) sets with exact membership.

    Ambiguously transcribed entries (unclear list boundaries in the
    source) are kept separately; hits on them report as
    "ambiguous-known" instead of "known".
    """

    exact: frozenset
    ambiguous: tuple

    def lookup(self, family, beta, gamma=None):
        if (family, gamma, beta) in self.exact:
            return "known"
        for fam, gam, lo, hi in self.ambiguous:
            if fam == family and gam == gamma and lo <= beta <= hi:
                return "ambiguous"
        return "absent"


def _parse_known_lines(lines, exact, ambiguous):
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (3, 4):
            raise ValueError(f"line {lineno}: expected 'family gamma beta [flag]': {raw!r}")
        family, gamma_s, beta_s = parts[:3]
        flag = parts[3] if len(parts) == 4 else None
        if family not in _FAMILIES:
            raise ValueError(f"line {lineno}: unknown family {family!r}")
        gamma = None if gamma_s == "-" else int(gamma_s)
        if ".." in beta_s:
            if flag != "ambiguous":
                raise ValueError(f"line {lineno}: beta spans are only for ambiguous entries")
            lo, hi = (int(v) for v in beta_s.split("..", 1))
            ambiguous.append((family, gamma, lo, hi))
        elif flag == "ambiguous":
            ambiguous.append((family, gamma, int(beta_s), int(beta_s)))
        else:
            exact.add((family, gamma, int(beta_s)))


def _corpus_text(name):
    return (resources.files("circdual") / "corpus" / name).read_text()


def load_known_table(path=None, include_additions=False):
    """Load the known-parameter table.

    Without `path` the bundled transcription is used; passing
    include_additions also merges the 2016 batch of 27 length-68
    parameter sets, which ships behind this flag so novelty can be
    judged against either state of the literature.
    """
    exact = set()
    ambiguous = []
    if path is not None:
        with open(path) as fh:
            _parse_known_lines(fh, exact, ambiguous)
    else:
        _parse_known_lines(_corpus_text("known_enumerators.txt").splitlines(), exact, ambiguous)
        if include_additions:
            _parse_known_lines(
                _corpus_text("known_additions_2016.txt").splitlines(), exact, ambiguous
            )
    return KnownParameterTable(exact=frozenset(exact), ambiguous=tuple(ambiguous))


def novelty_check(cls, table):
    """Verdict for a classified enumerator against a known table.

    One of "known", "new", "out_of_family" or "ambiguous-known".
    """
    if not cls.in_published_range:
        return "out_of_family"
    hit = table.lookup(cls.family, cls.beta, cls.gamma)
    if hit == "known":
        return "known"
    if hit == "ambiguous":
        return "ambiguous-known"
    return "new"
